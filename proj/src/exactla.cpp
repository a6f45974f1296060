#include "gravop/exactla.hpp"

#include <algorithm>
#include <stdexcept>

#include "gravop/profile.hpp"

namespace gravop::exactla {

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

SparseRow to_sparse(const std::vector<Int>& dense) {
    SparseRow row;
    for (std::size_t c = 0; c < dense.size(); ++c)
        if (dense[c] != 0) row.emplace_back(c, dense[c]);
    return row;
}

std::vector<Int> to_dense(const SparseRow& row, std::size_t cols) {
    std::vector<Int> dense(cols);
    for (auto& [c, v] : row) dense.at(c) = v;
    return dense;
}

namespace {

Int content(const SparseRow& row) {
    Int g = 0;
    for (auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

// a := (pivot_lead * a - a_lead * pivot) / content, cancelling column `col`.
SparseRow eliminate(const SparseRow& a, const Int& a_coeff, const SparseRow& pivot,
                    const Int& pivot_lead) {
    SparseRow out;
    out.reserve(a.size() + pivot.size());
    auto ia = a.begin(), ip = pivot.begin();
    while (ia != a.end() || ip != pivot.end()) {
        if (ip == pivot.end() || (ia != a.end() && ia->first < ip->first)) {
            out.emplace_back(ia->first, pivot_lead * ia->second);
            ++ia;
        } else if (ia == a.end() || ip->first < ia->first) {
            out.emplace_back(ip->first, -a_coeff * ip->second);
            ++ip;
        } else {
            Int v = pivot_lead * ia->second - a_coeff * ip->second;
            if (v != 0) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ip;
        }
    }
    return out;
}

} // namespace

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    Int g = content(row);
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) v /= g;
}

bool RowEchelon::add_row(SparseRow row) {
    make_primitive(row);
    while (!row.empty()) {
        // Reduce at the smallest pivot-covered column of the row.
        auto hit = row.end();
        std::map<std::size_t, SparseRow>::const_iterator piv;
        for (auto it = row.begin(); it != row.end(); ++it) {
            auto p = pivots_.find(it->first);
            if (p != pivots_.end()) {
                hit = it;
                piv = p;
                break;
            }
        }
        if (hit == row.end()) break;
        row = eliminate(row, hit->second, piv->second, piv->second.front().second);
        make_primitive(row);
    }
    if (row.empty()) return false;
    std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

std::pair<Int, SparseRow> RowEchelon::reduce(SparseRow v) const {
    Int scale = 1;
    // Content reduction only; the sign of v must be preserved.
    if (Int g = content(v); g > 1)
        for (auto& [c, val] : v) val /= g;
    for (;;) {
        auto hit = v.end();
        std::map<std::size_t, SparseRow>::const_iterator piv;
        for (auto it = v.begin(); it != v.end(); ++it) {
            auto p = pivots_.find(it->first);
            if (p != pivots_.end()) {
                hit = it;
                piv = p;
                break;
            }
        }
        if (hit == v.end()) break;
        const Int& lead = piv->second.front().second;
        v = eliminate(v, hit->second, piv->second, lead);
        scale *= lead;
        // Keep the pair (scale, v) reduced by the common content.
        Int g = boost::multiprecision::gcd(content(v), scale);
        if (g > 1) {
            for (auto& [c, val] : v) val /= g;
            scale /= g;
        }
    }
    if (scale < 0) {
        scale = -scale;
        for (auto& [c, val] : v) val = -val;
    }
    return {std::move(scale), std::move(v)};
}

bool RowEchelon::contains(const SparseRow& v) const { return reduce(v).second.empty(); }

std::size_t rank(const IntMatrix& m) {
    RowEchelon ech(m.cols);
    std::vector<Int> row(m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
        ech.add_row(to_sparse(row));
    }
    return ech.rank();
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
    RowEchelon ech(m.cols);
    {
        std::vector<Int> row(m.cols);
        for (std::size_t r = 0; r < m.rows; ++r) {
            for (std::size_t c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
            ech.add_row(to_sparse(row));
        }
    }
    const auto& pivots = ech.pivot_rows();
    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (pivots.count(f)) continue;
        // Free column: x_f = 1, other free columns 0; back-substitute pivot
        // unknowns in decreasing column order. Each pivot row has its leading
        // entry at the pivot column and all other support strictly beyond it.
        std::vector<Rat> x(m.cols, Rat(0));
        x[f] = 1;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const auto& [col, row] = *it;
            Rat acc = 0;
            for (std::size_t k = 1; k < row.size(); ++k)
                acc += Rat(row[k].second) * x[row[k].first];
            x[col] = -acc / Rat(row.front().second);
        }
        // Scale to a primitive integer vector with positive leading entry.
        Int lcm = 1;
        for (auto& q : x) lcm = boost::multiprecision::lcm(lcm, denominator(q));
        std::vector<Int> vi(m.cols);
        for (std::size_t c = 0; c < m.cols; ++c) vi[c] = numerator(x[c]) * (lcm / denominator(x[c]));
        SparseRow sr = to_sparse(vi);
        make_primitive(sr);
        basis.push_back(to_dense(sr, m.cols));
    }
    return basis;
}

bool in_span(const std::vector<Int>& v, const std::vector<std::vector<Int>>& basis) {
    for (const auto& b : basis)
        if (b.size() != v.size()) throw std::invalid_argument("in_span: vector length mismatch");
    RowEchelon ech(v.size());
    for (const auto& b : basis) ech.add_row(to_sparse(b));
    return ech.contains(to_sparse(v));
}

std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Int>>& vectors,
                                              const std::vector<Int>& target) {
    if (vectors.empty()) {
        for (auto& t : target)
            if (t != 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    const std::size_t n = target.size();
    const std::size_t k = vectors.size();
    // Augment each vector with an identity tag; reduce the target and read the
    // combination off the tag columns.
    RowEchelon ech(n + k);
    for (std::size_t i = 0; i < k; ++i) {
        if (vectors[i].size() != n) throw std::invalid_argument("solve_in_span: length mismatch");
        SparseRow row = to_sparse(vectors[i]);
        row.emplace_back(n + i, Int(1));
        ech.add_row(std::move(row));
    }
    auto [scale, residual] = ech.reduce(to_sparse(target));
    // scale * target - combo . vectors = 0 iff the residual is supported on
    // the tag columns only; the tag entries are then -combo.
    std::vector<Rat> coeffs(k, Rat(0));
    for (auto& [c, val] : residual) {
        if (c < n) return std::nullopt;
        coeffs[c - n] = -Rat(val) / Rat(scale);
    }
    return coeffs;
}

} // namespace gravop::exactla

namespace gravop {

std::string GradedRankProfile::to_polynomial_string() const {
    if (ranks_.empty()) return "0";
    std::string out;
    for (auto& [q, r] : ranks_) {
        if (!out.empty()) out += " + ";
        if (r != 1 || q == 0) out += std::to_string(r);
        if (q == 1)
            out += "t";
        else if (q != 0)
            out += "t^" + std::to_string(q);
    }
    return out;
}

} // namespace gravop
