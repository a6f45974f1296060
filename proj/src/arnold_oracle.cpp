#include "gravop/arnold_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gravop::arnold_oracle {

using arnold::Gen;
using arnold::Monomial;

namespace {

bool mask_admissible(std::uint32_t mask, const std::vector<Gen>& gens) {
    int prev_larger = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (mask & (1u << g)) {
            if (gens[g].j == prev_larger) return false;
            prev_larger = gens[g].j;
        }
    return true;
}

// Sign of merging two disjoint sorted generator sets into one sorted product:
// parity of the number of pairs (p in a, q in b) with q < p.
int merge_sign(std::uint32_t a, std::uint32_t b) {
    int inv = 0;
    int seen_a = 0;
    for (int g = 31; g >= 0; --g) {
        if (a & (1u << g)) ++seen_a;
        if (b & (1u << g)) inv += seen_a;
    }
    return inv % 2 == 0 ? 1 : -1;
}

void enumerate_subsets(std::size_t total, int k, std::uint32_t acc, std::size_t from,
                       std::vector<std::uint32_t>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t g = from; g + k <= total; ++g)
        enumerate_subsets(total, k - 1, acc | (1u << g), g + 1, out);
}

} // namespace

QuotientOracle::QuotientOracle(int n, bool quotient_x12) : n_(n), quotient_x12_(quotient_x12) {
    if (n < 2) throw std::invalid_argument("oracle requires n >= 2");
    if (n > 8) throw std::invalid_argument("oracle supports n <= 8");
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            gens_.push_back(Gen{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
    std::sort(gens_.begin(), gens_.end());
    for (std::size_t g = 0; g < gens_.size(); ++g)
        gen_index_.emplace(static_cast<std::uint32_t>(gens_[g].i) |
                               (static_cast<std::uint32_t>(gens_[g].j) << 8),
                           g);
}

QuotientOracle::DegreeData& QuotientOracle::degree(int k) {
    auto it = degrees_.find(k);
    if (it != degrees_.end()) return it->second;

    DegreeData data;
    const std::size_t N = gens_.size();
    std::vector<std::uint32_t> all;
    enumerate_subsets(N, k, 0, 0, all);
    // Non-basis monomials first so elimination pivots land on them.
    for (auto m : all)
        if (!mask_admissible(m, gens_)) data.columns.push_back(m);
    data.admissible_start = data.columns.size();
    for (auto m : all)
        if (mask_admissible(m, gens_)) data.columns.push_back(m);
    for (std::size_t c = 0; c < data.columns.size(); ++c) data.index.emplace(data.columns[c], c);

    data.echelon = exactla::RowEchelon(data.columns.size());

    std::uint32_t x12_mask = 0;
    if (quotient_x12_) {
        auto g = gen_index_.find(1u | (2u << 8));
        x12_mask = 1u << g->second;
        // The ideal (x_12) contains every monomial with an x_12 factor.
        for (std::size_t c = 0; c < data.columns.size(); ++c)
            if (data.columns[c] & x12_mask) data.echelon.add_row({{c, Int(1)}});
    }

    if (k >= 2) {
        std::vector<std::uint32_t> rest;
        enumerate_subsets(N, k - 2, 0, 0, rest);
        for (int a = 1; a <= n_; ++a)
            for (int b = a + 1; b <= n_; ++b)
                for (int c = b + 1; c <= n_; ++c) {
                    // x_ab x_bc + x_bc x_ac + x_ac x_ab = 0 reads, in sorted
                    // exterior products, AC - BC - AB with A=(a,b), B=(a,c),
                    // C=(b,c).
                    auto A = 1u << gen_index_.at(static_cast<std::uint32_t>(a) | (b << 8));
                    auto B = 1u << gen_index_.at(static_cast<std::uint32_t>(a) | (c << 8));
                    auto C = 1u << gen_index_.at(static_cast<std::uint32_t>(b) | (c << 8));
                    const std::pair<std::uint32_t, int> parts[3] = {
                        {A | C, 1}, {B | C, -1}, {A | B, -1}};
                    for (auto m : rest) {
                        exactla::SparseRow row;
                        for (auto [pair_mask, coeff] : parts) {
                            if (m & pair_mask) continue;
                            std::size_t col = data.index.at(m | pair_mask);
                            row.emplace_back(col, Int(coeff * merge_sign(pair_mask, m)));
                        }
                        std::sort(row.begin(), row.end(),
                                  [](auto& x, auto& y) { return x.first < y.first; });
                        if (!row.empty()) data.echelon.add_row(std::move(row));
                    }
                }
    }

    return degrees_.emplace(k, std::move(data)).first->second;
}

std::size_t QuotientOracle::rank_in_factors(int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (k > static_cast<int>(gens_.size())) return 0;
    DegreeData& data = degree(k);
    return data.columns.size() - data.echelon.rank();
}

std::map<Monomial, Int> QuotientOracle::reduce_product(
    const std::vector<std::pair<int, int>>& factors) {
    std::vector<std::size_t> idx;
    for (auto [i, j] : factors) {
        if (i > j) std::swap(i, j);
        auto it = gen_index_.find(static_cast<std::uint32_t>(i) | (static_cast<std::uint32_t>(j) << 8));
        if (it == gen_index_.end()) throw std::invalid_argument("generator out of range");
        idx.push_back(it->second);
    }
    // Sort the factor list, tracking the anticommutation sign; a repeated
    // factor kills the product.
    int sign = 1;
    for (std::size_t a = 1; a < idx.size(); ++a)
        for (std::size_t b = a; b > 0 && idx[b] <= idx[b - 1]; --b) {
            if (idx[b] == idx[b - 1]) return {};
            std::swap(idx[b], idx[b - 1]);
            sign = -sign;
        }
    std::uint32_t mask = 0;
    for (auto g : idx) mask |= 1u << g;
    const int k = static_cast<int>(idx.size());
    if (k > static_cast<int>(gens_.size())) return {};

    DegreeData& data = degree(k);
    exactla::SparseRow v{{data.index.at(mask), Int(sign)}};
    auto [scale, residual] = data.echelon.reduce(std::move(v));

    std::map<Monomial, Int> out;
    for (auto& [col, val] : residual) {
        if (col < data.admissible_start)
            throw std::logic_error("oracle: non-basis monomial not covered by relations");
        if (val % scale != 0)
            throw std::logic_error("oracle: non-integral reduction");
        Monomial mono;
        std::uint32_t colmask = data.columns[col];
        for (std::size_t g = 0; g < gens_.size(); ++g)
            if (colmask & (1u << g)) mono.factors.push_back(gens_[g]);
        out.emplace(std::move(mono), val / scale);
    }
    return out;
}

} // namespace gravop::arnold_oracle
