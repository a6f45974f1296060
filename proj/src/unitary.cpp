#include "gravop/unitary.hpp"

#include <stdexcept>

namespace gravop::unitary {

using arnold::Flavor;
using arnold::Gen;
using arnold::Monomial;
using arnold::RingDescriptor;
using arnold::RingElement;
using arnold::TermKey;

void DerivationOperator::validate() const {
    target.validate();
    if (target.flavor != Flavor::conf)
        throw std::invalid_argument("derivations act on the conf ring");
    if (k < 1 || k > target.d) throw std::invalid_argument("derivation index out of range");
}

RingElement apply_delta_star(const DerivationOperator& op, const RingElement& e) {
    op.validate();
    if (e.descriptor() != op.target) throw std::invalid_argument("descriptor mismatch");
    RingElement out(e.descriptor());
    if (op.k < op.target.d) return out; // null for degree reasons
    for (auto& [key, coeff] : e.terms()) {
        // Each generator has odd degree, so skipping t-1 factors costs
        // (-1)^(t-1); dropping a factor keeps the monomial in basis form.
        const auto& f = key.mono.factors;
        for (std::size_t t = 0; t < f.size(); ++t) {
            Monomial m;
            m.factors.reserve(f.size() - 1);
            for (std::size_t s = 0; s < f.size(); ++s)
                if (s != t) m.factors.push_back(f[s]);
            out.add_term(TermKey{key.c_exp, std::move(m)}, t % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

RingElement delta_star(const RingElement& e) {
    DerivationOperator op{e.descriptor().d, e.descriptor()};
    return apply_delta_star(op, e);
}

exactla::IntMatrix delta_star_matrix(int n, int d, int degree) {
    RingDescriptor desc{n, d, Flavor::conf};
    const auto src = basis_in_degree(desc, degree);
    const auto dst = basis_in_degree(desc, degree - (2 * d - 1));
    exactla::IntMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        RingElement e(desc);
        e.add_term(src[c], 1);
        auto img = delta_star(e);
        auto coords = img.coordinates(dst);
        for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, c) = coords[r];
    }
    return m;
}

std::vector<RingElement> kernel_basis_degree(int n, int d, int degree) {
    RingDescriptor desc{n, d, Flavor::conf};
    const auto src = basis_in_degree(desc, degree);
    std::vector<RingElement> out;
    if (src.empty()) return out;
    auto kernel = exactla::kernel_basis(delta_star_matrix(n, d, degree));
    for (auto& v : kernel) {
        RingElement e(desc);
        for (std::size_t c = 0; c < src.size(); ++c) e.add_term(src[c], v[c]);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<RingElement> y_generators(int n, int d) {
    RingDescriptor desc{n, d, Flavor::conf};
    std::vector<RingElement> out;
    std::vector<Gen> pairs;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            pairs.push_back(Gen{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
    std::sort(pairs.begin(), pairs.end());
    for (auto& g : pairs) {
        if (g.i == 1 && g.j == 2) continue;
        out.push_back(arnold::y_element(desc, g.i, g.j));
    }
    return out;
}

std::vector<RingElement> y_products(int n, int d, int m) {
    RingDescriptor desc{n, d, Flavor::conf};
    std::vector<RingElement> out;
    if (m < 0) return out;
    if (m == 0) {
        out.push_back(RingElement::one(desc));
        return out;
    }
    auto gens = y_generators(n, d);
    // Products over m-subsets in lexicographic order; squares vanish, so
    // distinct factors suffice to span.
    std::vector<std::size_t> pick(m);
    std::vector<RingElement> partial;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            RingElement prod = RingElement::one(desc);
            for (auto idx : pick) prod = arnold::multiply(prod, gens[idx]);
            out.push_back(std::move(prod));
            return;
        }
        for (std::size_t g = from; g + left <= gens.size(); ++g) {
            pick[m - left] = g;
            self(self, g + 1, left - 1);
        }
    };
    rec(rec, 0, m);
    return out;
}

namespace {

// Independent subset of the given elements (greedy, in order), together with
// the echelon of their coordinate vectors.
struct SpanData {
    std::vector<RingElement> basis;
    std::vector<std::vector<Int>> vectors;
    std::size_t rank = 0;
};

SpanData independent_subset(const std::vector<RingElement>& elems,
                            const std::vector<TermKey>& coords) {
    SpanData data;
    exactla::RowEchelon ech(coords.size());
    for (auto& e : elems) {
        auto v = e.coordinates(coords);
        if (ech.add_row(exactla::to_sparse(v))) {
            data.basis.push_back(e);
            data.vectors.push_back(std::move(v));
        }
    }
    data.rank = ech.rank();
    return data;
}

} // namespace

KernelReport verify_kernel_equals_Y(int n, int d) {
    RingDescriptor desc{n, d, Flavor::conf};
    const int w = 2 * d - 1;
    const int top = (n - 1) * w;
    auto fiber = arnold::poincare(RingDescriptor{n, d, Flavor::fiber});
    KernelReport report{n, d, true, {}};
    for (int q = 0; q <= top; ++q) {
        auto ring_basis = basis_in_degree(desc, q);
        KernelDegreeRow row;
        row.degree = q;
        row.rank_ring = ring_basis.size();

        auto kernel = kernel_basis_degree(n, d, q);
        row.rank_kernel = kernel.size();

        bool ok = true;
        std::size_t fiber_rank = (q % w == 0) ? fiber.at(q) : 0;
        if (q % w == 0) {
            auto products = y_products(n, d, q / w);
            // (a) every y-product lies in the kernel.
            for (auto& p : products)
                if (!delta_star(p).is_zero()) ok = false;
            auto span = independent_subset(products, ring_basis);
            row.rank_Y = span.rank;
            // (b) each kernel basis vector is an integer combination of the
            // independent y-products.
            for (auto& kv : kernel) {
                auto sol = exactla::solve_in_span(span.vectors, kv.coordinates(ring_basis));
                if (!sol) {
                    ok = false;
                    continue;
                }
                for (auto& c : *sol)
                    if (denominator(c) != 1) ok = false;
            }
        } else {
            row.rank_Y = 0;
            if (!kernel.empty()) ok = false;
        }
        ok = ok && row.rank_kernel == row.rank_Y && row.rank_Y == fiber_rank;
        row.pass = ok;
        report.pass = report.pass && ok;
        report.rows.push_back(row);
    }
    return report;
}

SplittingReport verify_free_splitting(int n, int d) {
    RingDescriptor desc{n, d, Flavor::conf};
    const int w = 2 * d - 1;
    const int top = (n - 1) * w;
    auto x12 = RingElement::generator(desc, 1, 2);
    SplittingReport report{n, d, true, {}};
    for (int q = 0; q <= top; ++q) {
        auto ring_basis = basis_in_degree(desc, q);
        SplittingDegreeRow row;
        row.degree = q;
        row.rank_ring = ring_basis.size();

        std::vector<RingElement> pieces;
        if (q % w == 0)
            for (auto& e : independent_subset(y_products(n, d, q / w), ring_basis).basis)
                pieces.push_back(e);
        if (q >= w && (q - w) % w == 0) {
            auto lower = basis_in_degree(desc, q - w);
            for (auto& e :
                 independent_subset(y_products(n, d, (q - w) / w), lower).basis)
                pieces.push_back(arnold::multiply(x12, e));
        }
        row.count_union = pieces.size();
        exactla::RowEchelon ech(ring_basis.size());
        for (auto& e : pieces) ech.add_row(exactla::to_sparse(e.coordinates(ring_basis)));
        row.rank_union = ech.rank();
        row.pass = row.count_union == row.rank_ring && row.rank_union == row.rank_ring;
        report.pass = report.pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace gravop::unitary
