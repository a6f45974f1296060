#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gravop/arnold.hpp"
#include "gravop/exactla.hpp"
#include "gravop/int.hpp"

namespace gravop::arnold_oracle {

/// Linear-algebra model of the configuration ring, independent of the term
/// rewriter: the degree-k component is the span of all k-fold products of
/// generators in the free exterior algebra, modulo the span of all
/// three-term relation instances (and x_12 when quotienting by it). Ranks and
/// reductions come from echelonizing that relation span; nothing here assumes
/// the basis-form monomials are independent.
class QuotientOracle {
public:
    /// n = number of points; quotient_x12 selects the fiber-ring model.
    explicit QuotientOracle(int n, bool quotient_x12 = false);

    int n() const { return n_; }

    /// Rank of the degree-k component (k = number of generator factors).
    std::size_t rank_in_factors(int k);

    /// Reduce a product of generators (indices in any order) to coordinates on
    /// the basis-form monomials of its degree. Throws if the relation span
    /// fails to cover some non-basis monomial or the reduction is not
    /// integral, neither of which happens for these rings.
    std::map<arnold::Monomial, Int> reduce_product(const std::vector<std::pair<int, int>>& factors);

private:
    struct DegreeData {
        std::vector<std::uint32_t> columns;          // monomial mask per column
        std::map<std::uint32_t, std::size_t> index;  // mask -> column
        std::size_t admissible_start = 0;            // non-basis columns come first
        exactla::RowEchelon echelon{0};
    };

    DegreeData& degree(int k);

    int n_;
    bool quotient_x12_;
    std::vector<arnold::Gen> gens_;            // all pairs, canonical order
    std::map<std::uint32_t, std::size_t> gen_index_;
    std::map<int, DegreeData> degrees_;
};

} // namespace gravop::arnold_oracle
