#pragma once

#include <vector>

#include "gravop/arnold.hpp"
#include "gravop/exactla.hpp"

namespace gravop::unitary {

/// The degree-lowering derivation induced on the configuration ring by the
/// index-k odd generator of the unitary-group homology. It lowers degree by
/// 2k-1, kills every generator for k < d, and sends every generator to 1 for
/// k = d. Koszul convention: D(ab) = D(a) b + (-1)^{|a|} a D(b).
struct DerivationOperator {
    int k = 1;
    arnold::RingDescriptor target; // flavor must be conf

    void validate() const;
    int degree_shift() const { return -(2 * k - 1); }
};

/// Apply the derivation termwise with Koszul signs.
arnold::RingElement apply_delta_star(const DerivationOperator& op, const arnold::RingElement& e);

/// Shorthand for the only nonzero case, k = d.
arnold::RingElement delta_star(const arnold::RingElement& e);

/// Matrix of the top derivation from conf degree q to degree q-(2d-1);
/// columns indexed by basis_in_degree(q), rows by basis_in_degree(q-(2d-1)).
exactla::IntMatrix delta_star_matrix(int n, int d, int degree);

/// Basis of ker(top derivation) in the stated cohomological degree, as
/// integer combinations of basis monomials (primitive vectors).
std::vector<arnold::RingElement> kernel_basis_degree(int n, int d, int degree);

/// The multiplicative generators y_ij = x_ij - x_12, (i,j) != (1,2), and the
/// products of m distinct ones; these span the subalgebra Y in degree
/// m*(2d-1).
std::vector<arnold::RingElement> y_generators(int n, int d);
std::vector<arnold::RingElement> y_products(int n, int d, int m);

struct KernelDegreeRow {
    int degree = 0;
    std::size_t rank_kernel = 0;
    std::size_t rank_Y = 0;
    std::size_t rank_ring = 0;
    bool pass = false;
};

struct KernelReport {
    int n = 0;
    int d = 0;
    bool pass = false;
    std::vector<KernelDegreeRow> rows;
};

/// Checks, degree by degree, that the subalgebra Y equals the kernel of the
/// top derivation: every y-product lies in the kernel, the ranks of kernel,
/// Y-span and fiber ring agree, and each kernel basis vector is an integer
/// combination of y-products.
KernelReport verify_kernel_equals_Y(int n, int d);

struct SplittingDegreeRow {
    int degree = 0;
    std::size_t rank_ring = 0;
    std::size_t count_union = 0;
    std::size_t rank_union = 0;
    bool pass = false;
};

struct SplittingReport {
    int n = 0;
    int d = 0;
    bool pass = false;
    std::vector<SplittingDegreeRow> rows;
};

/// Checks that (basis of Y in degree q) together with x_12 * (basis of Y in
/// degree q-(2d-1)) is a basis of the conf ring in degree q: the free
/// splitting over the exterior algebra on x_12.
SplittingReport verify_free_splitting(int n, int d);

} // namespace gravop::unitary
