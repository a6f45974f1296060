#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gravop::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> details; // one line per failing or notable item
};

/// 1. Configuration-ring ranks equal the falling product (1+q)(1+2q)... and
///    the independent relation-span oracle, all n <= max_n, d <= max_d.
CheckResult check_poincare_products(int max_n, int max_d);

/// 2. Quotient-ring ranks: th = Z[c]/(c^d) tensor fiber, total d n!/2.
CheckResult check_th_tensor_structure(int max_n, int max_d);

/// 3. Kernel of the top derivation equals the y-subalgebra per degree, and
///    Y + Y x_12 bases the configuration ring per degree.
CheckResult check_kernel_equals_Y_and_splitting(int max_n, int max_d);

/// 4. delta^2 = 0, the pairwise and recursive routes agree, and the operadic
///    derivation identity holds on exhaustive basis pairs up to the combined
///    arity bound.
CheckResult check_delta_operator(int max_arity, int max_d);

/// 5. rank(ker delta) = rank(im delta) in every arity and degree, and the
///    kernel profile is the fiber profile shifted by the bracket degree.
CheckResult check_kernel_equals_image(int max_n, int max_d);

/// 6. The bracket relation for all k >= 2, l >= 1 with k+l-1 <= max_total,
///    every parity vector, d <= max_d.
CheckResult check_gravity_relations(int max_total, int max_d);

/// 7. Rank-level main comparison: gravity profile = suspended quotient-space
///    homology profile, all n <= max_n, d <= max_d.
CheckResult check_main_theorem(int max_n, int max_d);

/// 8. d = 1 regression: gravity profile matches the shifted moduli ranks.
CheckResult check_getzler_regression(int max_n);

/// 9. Confluence: random generator products reduce identically under the
///    deterministic and two randomized strategies and match the
///    linear-algebra oracle.
CheckResult check_confluence(int max_n, int max_d, int samples, std::uint64_t seed);

/// All nine in order, with the desk-scale defaults from the parameters.
std::vector<CheckResult> run_all(int max_n, int max_d, int samples = 1000,
                                 std::uint64_t seed = 0x67726176);

} // namespace gravop::checks
