#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gravop/exactla.hpp"
#include "gravop/int.hpp"
#include "gravop/profile.hpp"

namespace gravop::poisson {

namespace detail {
extern const int conv[10]; // sign-convention table, fixed by calibration
}

using Letter = std::uint8_t;

/// Left-normed Lie word [[...[x_m, x_{i2}], x_{i3}]..., x_{ik}] on a block of
/// letters, recorded as the sequence (m, i2, ..., ik) with m the minimum of
/// the block. These words, over all orderings of the non-minimal letters,
/// form the canonical basis of the multilinear Lie structure on the block.
struct LieWord {
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }
    /// Homological degree in units of the bracket degree 2d-1.
    int degree_units() const { return static_cast<int>(letters.size()) - 1; }
    int parity() const { return degree_units() % 2; } // bracket degree is odd
    bool canonical() const;

    auto operator<=>(const LieWord&) const = default;
};

/// Basis monomial: a set partition of {1..n}, each block carrying a Lie word,
/// blocks ordered by their minimum letter.
struct PoissonMonomial {
    std::vector<LieWord> blocks;

    int degree_units() const;
    bool canonical(int arity) const;
    std::string to_string() const;

    auto operator<=>(const PoissonMonomial&) const = default;
};

/// Permutation of {1..n} together with the Koszul-sign rule it induces on
/// graded inputs.
struct SignedPermutation {
    std::vector<int> image; // 1-based: image[t-1] = p(t)

    static SignedPermutation identity(int n);
    int arity() const { return static_cast<int>(image.size()); }
    int operator()(int t) const { return image[static_cast<std::size_t>(t) - 1]; }
    /// Composition: (this o first)(t) = this(first(t)).
    SignedPermutation after(const SignedPermutation& first) const;
    /// (-1)^{sum of parities[u] * parities[v] over inversions u < v, p(u) > p(v)}.
    int koszul_sign(const std::vector<int>& parities) const;
};

/// Exact-integer element of the arity-n component of the homology operad of
/// little 2d-disks, modeled on commutative products of Lie words with a
/// bracket of odd degree 2d-1.
class OperadElement {
public:
    OperadElement(int arity, int d);

    static OperadElement zero(int arity, int d) { return OperadElement(arity, d); }
    /// The identity operation (arity 1).
    static OperadElement identity(int d);
    /// The k-fold commutative product: k singleton blocks.
    static OperadElement mu(int k, int d);
    /// The binary bracket, dual to the sphere class.
    static OperadElement lambda(int d);

    int arity() const { return arity_; }
    int d() const { return d_; }
    int bracket_degree() const { return 2 * d_ - 1; }
    const std::map<PoissonMonomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True degree of a term: degree_units * (2d-1).
    int term_degree(const PoissonMonomial& m) const { return m.degree_units() * bracket_degree(); }
    /// Degree if homogeneous (-1 for zero), else throws.
    int homogeneous_degree() const;

    void add_term(const PoissonMonomial& mono, const Int& coeff);
    /// Canonicalize a block list (sort by minimum letter, Koszul signs from
    /// the block parities) and add the signed term.
    void add_blocks(std::vector<LieWord> blocks, const Int& coeff);

    OperadElement& operator+=(const OperadElement& other);
    OperadElement& operator-=(const OperadElement& other);
    OperadElement& operator*=(const Int& scalar);
    friend OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
    friend OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }

    bool operator==(const OperadElement& other) const;

    std::string to_string() const;
    std::vector<Int> coordinates(const std::vector<PoissonMonomial>& basis) const;

private:
    int arity_;
    int d_;
    std::map<PoissonMonomial, Int> terms_;
};

/// All canonical monomials of the given true homological degree (a multiple
/// of 2d-1), ascending; the total count over all degrees is n!.
std::vector<PoissonMonomial> poisson_basis(int n, int d, int degree);

/// Monomial counts per degree unit without materializing monomials.
GradedRankProfile poisson_profile(int n, int d);

/// Operadic composition: substitute b into input `slot` of a, expanding
/// brackets over products by the signed Leibniz rule and renormalizing Lie
/// words to the canonical basis.
OperadElement compose(const OperadElement& a, int slot, const OperadElement& b);

/// Symmetric-group action: relabel inputs by p and multiply by the Koszul
/// sign of p on the input parities together with the internal signs from
/// re-canonicalizing words and block order.
OperadElement sigma_act(const SignedPermutation& p, const OperadElement& e,
                        const std::vector<int>& parities);

/// The degree-raising operator: the unique operadic derivation with
/// delta(mu(2)) = lambda and delta(lambda) = 0, computed by the closed
/// pairwise formula delta(L_1...L_r) = sum_{s<t} +- [L_s,L_t] L_1...^s...^t...L_r.
OperadElement delta(const OperadElement& e);

/// The same operator computed by the recursive derivation rule
/// delta(a o_i b) = delta(a) o_i b + (-1)^{|a|} a o_i delta(b) over a
/// composition tree of each monomial; an independent route kept as an
/// internal cross-check of the pairwise formula.
OperadElement delta_recursive(const OperadElement& e);

/// The arity-k bracket generator delta(mu(k)), degree 2d-1; requires k >= 2.
OperadElement bracket_generator(int k, int d);

/// Matrix of delta from degree m to m+1 (in units of 2d-1); columns indexed
/// by poisson_basis at m, rows at m+1.
exactla::IntMatrix delta_matrix(int n, int d, int units);

/// Per-degree ranks of ker(delta) on arity n, true degrees.
GradedRankProfile kernel_rank_profile(int n, int d);

/// Per-degree ranks of im(delta) on arity n, true degrees.
GradedRankProfile image_rank_profile(int n, int d);

} // namespace gravop::poisson
