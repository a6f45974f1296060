#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gravop/int.hpp"
#include "gravop/profile.hpp"

namespace gravop::arnold {

/// Generator x_{i,j} of the configuration ring, canonical with i < j. The
/// identification x_{ij} = x_{ji} is symmetric: canonicalizing swaps the pair
/// with no sign.
struct Gen {
    std::uint8_t i = 0;
    std::uint8_t j = 0;

    /// Canonical order: by larger index first, then smaller. A product is in
    /// basis form ("admissible") iff its factors' larger indices strictly
    /// increase, so this order makes repeated larger indices adjacent.
    friend std::strong_ordering operator<=>(const Gen& a, const Gen& b) {
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.i <=> b.i;
    }
    friend bool operator==(const Gen&, const Gen&) = default;
};

/// Product of generators in basis form: factors in canonical order with
/// strictly increasing larger indices.
struct Monomial {
    std::vector<Gen> factors;

    std::size_t length() const { return factors.size(); }
    bool admissible() const;

    auto operator<=>(const Monomial&) const = default;
};

enum class Flavor { conf, fiber, th };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

/// Which ring we are working in:
///   conf  - full configuration ring on n points,
///   fiber - the quotient by the ideal (x_12),
///   th    - Z[c]/(c^d) tensor the fiber ring, c in degree 2.
struct RingDescriptor {
    int n = 2;
    int d = 1;
    Flavor flavor = Flavor::conf;

    int generator_degree() const { return 2 * d - 1; }
    void validate() const;

    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Basis element: c^a * monomial (a = 0 unless flavor is th).
struct TermKey {
    int c_exp = 0;
    Monomial mono;

    auto operator<=>(const TermKey&) const = default;
};

/// One factor of a raw (unreduced) product: either the generator x_{i,j} in
/// any index order, or handled separately as a power of c.
struct RawTerm {
    Int coeff = 1;
    int c_exp = 0;
    std::vector<std::pair<int, int>> factors; // x_{i,j}, indices in any order
};

/// Exact-integer element of the ring named by its descriptor. Inhomogeneous
/// elements are allowed; every stored monomial is in basis form and the term
/// map is ordered, so printing and iteration are deterministic.
class RingElement {
public:
    explicit RingElement(RingDescriptor desc) : desc_(desc) { desc_.validate(); }

    static RingElement zero(RingDescriptor desc) { return RingElement(desc); }
    static RingElement one(RingDescriptor desc);
    static RingElement generator(RingDescriptor desc, int i, int j);
    static RingElement c_power(RingDescriptor desc, int exp);

    const RingDescriptor& descriptor() const { return desc_; }
    const std::map<TermKey, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Cohomological degree of a term: 2*c_exp + length*(2d-1).
    int term_degree(const TermKey& k) const;
    /// Degree if homogeneous (zero element: -1), else throws.
    int homogeneous_degree() const;

    void add_term(const TermKey& key, const Int& coeff);

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const Int& scalar);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

    bool operator==(const RingElement& other) const {
        return desc_ == other.desc_ && terms_ == other.terms_;
    }

    std::string to_string() const;

    /// Coordinates with respect to an ordered basis (of one degree); throws if
    /// a term falls outside the basis.
    std::vector<Int> coordinates(const std::vector<TermKey>& basis) const;

private:
    RingDescriptor desc_;
    std::map<TermKey, Int> terms_;
};

/// Fully reduce a raw product expression to basis form. Rewrites used:
/// symmetry x_ij = x_ji, anticommutativity with squares zero, the Arnold
/// relation oriented to eliminate a repeated larger index
/// (x_aj x_bj -> x_ab x_bj - x_ab x_aj for a < b < j), x_12 -> 0 in the fiber
/// and th flavors, and c^d -> 0 in the th flavor.
/// Throws std::invalid_argument on out-of-range indices or c outside th.
RingElement normal_form(const std::vector<RawTerm>& raw, RingDescriptor desc);

/// Same normal form, reached by applying the elementary rewrite steps in an
/// order driven by `rng` rather than the deterministic strategy. Used by the
/// confluence stress checks.
RingElement normal_form_randomized(const std::vector<RawTerm>& raw, RingDescriptor desc,
                                   std::mt19937_64& rng);

/// Product of two elements of the same ring; the result is in basis form.
RingElement multiply(const RingElement& a, const RingElement& b);

/// All basis elements of the given cohomological degree, ascending.
std::vector<TermKey> basis_in_degree(RingDescriptor desc, int degree);

/// Ranks per cohomological degree, by direct basis enumeration.
GradedRankProfile poincare(RingDescriptor desc);

/// The element y_ij = x_ij - x_12 of the conf ring. Throws if (i,j)
/// canonicalizes to (1,2) or the flavor is not conf.
RingElement y_element(RingDescriptor desc, int i, int j);

} // namespace gravop::arnold
