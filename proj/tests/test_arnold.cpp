#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gravop/arnold.hpp"
#include "gravop/arnold_oracle.hpp"

using namespace gravop;
using namespace gravop::arnold;

namespace {

RingElement gen(RingDescriptor r, int i, int j) { return RingElement::generator(r, i, j); }

RawTerm product_term(std::initializer_list<std::pair<int, int>> factors, long coeff = 1) {
    RawTerm t;
    t.coeff = coeff;
    for (auto& f : factors) t.factors.push_back(f);
    return t;
}

} // namespace

TEST_CASE("generators and symmetry") {
    RingDescriptor r{3, 1, Flavor::conf};
    CHECK(gen(r, 1, 2) == gen(r, 2, 1));
    CHECK(gen(r, 1, 2).to_string() == "x(1,2)");
    CHECK_THROWS_AS(gen(r, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(gen(r, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(RingElement::c_power(r, 1), std::invalid_argument);
}

TEST_CASE("normal form basics") {
    RingDescriptor r{3, 1, Flavor::conf};
    // x_12 is already in basis form.
    auto e = normal_form({product_term({{1, 2}})}, r);
    CHECK(e.to_string() == "x(1,2)");
    // Odd generators square to zero.
    CHECK(normal_form({product_term({{1, 3}, {1, 3}})}, r).is_zero());
    // Anticommutativity.
    auto ab = normal_form({product_term({{1, 2}, {1, 3}})}, r);
    auto ba = normal_form({product_term({{1, 3}, {1, 2}}, -1)}, r);
    CHECK(ab == ba);
}

TEST_CASE("Arnold rewrite of x13*x23") {
    RingDescriptor r{3, 1, Flavor::conf};
    auto e = normal_form({product_term({{1, 3}, {2, 3}})}, r);
    // x_13 x_23 = x_12 x_23 - x_12 x_13
    auto expected = normal_form({product_term({{1, 2}, {2, 3}}), product_term({{1, 2}, {1, 3}}, -1)}, r);
    CHECK(e == expected);
    CHECK(e.to_string() == "-x(1,2)*x(1,3) + x(1,2)*x(2,3)");
}

TEST_CASE("multiply: unit, squares, bilinearity, graded commutativity") {
    RingDescriptor r{4, 2, Flavor::conf};
    auto one = RingElement::one(r);
    auto b = normal_form({product_term({{1, 2}, {3, 4}}), product_term({{1, 3}}, 2)}, r);
    CHECK(multiply(one, b) == b);
    CHECK(multiply(gen(r, 1, 2), gen(r, 1, 2)).is_zero());

    auto lhs = multiply(gen(r, 1, 2) + gen(r, 1, 3), gen(r, 2, 3));
    auto rhs = multiply(gen(r, 1, 2), gen(r, 2, 3)) + multiply(gen(r, 1, 3), gen(r, 2, 3));
    CHECK(lhs == rhs);

    // Graded commutativity for homogeneous elements of odd degree.
    auto x = gen(r, 1, 4), y = gen(r, 2, 3);
    auto xy = multiply(x, y);
    auto yx = multiply(y, x);
    yx *= -1;
    CHECK(xy == yx);
}

TEST_CASE("basis_in_degree examples") {
    RingDescriptor r{3, 1, Flavor::conf};
    auto deg1 = basis_in_degree(r, 1);
    REQUIRE(deg1.size() == 3);
    auto deg2 = basis_in_degree(r, 2);
    REQUIRE(deg2.size() == 2);
    // {x_12 x_13, x_12 x_23}: admissibility forces distinct larger indices.
    CHECK(deg2[0].mono.factors == std::vector<Gen>{Gen{1, 2}, Gen{1, 3}});
    CHECK(deg2[1].mono.factors == std::vector<Gen>{Gen{1, 2}, Gen{2, 3}});

    RingDescriptor th{2, 3, Flavor::th};
    CHECK(basis_in_degree(th, 0).size() == 1);
    CHECK(basis_in_degree(th, 2).size() == 1);
    CHECK(basis_in_degree(th, 4).size() == 1);
    CHECK(basis_in_degree(th, 6).empty());
}

TEST_CASE("poincare profiles") {
    // (n=3, d=1, conf): (1+t)(1+2t) = 1 + 3t + 2t^2.
    auto p = poincare(RingDescriptor{3, 1, Flavor::conf});
    CHECK(p.to_polynomial_string() == "1 + 3t + 2t^2");

    // (n=2, d, conf): sphere S^{2d-1}.
    for (int d = 1; d <= 3; ++d) {
        auto s = poincare(RingDescriptor{2, d, Flavor::conf});
        CHECK(s.total() == 2);
        CHECK(s.at(0) == 1);
        CHECK(s.at(2 * d - 1) == 1);
    }

    // (n=2, d, th): complex projective space of dimension d-1.
    for (int d = 1; d <= 3; ++d) {
        auto s = poincare(RingDescriptor{2, d, Flavor::th});
        CHECK(s.total() == static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a) CHECK(s.at(2 * a) == 1);
    }

    // n=2 fiber ring: rank 1 concentrated in degree 0.
    auto f = poincare(RingDescriptor{2, 2, Flavor::fiber});
    CHECK(f.total() == 1);
    CHECK(f.at(0) == 1);
}

TEST_CASE("poincare product formula and tensor structures across n and d") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= 3; ++d) {
            const int w = 2 * d - 1;
            auto conf = poincare(RingDescriptor{n, d, Flavor::conf});
            // prod_{i=1}^{n-1} (1 + i q), q in degree w.
            GradedRankProfile expected;
            expected.set(0, 1);
            for (int i = 1; i < n; ++i) {
                GradedRankProfile factor;
                factor.set(0, 1);
                factor.set(w, i);
                expected = expected.convolved(factor);
            }
            CHECK(conf == expected);

            // conf = (1 + q) * fiber.
            auto fiber = poincare(RingDescriptor{n, d, Flavor::fiber});
            GradedRankProfile edge;
            edge.set(0, 1);
            edge.set(w, 1);
            CHECK(conf == fiber.convolved(edge));

            // th = Z[c]/(c^d) (x) fiber.
            auto th = poincare(RingDescriptor{n, d, Flavor::th});
            GradedRankProfile cpart;
            for (int a = 0; a < d; ++a) cpart.set(2 * a, 1);
            CHECK(th == fiber.convolved(cpart));

            std::size_t fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            CHECK(conf.total() == fact);
            CHECK(th.total() == d * fact / 2);
        }
}

TEST_CASE("flavors: x_12 dies, c^d dies") {
    RingDescriptor fib{4, 2, Flavor::fiber};
    CHECK(gen(fib, 1, 2).is_zero());
    CHECK_FALSE(gen(fib, 1, 3).is_zero());

    RingDescriptor th{3, 2, Flavor::th};
    CHECK(RingElement::c_power(th, 2).is_zero());
    CHECK_FALSE(RingElement::c_power(th, 1).is_zero());
    // Rewriting can produce x_12: x_13 x_23 = x_12(x_23 - x_13) -> 0 in fiber.
    CHECK(normal_form({product_term({{1, 3}, {2, 3}})}, fib).is_zero());
}

TEST_CASE("y elements") {
    RingDescriptor r{3, 1, Flavor::conf};
    auto y13 = y_element(r, 1, 3);
    auto expected = gen(r, 1, 3) - gen(r, 1, 2);
    CHECK(y13 == expected);
    CHECK(y_element(r, 2, 3) == gen(r, 2, 3) - gen(r, 1, 2));
    CHECK(y_element(r, 3, 1) == y13); // symmetry of indices
    CHECK_THROWS_AS(y_element(r, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(y_element(r, 2, 1), std::invalid_argument);
}

TEST_CASE("every generator squares to zero and every pair anticommutes") {
    for (int n = 2; n <= 5; ++n) {
        RingDescriptor r{n, 2, Flavor::conf};
        std::vector<std::pair<int, int>> gens;
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) gens.emplace_back(i, j);
        for (auto [i1, j1] : gens) {
            auto a = gen(r, i1, j1);
            CHECK(multiply(a, a).is_zero());
            for (auto [i2, j2] : gens) {
                auto b = gen(r, i2, j2);
                auto ab = multiply(a, b);
                auto ba = multiply(b, a);
                ba *= -1;
                CHECK(ab == ba);
            }
        }
    }
}

TEST_CASE("confluence: association order does not matter") {
    std::mt19937_64 rng(2025);
    for (int n = 3; n <= 5; ++n) {
        RingDescriptor r{n, 1, Flavor::conf};
        std::uniform_int_distribution<int> idx(1, n);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<std::pair<int, int>> factors;
            for (int f = 0; f < 4; ++f) {
                int i = idx(rng), j = idx(rng);
                while (j == i) j = idx(rng);
                factors.emplace_back(i, j);
            }
            RawTerm whole;
            whole.factors = factors;
            auto direct = normal_form({whole}, r);
            // Reduce factors pairwise in a random association order.
            std::vector<RingElement> parts;
            for (auto& f : factors) parts.push_back(gen(r, f.first, f.second));
            while (parts.size() > 1) {
                std::uniform_int_distribution<std::size_t> at(0, parts.size() - 2);
                std::size_t p = at(rng);
                parts[p] = multiply(parts[p], parts[p + 1]);
                parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(p + 1));
            }
            CHECK(parts[0] == direct);
        }
    }
}

TEST_CASE("oracle agrees with rewriter on ranks and reductions") {
    std::mt19937_64 rng(17);
    for (int n = 3; n <= 5; ++n) {
        arnold_oracle::QuotientOracle oracle(n);
        RingDescriptor r{n, 1, Flavor::conf};
        for (int k = 0; k <= n; ++k)
            CHECK(oracle.rank_in_factors(k) == basis_in_degree(r, k).size());

        std::uniform_int_distribution<int> idx(1, n), len(1, n);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::pair<int, int>> factors;
            int L = len(rng);
            for (int f = 0; f < L; ++f) {
                int i = idx(rng), j = idx(rng);
                while (j == i) j = idx(rng);
                factors.emplace_back(i, j);
            }
            RawTerm t;
            t.factors = factors;
            auto rewritten = normal_form({t}, r);
            auto reduced = oracle.reduce_product(factors);
            RingElement from_oracle(r);
            for (auto& [mono, coeff] : reduced) from_oracle.add_term(TermKey{0, mono}, coeff);
            CHECK(rewritten == from_oracle);
        }
    }
}

TEST_CASE("fiber oracle matches fiber rewriting") {
    for (int n = 3; n <= 4; ++n) {
        arnold_oracle::QuotientOracle oracle(n, /*quotient_x12=*/true);
        RingDescriptor r{n, 2, Flavor::fiber};
        const int w = 3;
        auto p = poincare(r);
        for (int k = 0; k <= n; ++k) CHECK(oracle.rank_in_factors(k) == p.at(k * w));
    }
}

TEST_CASE("randomized reduction strategies agree with the deterministic one") {
    std::mt19937_64 rng(31337);
    for (int n = 3; n <= 5; ++n) {
        RingDescriptor r{n, 2, Flavor::conf};
        std::uniform_int_distribution<int> idx(1, n), len(1, n + 1);
        for (int trial = 0; trial < 40; ++trial) {
            RawTerm t;
            int L = len(rng);
            for (int f = 0; f < L; ++f) {
                int i = idx(rng), j = idx(rng);
                while (j == i) j = idx(rng);
                t.factors.emplace_back(i, j);
            }
            auto det = normal_form({t}, r);
            auto ra = normal_form_randomized({t}, r, rng);
            auto rb = normal_form_randomized({t}, r, rng);
            CHECK(det == ra);
            CHECK(det == rb);
        }
    }
}
