#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gravop/gravity.hpp"

using namespace gravop;
using namespace gravop::gravity;

TEST_CASE("epsilon values") {
    CHECK(epsilon(1, 2, {0, 0}) == 1);
    CHECK(epsilon(1, 3, {0, 0, 0}) == 1);
    // k=2, parities (1,1): 0*1 + 1*1 + 1*1 = 2, so +1.
    CHECK(epsilon(1, 2, {1, 1}) == 1);
    // k=3, (i,j)=(2,3), parities (1,1,1): 1 + 2 + 1 = 4, so +1.
    CHECK(epsilon(2, 3, {1, 1, 1}) == 1);
    // k=3, (i,j)=(1,3), parities (1,0,1): 0*1 + 1*1 + 1*1 = 2, so +1.
    CHECK(epsilon(1, 3, {1, 0, 1}) == 1);
    // k=3, (i,j)=(1,2), parities (1,1,0): 0 + 1 + 1 = 2; (2,3) of (0,1,1): 0+1+1;
    CHECK(epsilon(1, 2, {1, 1, 0}) == 1);
    // A genuinely negative case: k=2 parities (0,1): 0*0 + 0*1 + 0*1 = 0 -> +;
    // k=3 (1,2) parities (1,1,1): 0 + 1*1 + 1 = 2 -> +; (1,3): 0 + 2 + 1 = 3 -> -.
    CHECK(epsilon(1, 3, {1, 1, 1}) == -1);
    CHECK_THROWS_AS(epsilon(2, 2, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(epsilon(2, 1, {0, 0}), std::invalid_argument);
}

TEST_CASE("gravity elements enforce their invariants") {
    auto lam = poisson::OperadElement::lambda(2);
    GravityElement g(0, lam);
    CHECK(g.unshifted_degree() == 3);
    auto gc = g.times_c();
    REQUIRE(gc.has_value());
    CHECK(gc->unshifted_degree() == 1);
    CHECK_FALSE(gc->times_c().has_value()); // c^2 = 0 at d = 2

    CHECK_THROWS_AS(GravityElement(2, lam), std::invalid_argument);
    CHECK_THROWS_AS(GravityElement(0, poisson::OperadElement::mu(2, 2)),
                    std::invalid_argument); // mu2 is not delta-closed
}

TEST_CASE("gravity relation: base case k=2, l=1") {
    for (int d : {1, 2, 3})
        for (int pmask = 0; pmask < 8; ++pmask) {
            std::vector<int> parities{pmask & 1, (pmask >> 1) & 1, (pmask >> 2) & 1};
            CHECK(check_gravity_relation(2, 1, parities, d));
        }
}

TEST_CASE("gravity relation: the Jacobi instance k=3, l=1") {
    CHECK(check_gravity_relation(3, 1, {0, 0, 0, 0}, 1));
    // Every parity vector for a slightly larger instance.
    for (int pmask = 0; pmask < 32; ++pmask) {
        std::vector<int> parities(5);
        for (int t = 0; t < 5; ++t) parities[static_cast<std::size_t>(t)] = (pmask >> t) & 1;
        CHECK(check_gravity_relation(3, 2, parities, 2));
    }
}

TEST_CASE("gravity relation argument validation") {
    CHECK_THROWS_AS(check_gravity_relation(1, 1, {0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_gravity_relation(2, 0, {0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_gravity_relation(2, 1, {0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_gravity_relation(5, 4, {0, 0, 0, 0, 0, 0, 0, 0, 0}, 1),
                    std::invalid_argument);
}

TEST_CASE("gravity rank profiles") {
    // n=2: powers of c against the bracket; degrees 2d-1, 2d-3, ..., 1.
    for (int d : {1, 2, 3}) {
        auto p = gravity_rank_profile(2, d);
        CHECK(p.total() == static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a) CHECK(p.at(2 * d - 1 - 2 * a) == 1);
    }
    // n=3, d=1: ranks (1,2) in degrees (1,2).
    auto p31 = gravity_rank_profile(3, 1);
    CHECK(p31.at(1) == 1);
    CHECK(p31.at(2) == 2);
    CHECK(p31.total() == 3);
    // Total rank d n!/2.
    for (int n = 2; n <= 5; ++n)
        for (int d : {1, 2, 3}) {
            std::size_t fact = 1;
            for (int t = 2; t <= n; ++t) fact *= static_cast<std::size_t>(t);
            CHECK(gravity_rank_profile(n, d).total() == d * fact / 2);
        }
}

TEST_CASE("main theorem at rank level, small cases") {
    for (auto [n, d] :
         std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}}) {
        auto report = verify_main_theorem(n, d);
        CHECK(report.pass);
    }
    // The worked example: n=2, d=3 aligns c^2 L, c L, L with degrees 1, 3, 5.
    auto r = verify_main_theorem(2, 3);
    REQUIRE(r.rows.size() == 3);
    for (auto& row : r.rows) {
        CHECK(row.gravity_rank == 1);
        CHECK(row.expected_rank == 1);
    }
    CHECK(r.rows.front().degree == 1);
    CHECK(r.rows.back().degree == 5);
}

TEST_CASE("c compatibility") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
        auto report = verify_c_compatibility(n, d);
        CHECK(report.pass);
        CHECK(report.c_power_annihilates);
        CHECK(report.slices_match);
        CHECK(report.freeness_matches);
    }
}

TEST_CASE("the kernel of delta is closed under composition") {
    const int d = 2;
    const int w = 2 * d - 1;
    auto kernel_elements = [&](int n) {
        std::vector<poisson::OperadElement> out;
        for (int m = 0; m < n; ++m) {
            auto basis = poisson::poisson_basis(n, d, m * w);
            if (basis.empty()) continue;
            for (auto& v : exactla::kernel_basis(poisson::delta_matrix(n, d, m))) {
                poisson::OperadElement e(n, d);
                for (std::size_t c = 0; c < basis.size(); ++c) e.add_term(basis[c], v[c]);
                out.push_back(std::move(e));
            }
        }
        return out;
    };
    for (int na = 2; na <= 3; ++na)
        for (int nb = 2; nb <= 5 - na; ++nb) {
            auto us = kernel_elements(na);
            auto vs = kernel_elements(nb);
            for (auto& u : us)
                for (auto& v : vs)
                    for (int slot = 1; slot <= na; ++slot)
                        CHECK(poisson::delta(poisson::compose(u, slot, v)).is_zero());
        }
}

TEST_CASE("Getzler regression at d=1") {
    for (int n = 2; n <= 5; ++n) {
        auto report = verify_getzler_regression(n);
        CHECK(report.pass);
        // d=1 means c = 0: the gravity profile is the bare kernel profile.
        CHECK(gravity_rank_profile(n, 1) == poisson::kernel_rank_profile(n, 1));
    }
}
