#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gravop/exactla.hpp"

using namespace gravop;
using namespace gravop::exactla;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

std::vector<Int> matvec(const IntMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> out(m.rows, Int(0));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}})).empty());

    auto k1 = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(((k1[0] == std::vector<Int>{1, -1}) || (k1[0] == std::vector<Int>{-1, 1})));

    auto m = from_rows({{1, 2, 3}});
    auto k2 = kernel_basis(m);
    REQUIRE(k2.size() == 2);
    for (auto& v : k2)
        for (auto& e : matvec(m, v)) CHECK(e == 0);
    // The two kernel vectors are independent.
    IntMatrix kmat(2, 3);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) kmat.at(r, c) = k2[r][c];
    CHECK(rank(kmat) == 2);
}

TEST_CASE("in_span basics") {
    std::vector<std::vector<Int>> basis = {{1, 1}};
    CHECK(in_span({0, 0}, basis));
    CHECK_FALSE(in_span({1, 0}, basis));
    CHECK(in_span({2, 2}, basis));
}

TEST_CASE("solve_in_span recovers coefficients") {
    std::vector<std::vector<Int>> vecs = {{2, 0, 1}, {0, 1, 1}};
    auto sol = solve_in_span(vecs, {2, 3, 4});
    REQUIRE(sol.has_value());
    REQUIRE(sol->size() == 2);
    CHECK((*sol)[0] == Rat(1));
    CHECK((*sol)[1] == Rat(3));

    CHECK_FALSE(solve_in_span(vecs, {0, 0, 1}).has_value());
    // Non-integer combinations are still found exactly.
    auto half = solve_in_span({{2, 0}}, {1, 0});
    REQUIRE(half.has_value());
    CHECK((*half)[0] == Rat(1, 2));
}

TEST_CASE("rank + kernel dimension = cols, kernel vectors annihilate") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 7), entry(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& e : m.entries) e = entry(rng);
        auto r = rank(m);
        auto kb = kernel_basis(m);
        CHECK(r + kb.size() == m.cols);
        for (auto& v : kb) {
            for (auto& e : matvec(m, v)) CHECK(e == 0);
            Int g = 0;
            for (auto& e : v) g = boost::multiprecision::gcd(g, e);
            CHECK(g == 1); // primitive
        }
    }
}

TEST_CASE("rank invariant under transposition and row permutation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& e : m.entries) e = entry(rng);
        auto r = rank(m);
        CHECK(rank(m.transposed()) == r);

        std::vector<std::size_t> perm(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix p(m.rows, m.cols);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t c = 0; c < m.cols; ++c) p.at(i, c) = m.at(perm[i], c);
        CHECK(rank(p) == r);
    }
}

TEST_CASE("sparse echelon agrees with dense rank and reduces members to zero") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 8), entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& e : m.entries) e = entry(rng);
        RowEchelon ech(m.cols);
        std::vector<Int> row(m.cols);
        for (std::size_t r = 0; r < m.rows; ++r) {
            for (std::size_t c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
            ech.add_row(to_sparse(row));
        }
        CHECK(ech.rank() == rank(m));
        // Random combinations of rows are contained in the row space.
        std::uniform_int_distribution<int> pick(0, static_cast<int>(m.rows) - 1);
        std::vector<Int> combo(m.cols, Int(0));
        for (int t = 0; t < 3; ++t) {
            int r = pick(rng);
            int s = entry(rng);
            for (std::size_t c = 0; c < m.cols; ++c) combo[c] += s * m.at(r, c);
        }
        CHECK(ech.contains(to_sparse(combo)));
    }
}
