#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gravop/expr.hpp"

using namespace gravop;
using namespace gravop::expr;
using arnold::Flavor;
using arnold::RingDescriptor;

TEST_CASE("parsing well-formed expressions") {
    auto p = parse("x(1,2)*x(1,3)");
    REQUIRE(p->kind == Expression::Kind::product);
    CHECK(p->operands.size() == 2);
    CHECK(p->operands[0]->kind == Expression::Kind::generator);

    auto q = parse("c^2 * x(2,3) - 3");
    REQUIRE(q->kind == Expression::Kind::sum);
    CHECK(q->operands.size() == 2);
    CHECK(q->signs == std::vector<int>{1, -1});

    CHECK(parse("-x(1,2)")->kind == Expression::Kind::negate);
    CHECK(parse("((x(1,2)))")->kind == Expression::Kind::generator);
    CHECK(parse(" 42 ")->kind == Expression::Kind::integer);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse("x(1,");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("x(1,2) +"), ParseError);
    CHECK_THROWS_AS(parse("x 1,2)"), ParseError);
    CHECK_THROWS_AS(parse("c^"), ParseError);
    CHECK_THROWS_AS(parse("x(1,2) x(1,3)"), ParseError);
}

TEST_CASE("print/parse round trip on canonical forms") {
    for (const char* text :
         {"x(1,2)*x(1,3)", "c^2*x(2,3) - 3", "-x(1,2)", "x(1,2) + x(1,3) - 2*x(2,3)",
          "(x(1,2) + x(1,3))*x(2,3)", "c*c*x(1,2)", "5", "-(x(1,2)*x(1,3))"}) {
        auto once = parse(text);
        auto printed = to_string(once);
        auto twice = parse(printed);
        CHECK(to_string(twice) == printed);
        // The reparse evaluates identically.
        RingDescriptor desc{3, 2, Flavor::th};
        CHECK(evaluate(once, desc) == evaluate(twice, desc));
    }
}

TEST_CASE("evaluation matches the ring operations") {
    RingDescriptor conf{3, 1, Flavor::conf};
    auto e = evaluate(parse("x(1,3)*x(1,3)"), conf);
    CHECK(e.is_zero());

    auto f = evaluate(parse("x(1,3)*x(2,3)"), conf);
    auto expected = arnold::multiply(arnold::RingElement::generator(conf, 1, 3),
                                     arnold::RingElement::generator(conf, 2, 3));
    CHECK(f == expected);

    auto g = evaluate(parse("x(1,2) - x(1,2)"), conf);
    CHECK(g.is_zero());

    // Index symmetry in the surface syntax.
    CHECK(evaluate(parse("x(3,1)"), conf) == evaluate(parse("x(1,3)"), conf));

    RingDescriptor th{3, 2, Flavor::th};
    CHECK(evaluate(parse("c^2"), th).is_zero());
    CHECK_FALSE(evaluate(parse("c"), th).is_zero());

    // Errors surface at evaluation, not parse.
    auto bad = parse("x(1,7)");
    CHECK_THROWS_AS(evaluate(bad, conf), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(parse("c"), conf), std::invalid_argument);
}
