#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gravop/arnold.hpp"
#include "gravop/int.hpp"

namespace gravop::expr {

/// Abstract syntax tree over integer literals, generators x(i,j), the symbol
/// c with integer powers, products, signed sums, and unary minus. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | 'c' ('^' INT)? | 'x' '(' INT ',' INT ')'
///           | '(' expr ')' | '-' factor
struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Expression {
    enum class Kind { integer, c_power, generator, product, sum, negate };

    Kind kind = Kind::integer;
    Int value = 0;             // integer literals
    int exponent = 1;          // c_power
    int i = 0, j = 0;          // generator indices as written
    std::vector<ExprPtr> operands;
    std::vector<int> signs;    // sum only: +1/-1 per operand

    static ExprPtr integer(Int v);
    static ExprPtr c_power(int exponent);
    static ExprPtr generator(int i, int j);
    static ExprPtr product(std::vector<ExprPtr> factors);
    static ExprPtr sum(std::vector<ExprPtr> terms, std::vector<int> signs);
    static ExprPtr negate(ExprPtr inner);
};

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// Parse the expression text; throws ParseError with line/column on bad
/// syntax. Out-of-range indices are deferred to evaluation.
ExprPtr parse(const std::string& text);

/// Canonical text form; parse(to_string(e)) reproduces e.
std::string to_string(const ExprPtr& e);

/// Evaluate into the named ring. Index range errors and misuse of c surface
/// here as std::invalid_argument.
arnold::RingElement evaluate(const ExprPtr& e, arnold::RingDescriptor desc);

} // namespace gravop::expr
