#include "gravop/expr.hpp"

namespace gravop::expr {

ExprPtr Expression::integer(Int v) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::integer;
    e->value = std::move(v);
    return e;
}

ExprPtr Expression::c_power(int exponent) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::c_power;
    e->exponent = exponent;
    return e;
}

ExprPtr Expression::generator(int i, int j) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::generator;
    e->i = i;
    e->j = j;
    return e;
}

ExprPtr Expression::product(std::vector<ExprPtr> factors) {
    if (factors.size() == 1) return factors.front();
    auto e = std::make_shared<Expression>();
    e->kind = Kind::product;
    e->operands = std::move(factors);
    return e;
}

ExprPtr Expression::sum(std::vector<ExprPtr> terms, std::vector<int> signs) {
    if (terms.size() == 1 && signs.front() == 1) return terms.front();
    auto e = std::make_shared<Expression>();
    e->kind = Kind::sum;
    e->operands = std::move(terms);
    e->signs = std::move(signs);
    return e;
}

ExprPtr Expression::negate(ExprPtr inner) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::negate;
    e->operands.push_back(std::move(inner));
    return e;
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        auto e = parse_expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        advance();
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    Int parse_int() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_];
            advance();
        }
        return Int(digits);
    }

    int parse_small_int(const char* what) {
        Int v = parse_int();
        if (v > 1000000) fail(std::string(what) + " is implausibly large");
        return static_cast<int>(v);
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> terms;
        std::vector<int> signs;
        terms.push_back(parse_term());
        signs.push_back(1);
        for (;;) {
            if (accept('+'))
                signs.push_back(1);
            else if (accept('-'))
                signs.push_back(-1);
            else
                break;
            terms.push_back(parse_term());
        }
        return Expression::sum(std::move(terms), std::move(signs));
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (accept('*')) factors.push_back(parse_factor());
        return Expression::product(std::move(factors));
    }

    ExprPtr parse_factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected a factor");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return Expression::integer(parse_int());
        if (c == '-') {
            advance();
            return Expression::negate(parse_factor());
        }
        if (c == '(') {
            advance();
            auto inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (c == 'c') {
            advance();
            int exponent = 1;
            if (accept('^')) exponent = parse_small_int("exponent");
            return Expression::c_power(exponent);
        }
        if (c == 'x') {
            advance();
            expect('(', "'(' after x");
            int i = parse_small_int("index");
            expect(',', "','");
            int j = parse_small_int("index");
            expect(')', "')'");
            return Expression::generator(i, j);
        }
        fail("expected a factor");
    }
};

void print(const ExprPtr& e, std::string& out, bool parenthesize_sum) {
    switch (e->kind) {
        case Expression::Kind::integer:
            out += e->value.str();
            break;
        case Expression::Kind::c_power:
            out += e->exponent == 1 ? "c" : "c^" + std::to_string(e->exponent);
            break;
        case Expression::Kind::generator:
            out += "x(" + std::to_string(e->i) + "," + std::to_string(e->j) + ")";
            break;
        case Expression::Kind::product:
            for (std::size_t t = 0; t < e->operands.size(); ++t) {
                if (t) out += "*";
                const auto& f = e->operands[t];
                bool needs_parens =
                    f->kind == Expression::Kind::sum || f->kind == Expression::Kind::negate;
                if (needs_parens) out += "(";
                print(f, out, true);
                if (needs_parens) out += ")";
            }
            break;
        case Expression::Kind::sum: {
            if (parenthesize_sum) out += "";
            for (std::size_t t = 0; t < e->operands.size(); ++t) {
                if (t)
                    out += e->signs[t] == 1 ? " + " : " - ";
                else if (e->signs[t] == -1)
                    out += "-";
                const auto& f = e->operands[t];
                bool needs_parens = f->kind == Expression::Kind::sum;
                if (needs_parens) out += "(";
                print(f, out, false);
                if (needs_parens) out += ")";
            }
            break;
        }
        case Expression::Kind::negate:
            out += "-";
            if (e->operands[0]->kind == Expression::Kind::sum ||
                e->operands[0]->kind == Expression::Kind::product) {
                out += "(";
                print(e->operands[0], out, false);
                out += ")";
            } else {
                print(e->operands[0], out, false);
            }
            break;
    }
}

} // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string to_string(const ExprPtr& e) {
    std::string out;
    print(e, out, false);
    return out;
}

arnold::RingElement evaluate(const ExprPtr& e, arnold::RingDescriptor desc) {
    using arnold::RingElement;
    switch (e->kind) {
        case Expression::Kind::integer: {
            RingElement out = RingElement::one(desc);
            out *= e->value;
            return out;
        }
        case Expression::Kind::c_power:
            return RingElement::c_power(desc, e->exponent);
        case Expression::Kind::generator:
            return RingElement::generator(desc, e->i, e->j);
        case Expression::Kind::product: {
            RingElement out = RingElement::one(desc);
            for (auto& f : e->operands) out = arnold::multiply(out, evaluate(f, desc));
            return out;
        }
        case Expression::Kind::sum: {
            RingElement out = RingElement::zero(desc);
            for (std::size_t t = 0; t < e->operands.size(); ++t) {
                auto part = evaluate(e->operands[t], desc);
                if (e->signs[t] == -1) part *= -1;
                out += part;
            }
            return out;
        }
        case Expression::Kind::negate: {
            auto out = evaluate(e->operands[0], desc);
            out *= -1;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace gravop::expr
