#include "yangian/expression.hpp"

#include <cctype>
#include <cstdlib>

#include "yangian/berezinian.hpp"

namespace yangian {

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : Error("parse error at position " + std::to_string(position) + ": expected " + expected + ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr out = expr();
        skip();
        if (pos_ < text_.size()) fail("operator or end of input");
        return out;
    }

  private:
    using Kind = ExprNode::Kind;

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string found() {
        skip();
        if (pos_ >= text_.size()) return "end of input";
        return "'" + std::string(1, text_[pos_]) + "'";
    }

    [[noreturn]] void fail(const std::string& expected) { throw ParseError(pos_, expected, found()); }

    void expect(char c) {
        if (peek() != c) fail(std::string("'") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string integer_text() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("integer");
        return text_.substr(start, pos_ - start);
    }

    int small_integer() {
        const std::size_t start = pos_;
        const std::string digits = integer_text();
        if (digits.size() > 6) throw ParseError(start, "integer below 10^6", digits);
        return std::stoi(digits);
    }

    Rational rational() {
        std::string text = integer_text();
        if (peek() == '/') {
            ++pos_;
            const std::size_t at = pos_;
            const std::string den = integer_text();
            if (den.find_first_not_of('0') == std::string::npos) throw ParseError(at, "nonzero denominator", den);
            text += "/" + den;
        }
        return parse_rational(text);
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    static ExprPtr node(Kind kind, std::size_t position, ExprPtr left = nullptr, ExprPtr right = nullptr) {
        auto n = std::make_shared<ExprNode>();
        n->kind = kind;
        n->position = position;
        n->left = std::move(left);
        n->right = std::move(right);
        return n;
    }

    ExprPtr expr() {
        const std::size_t start = (skip(), pos_);
        ExprPtr out;
        if (accept('-'))
            out = node(Kind::negate, start, term());
        else {
            accept('+');
            out = term();
        }
        for (;;) {
            const std::size_t at = (skip(), pos_);
            if (accept('+'))
                out = node(Kind::sum, at, out, term());
            else if (accept('-'))
                out = node(Kind::difference, at, out, term());
            else
                return out;
        }
    }

    bool starts_atom() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
               c == '[';
    }

    ExprPtr term() {
        ExprPtr out = factor();
        for (;;) {
            const std::size_t at = (skip(), pos_);
            if (accept('*'))
                out = node(Kind::product, at, out, factor());
            else if (starts_atom())
                out = node(Kind::product, at, out, factor());
            else
                return out;
        }
    }

    ExprPtr factor() {
        ExprPtr out = atom();
        for (;;) {
            const std::size_t at = (skip(), pos_);
            if (accept('^')) {
                const bool negative = accept('-');
                auto n = std::make_shared<ExprNode>(*node(Kind::power, at, out));
                n->exponent = negative ? -small_integer() : small_integer();
                out = n;
            } else if (accept('@')) {
                expect('(');
                if (identifier() != "u") fail("'u'");
                Rational sign;
                if (accept('-'))
                    sign = 1;
                else if (accept('+'))
                    sign = -1;
                else
                    fail("'+' or '-'");
                auto n = std::make_shared<ExprNode>(*node(Kind::shift, at, out));
                n->number = sign * rational();
                expect(')');
                out = n;
            } else {
                return out;
            }
        }
    }

    ExprPtr atom() {
        const std::size_t start = (skip(), pos_);
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<ExprNode>(*node(Kind::number, start));
            n->number = rational();
            return n;
        }
        if (accept('(')) {
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        if (accept('[')) {
            ExprPtr left = expr();
            expect(',');
            ExprPtr right = expr();
            expect(']');
            return node(Kind::bracket, start, left, right);
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("number, identifier, '(' or '['");
        const std::string name = identifier();
        if (name == "ber") return node(Kind::ber, start);
        if (name == "qdet") return node(Kind::qdet, start);
        if (name == "t" && peek() == '[') {
            ++pos_;
            auto n = std::make_shared<ExprNode>(*node(Kind::generator, start));
            n->a = small_integer();
            expect(',');
            n->b = small_integer();
            expect(',');
            n->c = small_integer();
            expect(']');
            return n;
        }
        if (name == "t" || name == "d" || name == "e" || name == "f") {
            auto n = std::make_shared<ExprNode>(*node(Kind::series, start));
            n->series_name = name[0];
            expect('(');
            n->a = small_integer();
            if (name == "t") {
                expect(',');
                n->b = small_integer();
            }
            expect(')');
            return n;
        }
        pos_ = start;
        throw ParseError(start, "t[i,j,r], t(i,j), d(i), e(i), f(i), ber or qdet", "identifier '" + name + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::string at_position(const ExprNode& n) { return " (at position " + std::to_string(n.position) + ")"; }

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- evaluation

ExpressionContext::ExpressionContext(AlgebraPtr algebra, int order, Convention convention)
    : algebra_(std::move(algebra)), order_(order), convention_(convention) {
    if (order_ < 0) throw Error("order must be nonnegative");
}

const GaussFactors& ExpressionContext::factors() {
    if (!factors_) factors_ = gauss(algebra_, order_);
    return *factors_;
}

const PowerSeries& ExpressionContext::berezinian() {
    if (!ber_) ber_ = berezinian_sum(algebra_, order_, convention_);
    return *ber_;
}

const PowerSeries& ExpressionContext::quantum_determinant() {
    if (!qdet_) qdet_ = yangian::quantum_determinant(algebra_, order_);
    return *qdet_;
}

namespace {

PowerSeries as_series(const Value& v, int order) {
    if (const auto* e = std::get_if<Element>(&v)) return PowerSeries::constant(*e, order);
    return std::get<PowerSeries>(v);
}

bool is_bi(const Value& v) { return std::holds_alternative<BiSeries>(v); }

}  // namespace

Value ExpressionContext::evaluate(const ExprPtr& node) {
    using Kind = ExprNode::Kind;
    const ExprNode& n = *node;
    const Shape& shape = algebra_->shape();
    auto require_index = [&](int i, int limit) {
        if (i < 1 || i > limit)
            throw InvalidIndex("index " + std::to_string(i) + " outside 1.." + std::to_string(limit) + " for shape " +
                               shape.str() + at_position(n));
    };

    switch (n.kind) {
        case Kind::number:
            return algebra_->scalar(n.number);
        case Kind::generator:
            require_index(n.a, shape.size());
            require_index(n.b, shape.size());
            return algebra_->t(n.a, n.b, n.c);
        case Kind::series: {
            const int top = shape.size();
            switch (n.series_name) {
                case 't':
                    require_index(n.a, top);
                    require_index(n.b, top);
                    return PowerSeries::t(algebra_, n.a, n.b, order_);
                case 'd':
                    require_index(n.a, top);
                    return factors().d(n.a);
                case 'e':
                    require_index(n.a, top - 1);
                    return factors().e(n.a);
                default:
                    require_index(n.a, top - 1);
                    return factors().f(n.a);
            }
        }
        case Kind::ber:
            return berezinian();
        case Kind::qdet:
            return quantum_determinant();
        case Kind::negate: {
            Value x = evaluate(n.left);
            return std::visit([](auto v) -> Value { return v * Rational(-1); }, std::move(x));
        }
        case Kind::sum:
        case Kind::difference: {
            Value x = evaluate(n.left), y = evaluate(n.right);
            const Rational sign = n.kind == Kind::sum ? 1 : -1;
            if (is_bi(x) || is_bi(y)) {
                if (!is_bi(x) || !is_bi(y))
                    throw ExpressionError("cannot add a two-variable series to a one-variable value" + at_position(n));
                return std::get<BiSeries>(x) + std::get<BiSeries>(y) * sign;
            }
            if (std::holds_alternative<Element>(x) && std::holds_alternative<Element>(y))
                return std::get<Element>(x) + std::get<Element>(y) * sign;
            return as_series(x, order_) + as_series(y, order_) * sign;
        }
        case Kind::product: {
            Value x = evaluate(n.left), y = evaluate(n.right);
            if (is_bi(x) || is_bi(y)) {
                if (is_bi(x) && is_bi(y)) return std::get<BiSeries>(x) * std::get<BiSeries>(y);
                const Value& other = is_bi(x) ? y : x;
                const auto* scalar = std::get_if<Element>(&other);
                if (!scalar || !scalar->is_scalar())
                    throw ExpressionError("a two-variable series can only be multiplied by a rational" + at_position(n));
                return std::get<BiSeries>(is_bi(x) ? x : y) * scalar->constant_term();
            }
            if (std::holds_alternative<Element>(x) && std::holds_alternative<Element>(y))
                return std::get<Element>(x) * std::get<Element>(y);
            return as_series(x, order_) * as_series(y, order_);
        }
        case Kind::bracket: {
            Value x = evaluate(n.left), y = evaluate(n.right);
            if (is_bi(x) || is_bi(y)) throw ExpressionError("bracket of a two-variable series" + at_position(n));
            if (std::holds_alternative<Element>(x) && std::holds_alternative<Element>(y))
                return algebra_->supercommutator(std::get<Element>(x), std::get<Element>(y));
            return BiSeries::bracket(as_series(x, order_), as_series(y, order_));
        }
        case Kind::power: {
            Value x = evaluate(n.left);
            if (is_bi(x)) throw ExpressionError("power of a two-variable series" + at_position(n));
            if (auto* e = std::get_if<Element>(&x)) {
                if (n.exponent < 0) {
                    if (!e->is_scalar() || e->constant_term() == 0)
                        throw ExpressionError("negative power of a non-invertible element" + at_position(n));
                    return algebra_->scalar(power(1 / e->constant_term(), -n.exponent));
                }
                Element out = algebra_->one();
                for (int k = 0; k < n.exponent; ++k) out = out * *e;
                return out;
            }
            PowerSeries base = std::get<PowerSeries>(x);
            if (n.exponent < 0) {
                try {
                    base = base.inverse();
                } catch (const NotInvertible& err) {
                    throw ExpressionError(std::string(err.what()) + at_position(n));
                }
            }
            PowerSeries out = PowerSeries::constant(algebra_, order_, 1);
            for (int k = 0; k < std::abs(n.exponent); ++k) out = out * base;
            return out;
        }
        case Kind::shift: {
            Value x = evaluate(n.left);
            if (!std::holds_alternative<PowerSeries>(x))
                throw ExpressionError("a shift @(u-c) applies to a series" + at_position(n));
            return std::get<PowerSeries>(x).shifted(n.number);
        }
    }
    throw ExpressionError("unhandled expression node");
}

Element ExpressionContext::element(const std::string& text) {
    Value v = evaluate(text);
    if (auto* e = std::get_if<Element>(&v)) return *e;
    throw ExpressionError("expected an element, got a series");
}

std::string render(const Value& value) {
    if (const auto* e = std::get_if<Element>(&value)) return e->str();
    if (const auto* s = std::get_if<PowerSeries>(&value)) return s->str();
    const auto& b = std::get<BiSeries>(value);
    std::string out;
    for (const auto& [key, c] : b.coefficients()) {
        if (key.first > b.exact_u() || key.second > b.exact_v()) continue;
        auto power_of = [](const char* var, int k) {
            return std::string(var) + (k < 0 ? "^1" : "^-" + std::to_string(k));
        };
        out += power_of("u", key.first) + " " + power_of("v", key.second) + ": " + c.str() + "\n";
    }
    return out.empty() ? "0\n" : out;
}

}  // namespace yangian
