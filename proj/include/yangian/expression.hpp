#pragma once

// Text expressions over one shape and order.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := atom ('^' ['-'] INT | '@' '(' 'u' ('+'|'-') RATIONAL ')')*
//   atom    := RATIONAL | 't' '[' i ',' j ',' r ']' | 't' '(' i ',' j ')'
//            | 'd' '(' i ')' | 'e' '(' i ')' | 'f' '(' i ')' | 'ber' | 'qdet'
//            | '(' expr ')' | '[' expr ',' expr ']'
//
// t[i,j,r] is a generator; the other named atoms are series in u to the
// context order. [x, y] of two series is the two-variable [x(u), y(v)].

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "yangian/matrix.hpp"

namespace yangian {

class ParseError : public Error {
  public:
    ParseError(std::size_t position, std::string expected, std::string found);

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

  private:
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

/// Evaluation errors: type mismatches, non-invertible operands.
class ExpressionError : public Error {
  public:
    using Error::Error;
};

using Value = std::variant<Element, PowerSeries, BiSeries>;

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { number, generator, series, ber, qdet, sum, difference, negate, product, bracket, power, shift };
    Kind kind;
    Rational number;       // number, shift amount
    char series_name = 0;  // 't', 'd', 'e', 'f'
    int a = 0, b = 0, c = 0;
    int exponent = 0;
    ExprPtr left, right;
    std::size_t position = 0;
};

/// Syntax only; indices are checked when evaluated against a shape.
ExprPtr parse_expression(const std::string& text);

/// Shape, order and convention an expression is evaluated in; caches the
/// Gauss factors and Berezinian between evaluations.
class ExpressionContext {
  public:
    ExpressionContext(AlgebraPtr algebra, int order, Convention convention = Convention::plain);

    const AlgebraPtr& algebra() const { return algebra_; }
    int order() const { return order_; }
    Convention convention() const { return convention_; }

    Value evaluate(const ExprPtr& node);
    Value evaluate(const std::string& text) { return evaluate(parse_expression(text)); }
    /// Evaluates and requires an element (not a series).
    Element element(const std::string& text);

    const GaussFactors& factors();
    const PowerSeries& berezinian();
    const PowerSeries& quantum_determinant();

  private:
    AlgebraPtr algebra_;
    int order_;
    Convention convention_;
    std::optional<GaussFactors> factors_;
    std::optional<PowerSeries> ber_;
    std::optional<PowerSeries> qdet_;
};

std::string render(const Value& value);

}  // namespace yangian
