// Arithmetic expression parser/evaluator for height functions f(x1, x2).
//
// Grammar (and nothing more):
//   variables x1, x2; numeric literals; binary + - * / ^; unary -;
//   functions exp, sin, cos, sqrt, ln.
// Precedence: ^  >  unary -  >  * /  >  + -, with ^ right-associative and
// everything else left-associative.
//
// Evaluation returns a second-order jet (value, gradient, Hessian), so the
// geometry built on top of an expression surface sees exact derivatives.
// Expressions are immutable and freely shareable across threads.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slope_nav/jet.hpp"

namespace slope_nav::expr {

namespace detail {
struct Node;
}

// Syntax/identifier/arity failure; `offset` is the byte position in the
// source where the unexpected token (or bad identifier) starts.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what), offset(offset_) {}
    std::size_t offset;
};

// Numeric domain failure during evaluation (sqrt/ln of a negative value,
// division by zero, ...). Carries a pretty-print of the innermost offending
// sub-expression.
struct EvalDomainError : std::runtime_error {
    EvalDomainError(const std::string& what, std::string subexpression_)
        : std::runtime_error(what), subexpression(std::move(subexpression_)) {}
    std::string subexpression;
};

class Expression {
  public:
    // Throws ParseError. The whole source must be consumed.
    static Expression parse(std::string_view source);

    // Exact value/gradient/Hessian at (x1, x2). Throws EvalDomainError.
    Jet2 eval_jet2(double x1, double x2) const;

    // Deterministic minimal-parenthesis rendering; parse(to_string()) yields
    // a structurally identical AST.
    std::string to_string() const;

    friend bool operator==(const Expression& a, const Expression& b);

  private:
    explicit Expression(std::shared_ptr<const detail::Node> root);
    std::shared_ptr<const detail::Node> root_;
};

}  // namespace slope_nav::expr
