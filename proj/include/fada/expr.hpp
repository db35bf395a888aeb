#ifndef FADA_EXPR_HPP
#define FADA_EXPR_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "fada/peterson.hpp"

namespace fada {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Result of an expression: a scalar or an element of the twisted algebra.
struct Value {
  std::variant<Scalar, TwistedElement> v;

  bool is_scalar() const { return std::holds_alternative<Scalar>(v); }
  const Scalar& scalar() const { return std::get<Scalar>(v); }
  TwistedElement element() const;
};

// Expressions over one algebra context.
//   scalars: integers, b / beta, mu, x1..xn, x(c1,..,cn), kappa(c1,..,cn)
//   elements: X0..Xn, Y0..Yn, Z(c1,..,cn), eta(t[..]*s1...), sigma, Ypi,
//             frakX([i,..]), frakY([i,..]), psi(e), pr(e)
//   operators: + - * / ^ and parentheses; z * c multiplies on the right.
class ExprEvaluator {
 public:
  explicit ExprEvaluator(const Algebra& alg);

  Value eval(const std::string& text) const;
  // Text that eval maps back to an equal value.
  std::string render(const Value& v) const;
  std::string render_x_basis(const TwistedElement& z, int L) const;
  std::string render_presentation(const PresentationElement& p) const;

 private:
  const Algebra& alg_;
  Peterson pet_;
};

}  // namespace fada

#endif  // FADA_EXPR_HPP
