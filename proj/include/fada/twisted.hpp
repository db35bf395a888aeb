#ifndef FADA_TWISTED_HPP
#define FADA_TWISTED_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fada/scalar.hpp"
#include "fada/weyl.hpp"

namespace fada {

// Finite sum of c_u eta_u in the twisted group algebra, left Q-module
// convention. Zero coefficients are never stored.
class TwistedElement {
 public:
  using Map = std::map<AffineWeylElement, Scalar>;

  TwistedElement() = default;
  static TwistedElement eta(const AffineWeylElement& u, const Scalar& c = Scalar(1));
  static TwistedElement scalar(const Scalar& c) { return eta(AffineWeylElement{}, c); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const AffineWeylElement& u) const;
  void add_term(const AffineWeylElement& u, const Scalar& c);
  bool supported_on_translations() const;

  TwistedElement operator-() const;
  TwistedElement& operator+=(const TwistedElement& o);
  TwistedElement& operator-=(const TwistedElement& o);
  friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
  friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }
  // Left multiplication by a scalar.
  friend TwistedElement operator*(const Scalar& c, const TwistedElement& z);
  friend bool operator==(const TwistedElement& a, const TwistedElement& b);

 private:
  Map terms_;
};

// Elements of the Peterson subalgebra and of Q_{Q^vee} are twisted elements
// supported on translations.
using PetersonElement = TwistedElement;

struct XExpansion {
  // Coefficient of X_{I_u} for each u, keyed by group element.
  std::map<AffineWeylElement, Scalar> coeffs;
  bool all_in_S = true;
};

struct BorelUnit {
  std::vector<Scalar> a, b;
};

// One summand finite * central of a decomposition through D_W and the centre.
struct CentralTerm {
  TwistedElement finite;
  TwistedElement central;
};

// The twisted group algebra over a scalar context, with its distinguished
// elements and maps.
class Algebra {
 public:
  explicit Algebra(std::shared_ptr<const ScalarContext> ctx);

  const ScalarContext& ctx() const { return *ctx_; }
  const std::shared_ptr<const ScalarContext>& ctx_ptr() const { return ctx_; }
  const RootDatum& datum() const { return ctx_->datum(); }

  TwistedElement one() const { return TwistedElement::scalar(Scalar(1)); }
  TwistedElement eta(const AffineWeylElement& u) const { return TwistedElement::eta(u); }
  TwistedElement mul(const TwistedElement& a, const TwistedElement& b) const;
  TwistedElement pow(const TwistedElement& a, int k) const;
  // z * b with b a scalar on the right.
  TwistedElement mul_right(const TwistedElement& z, const Scalar& b) const;

  // X_i, Y_i for i in 0..n.
  TwistedElement demazure(int i) const;
  TwistedElement pushpull(int i) const;
  // X_alpha and Y_alpha for an arbitrary root (finite reflection s_alpha).
  TwistedElement demazure_root(int r) const;
  TwistedElement pushpull_root(int r) const;
  // Z_alpha = (1/x_{-alpha})(1 - eta_{t_{alpha^vee}}).
  TwistedElement z_elt(int r) const;
  TwistedElement x_word(const std::vector<int>& word) const;
  TwistedElement y_word(const std::vector<int>& word) const;
  // X_{I_u}, Y_{I_u} for the canonical reduced word of u (cached).
  const TwistedElement& x_canonical(const AffineWeylElement& u) const;
  const TwistedElement& y_canonical(const AffineWeylElement& u) const;

  PetersonElement pr(const TwistedElement& z) const;
  TwistedElement iota(const PetersonElement& xi) const;
  TwistedElement psi(const TwistedElement& z) const { return pr(z); }
  PetersonElement diamond(const TwistedElement& z, const PetersonElement& xi) const;
  // w(xi) = eta_w diamond xi and Delta_alpha(xi) = X_alpha diamond xi.
  PetersonElement weyl_act(int w, const PetersonElement& xi) const;
  PetersonElement delta(int r, const PetersonElement& xi) const;

  TwistedElement sigma_elt() const;
  TwistedElement y_pi() const;
  bool is_central(const TwistedElement& z) const;
  const BorelUnit& borel_unit() const;

  // Pairs (a_i, psi(Y b_i xi)) with xi = sum a_i psi(Y b_i xi), for xi
  // supported on translations; each second entry is central.
  std::vector<std::pair<Scalar, TwistedElement>> central_expansion(const PetersonElement& xi) const;
  // z = sum finite * central with finite = a_i X_{I_v}, v in W, from the
  // unique expansion z = sum_v xi_v X_{I_v} with xi_v on translations.
  std::vector<CentralTerm> central_decomposition(const TwistedElement& z) const;

  // Coefficients c_u with z = sum c_u X_{I_u}, u in the ball of radius L.
  XExpansion expand_in_x_basis(const TwistedElement& z, int L) const;

  std::string to_string(const TwistedElement& z) const;

 private:
  std::shared_ptr<const ScalarContext> ctx_;
  mutable std::mutex cache_mutex_;
  mutable std::map<AffineWeylElement, TwistedElement> x_cache_, y_cache_;
  mutable std::optional<BorelUnit> borel_;
};

}  // namespace fada

#endif  // FADA_TWISTED_HPP
