#ifndef FADA_PETERSON_HPP
#define FADA_PETERSON_HPP

#include <map>
#include <utility>
#include <vector>

#include "fada/report.hpp"
#include "fada/twisted.hpp"

namespace fada {

// S-combination of the monomials t^k (s = 0) and s t^k (s = 1) in the
// presentation S[s, t] / (s^2 = x_{-1} s t + mu t); k may be negative in the
// localized algebra.
class PresentationElement {
 public:
  using Key = std::pair<int, int>;  // (s exponent, t exponent)
  using Map = std::map<Key, Scalar>;

  PresentationElement() = default;
  static PresentationElement monomial(int s, int k, const Scalar& c = Scalar(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int s, int k) const;
  void add_term(int s, int k, const Scalar& c);

  PresentationElement& operator+=(const PresentationElement& o);
  PresentationElement& operator-=(const PresentationElement& o);
  friend PresentationElement operator+(PresentationElement a, const PresentationElement& b) { return a += b; }
  friend PresentationElement operator-(PresentationElement a, const PresentationElement& b) { return a -= b; }
  friend bool operator==(const PresentationElement& a, const PresentationElement& b);

 private:
  Map terms_;
};

// Element of the tensor square of Q_{Q^vee} over Q as a left module: the
// coefficient of eta_u (x) eta_v is kept on the left factor.
class TensorElement {
 public:
  using Key = std::pair<AffineWeylElement, AffineWeylElement>;
  using Map = std::map<Key, Scalar>;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const AffineWeylElement& u, const AffineWeylElement& v) const;
  void add_term(const AffineWeylElement& u, const AffineWeylElement& v, const Scalar& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& c, const TensorElement& t);
  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  Map terms_;
};

// The formal Peterson subalgebra over an algebra context. Operations marked
// affine A1 throw std::domain_error for other data.
class Peterson {
 public:
  explicit Peterson(const Algebra& alg);

  const Algebra& algebra() const { return alg_; }

  PetersonElement frak_x(const AffineWeylElement& u) const;
  PetersonElement frak_y(const AffineWeylElement& u) const;
  PetersonElement p_mul(const PetersonElement& a, const PetersonElement& b) const;

  // Affine A1: frak_y(sigma_i), i >= 0 (cached).
  const PetersonElement& frak_y_sigma(int i) const;
  // Affine A1: coordinates in the basis frak_y(sigma_i), i >= 0.
  std::map<int, Scalar> expand_in_frak_y(const PetersonElement& xi, int L) const;

  PresentationElement to_presentation(const PetersonElement& xi, int L) const;
  PetersonElement from_presentation(const PresentationElement& p, int L) const;
  // Product in the (localized) presentation, reduced by the relation.
  PresentationElement pres_mul(const PresentationElement& a, const PresentationElement& b) const;
  std::vector<CheckResult> localize_check(int k) const;

  // Tensor product of the left factors' coefficients, factors multiplied.
  TensorElement t_mul(const TensorElement& a, const TensorElement& b) const;
  TensorElement tensor(const PetersonElement& a, const PetersonElement& b) const;
  TensorElement coproduct(const PetersonElement& xi) const;
  // Affine A1: coefficients c_ij with coproduct(xi) = sum c_ij Y_i (x) Y_j.
  std::map<std::pair<int, int>, Scalar> coproduct_in_frak_y(const PetersonElement& xi, int L) const;
  Scalar counit(const PetersonElement& xi) const;
  PetersonElement antipode(const PetersonElement& xi) const;

 private:
  void require_affine_a1(const char* what) const;
  int rank_of(const Lattice& lambda) const;

  const Algebra& alg_;
  mutable std::mutex mutex_;
  mutable std::map<int, PetersonElement> sigma_cache_;
};

}  // namespace fada

#endif  // FADA_PETERSON_HPP
