#ifndef FADA_DUAL_HPP
#define FADA_DUAL_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fada/report.hpp"
#include "fada/twisted.hpp"

namespace fada {

// Functional on the twisted group algebra given by its values f(eta_u) on a
// ball of radius L; pairing with c eta_u is c f(eta_u).
class DualFunctional {
 public:
  using Map = std::map<AffineWeylElement, Scalar>;

  DualFunctional() = default;
  explicit DualFunctional(int L) : ball_(L) {}
  // c f_u on the ball of radius L.
  static DualFunctional basis(const AffineWeylElement& u, int L, const Scalar& c = Scalar(1));

  int ball() const { return ball_; }
  const Map& values() const { return values_; }
  Scalar value(const AffineWeylElement& u) const;
  bool is_zero() const { return values_.empty(); }
  void add_term(const AffineWeylElement& u, const Scalar& c);

  DualFunctional& operator+=(const DualFunctional& o);
  DualFunctional& operator-=(const DualFunctional& o);
  friend DualFunctional operator+(DualFunctional a, const DualFunctional& b) { return a += b; }
  friend DualFunctional operator-(DualFunctional a, const DualFunctional& b) { return a -= b; }
  // Left scalar multiple (the odot action of c eta_e).
  friend DualFunctional operator*(const Scalar& c, const DualFunctional& f);
  friend bool operator==(const DualFunctional& a, const DualFunctional& b);

 private:
  int ball_ = 0;
  Map values_;
};

// f_{t_lambda w} = (1/denom) (x_mu odot g - x_mu bullet g) for g = coeff f_elem.
struct HH0Witness {
  AffineWeylElement elem;
  Scalar coeff;
  int simple = 0;
  Scalar x_mu;
  Scalar denom;
};

struct HH0Reduction {
  DualFunctional canonical;
  std::vector<HH0Witness> witnesses;
};

struct GradedRank {
  Report report;
  int stratum_size = 0;
  int cosets = 0;
  int z_rank = 0;
  int iota_rank = 0;
  int relation_rank = 0;
};

using PairMap = std::map<std::pair<AffineWeylElement, AffineWeylElement>, Scalar>;

class Dual {
 public:
  explicit Dual(const Algebra& alg) : alg_(alg) {}

  const Algebra& algebra() const { return alg_; }

  Scalar evaluate(const DualFunctional& f, const TwistedElement& z) const;
  DualFunctional bullet(const TwistedElement& z, const DualFunctional& f) const;
  DualFunctional odot(const TwistedElement& z, const DualFunctional& f) const;
  DualFunctional iota_star(const DualFunctional& f) const;

  HH0Reduction hh0_reduce(const DualFunctional& f) const;
  // The functional a witness describes, recomputed through bullet and odot.
  DualFunctional witness_value(const HH0Witness& w, int L) const;

  // Y*_{I_w} for every w in the ball of radius L, on the same ball.
  std::map<AffineWeylElement, DualFunctional> dual_basis_y(int L) const;
  // prod_{alpha > 0} x_alpha^{ell_alpha(w)}.
  Scalar ell_product(const AffineWeylElement& w) const;
  // Reciprocal leading coefficient of Y_{I_w}: product of x over the finite
  // parts of the inversions met along the canonical word.
  Scalar inversion_product(const AffineWeylElement& w) const;
  // prod_{alpha > 0} x_alpha^{ell_alpha(w_lambda)}.
  Scalar delta_lambda(const Lattice& lambda) const;
  int stratum_of(const AffineWeylElement& u) const;

  // Divisibility conditions on the cosets t_lambda W with ell(w_lambda) equal
  // to the stratum (default: the lowest stratum met by the support).
  Report gkm_check(const DualFunctional& f, std::optional<int> stratum = std::nullopt) const;
  std::vector<AffineWeylElement> filtration_stratum(int i, int L) const;
  GradedRank graded_rank_check(int i, int L) const;

  PairMap m_star(const DualFunctional& f, int L) const;
  // (sum c f_x (x) f_y)(a eta_u (x) b eta_v) = sum c a x(b) delta_{x,u} delta_{y,v}.
  Scalar pair_hat(const PairMap& m, const Scalar& a, const AffineWeylElement& u, const Scalar& b,
                  const AffineWeylElement& v) const;

 private:
  void check_ball(const AffineWeylElement& u, int L) const;

  const Algebra& alg_;
};

}  // namespace fada

#endif  // FADA_DUAL_HPP
