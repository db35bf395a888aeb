#ifndef FADA_SERIES_HPP
#define FADA_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fada/poly.hpp"
#include "fada/ratfunc.hpp"
#include "fada/weyl.hpp"

namespace fada {

// F(x, y) = x + y + sum_{i,j>=1} a_ij x^i y^j, known through total degree N.
class FormalGroupLaw {
 public:
  using Table = std::map<std::pair<int, int>, mpq_class>;

  // Validates commutativity and associativity through degree N.
  FormalGroupLaw(int N, Table coeffs);

  // Table of the hyperbolic law x + y - beta*x*y at a rational beta.
  static FormalGroupLaw hyperbolic_table(const mpq_class& beta, int N);
  // Lines "i j p/q"; '#' starts a comment; entries above degree N are dropped.
  static FormalGroupLaw load(const std::string& path, int N);

  int degree() const { return N_; }
  mpq_class coefficient(int i, int j) const;
  const Table& table() const { return coeffs_; }

  // F(u, v) for series u, v without constant term, truncated at degree N.
  Poly apply(const Poly& u, const Poly& v) const;
  // Formal inverse of the series u (no constant term), truncated at degree N.
  Poly inverse(const Poly& u) const;

 private:
  int N_;
  Table coeffs_;
  Poly inverse_series_;  // iota(x_1) in variable 1
};

// Truncated power series in x_1..x_n over Q together with the series x_gamma of
// every root gamma, for the table backend.
class SeriesRing {
 public:
  SeriesRing(const RootDatum& datum, FormalGroupLaw fgl);

  int degree() const { return fgl_.degree(); }
  int rank() const { return rank_; }
  const FormalGroupLaw& fgl() const { return fgl_; }
  const RootDatum& datum() const { return datum_; }

  // x_lambda by iterated formal sums in the canonical order.
  Poly x_of(const Lattice& lambda) const;
  const Poly& root_series(int r) const { return root_series_[r]; }
  // x_gamma / x_{-gamma} for a positive root gamma (a unit).
  const Poly& negation_unit(int r) const { return negation_unit_[r]; }

  // Quotient a / x_gamma when it exists through degree prec; the quotient is
  // known through prec - 1.
  std::optional<Poly> divide_by_root(const Poly& a, int r, int prec) const;
  // Inverse of a series with nonzero constant term, through degree prec.
  Poly unit_inverse(const Poly& u, int prec) const;
  // Substitutes x_i := images[i - 1], truncating at degree prec.
  Poly substitute(const Poly& a, const std::vector<const Poly*>& images, int prec) const;
  // Power-series expansion of a rational function over Q (beta already
  // specialized) whose denominator is a unit.
  Poly expand(const RationalFunction& f, int prec) const;

 private:
  RootDatum datum_;
  FormalGroupLaw fgl_;
  int rank_;
  std::vector<Poly> root_series_;
  std::vector<Poly> negation_unit_;
};

}  // namespace fada

#endif  // FADA_SERIES_HPP
