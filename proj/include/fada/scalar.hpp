#ifndef FADA_SCALAR_HPP
#define FADA_SCALAR_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fada/ratfunc.hpp"
#include "fada/series.hpp"
#include "fada/weyl.hpp"

namespace fada {

// Table-backend value num / prod_gamma x_gamma^{den[gamma]}, with num known
// through total degree prec. Denominators live on positive roots only.
class TableScalar {
 public:
  TableScalar(std::shared_ptr<const SeriesRing> ring, Poly num, std::vector<int> den, int prec);
  static TableScalar constant(std::shared_ptr<const SeriesRing> ring, const mpq_class& c);

  const Poly& num() const { return num_; }
  const std::vector<int>& den() const { return den_; }
  int precision() const { return prec_; }
  const std::shared_ptr<const SeriesRing>& ring() const { return ring_; }
  bool is_zero() const { return num_.is_zero(); }
  bool has_denominator() const;

  TableScalar operator-() const;
  friend TableScalar operator+(const TableScalar& a, const TableScalar& b);
  friend TableScalar operator*(const TableScalar& a, const TableScalar& b);
  friend TableScalar operator/(const TableScalar& a, const TableScalar& b);
  TableScalar act(int w) const;
  std::optional<TableScalar> divide_root_power(int r, int k) const;
  // Numerator after moving to the denominator multiset den (a superset).
  Poly numerator_over(const std::vector<int>& den, int* prec) const;

 private:
  void reduce();

  std::shared_ptr<const SeriesRing> ring_;
  Poly num_;
  std::vector<int> den_;
  int prec_;
};

// Element of the localized formal group algebra, in either backend. A
// hyperbolic constant combines freely with table values.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const mpq_class& c) : v_(RationalFunction(c)) {}
  explicit Scalar(long c) : Scalar(mpq_class(c)) {}
  explicit Scalar(RationalFunction f) : v_(std::move(f)) {}
  explicit Scalar(TableScalar t) : v_(std::move(t)) {}

  bool is_table() const { return std::holds_alternative<TableScalar>(v_); }
  const RationalFunction& rational() const { return std::get<RationalFunction>(v_); }
  const TableScalar& table() const { return std::get<TableScalar>(v_); }

  bool is_zero() const;
  bool is_one() const;
  // Rational constant (no beta, no x) when it is one.
  std::optional<mpq_class> as_constant() const;
  // Lies in S: no denominator after reduction (table) or a unit denominator.
  bool in_S() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(int k) const;
  std::size_t hash() const;

 private:
  std::variant<RationalFunction, TableScalar> v_;
};

enum class Backend { hyperbolic, table };

// Shared immutable data for scalar computations over one root datum and one
// formal group law.
class ScalarContext {
 public:
  // Hyperbolic law with symbolic beta, or beta fixed to a rational.
  static std::shared_ptr<const ScalarContext> hyperbolic(std::shared_ptr<const RootDatum> datum,
                                                         std::optional<mpq_class> beta = std::nullopt);
  static std::shared_ptr<const ScalarContext> table(std::shared_ptr<const RootDatum> datum, FormalGroupLaw fgl);

  Backend backend() const { return backend_; }
  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }
  const std::optional<mpq_class>& beta_value() const { return beta_value_; }
  const SeriesRing& ring() const { return *ring_; }
  int truncation() const { return ring_ ? ring_->degree() : 0; }

  Scalar constant(const mpq_class& c) const;
  // beta (hyperbolic; the fixed value when specialized), or -a_11 in table mode.
  Scalar beta() const;
  Scalar x_of(const Lattice& lambda) const;
  const Scalar& x_root(int r) const { return x_root_[r]; }
  const Scalar& x_simple(int i) const { return x_root_[datum_->simple_root(i)]; }
  Scalar kappa(int r) const;
  // mu = -x_{-alpha_1} / x_{alpha_1}.
  Scalar mu() const;
  // prod over positive roots of x_{-alpha}.
  const Scalar& frak_x() const { return frak_x_; }

  Scalar act(int w, const Scalar& s) const;
  Scalar act(const AffineWeylElement& u, const Scalar& s) const { return act(u.w, s); }
  // Quotient s / x_gamma^k when it lies in S.
  std::optional<Scalar> divides(const Scalar& s, int r, int k) const;

  // Variable names for printing: b, x1..xn.
  const std::vector<std::string>& names() const { return names_; }
  std::string to_string(const Scalar& s) const;

 private:
  ScalarContext() = default;
  void init_roots();

  Backend backend_ = Backend::hyperbolic;
  std::shared_ptr<const RootDatum> datum_;
  std::optional<mpq_class> beta_value_;
  std::shared_ptr<const SeriesRing> ring_;
  std::vector<Scalar> x_root_;
  std::vector<std::vector<RationalFunction>> images_;  // hyperbolic: images_[w][i] = x_{w(alpha_i)}
  Scalar frak_x_;
  std::vector<std::string> names_;
};

Scalar specialize_beta(const Scalar& s, const mpq_class& value);

}  // namespace fada

#endif  // FADA_SCALAR_HPP
