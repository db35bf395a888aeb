#ifndef FADA_RATFUNC_HPP
#define FADA_RATFUNC_HPP

#include <string>

#include "fada/poly.hpp"

namespace fada {

// Element of Q(beta, x_1, ..., x_n) in lowest terms. The denominator is
// monic in grlex order, so two equal values are structurally equal.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  explicit RationalFunction(const Poly& num) : num_(num), den_(1) {}
  explicit RationalFunction(const mpq_class& c) : num_(c), den_(1) {}
  RationalFunction(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // True when the denominator is a unit in Q(beta)[[x]].
  bool in_power_series_ring() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;

  // Substitutes variable v := value. Throws if the denominator vanishes.
  RationalFunction evaluate_variable(std::size_t v, const mpq_class& value) const;
  // Substitutes x_i := images[i] for i = 1..n simultaneously (variable 0 is
  // kept). images[0] is ignored.
  RationalFunction substitute(std::span<const RationalFunction> images) const;
  mpq_class evaluate(std::span<const mpq_class> point) const;

  std::string to_string(std::span<const std::string> names) const;
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  struct Reduced {};
  RationalFunction(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction make_reduced(Poly num, Poly den);
  static RationalFunction normalize_unit(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

}  // namespace fada

#endif  // FADA_RATFUNC_HPP
