#ifndef FADA_POLY_HPP
#define FADA_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fada {

// Variable 0 is the formal group law parameter beta; variables 1..n are the
// simple-root classes x_1..x_n.
inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const;
  // Total degree ignoring variable 0 (beta).
  unsigned x_degree() const;
  bool divides(const Monomial& other) const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  // Requires divides(*this, other) in the reverse direction; no checks.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order, variable 0 most significant within a degree.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted in decreasing
// grlex order with no zero coefficients, so equality is structural.
class Poly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Poly() = default;
  explicit Poly(const mpq_class& c);
  explicit Poly(long c) : Poly(mpq_class(c)) {}

  static Poly variable(std::size_t v, unsigned power = 1);
  static Poly monomial(const Monomial& m, const mpq_class& c);
  // Builds from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  mpq_class constant_term() const;

  unsigned degree() const;
  unsigned degree_in(std::size_t v) const;
  // Lowest total degree in the x variables; npos-like max for zero.
  unsigned x_valuation() const;
  // Bitmask of variables that occur.
  std::uint32_t variables() const;
  Monomial min_exponents() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const mpq_class& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned k) const;
  Poly mul_monomial(const Monomial& m) const;
  Poly div_monomial(const Monomial& m) const;

  // Drops every term whose x-degree exceeds max_degree.
  Poly truncated(unsigned max_x_degree) const;
  // Product truncated at x-degree max_x_degree.
  static Poly mul_truncated(const Poly& a, const Poly& b, unsigned max_x_degree);
  Poly x_homogeneous_part(unsigned d) const;

  Poly evaluate_variable(std::size_t v, const mpq_class& value) const;
  mpq_class evaluate(std::span<const mpq_class> point) const;

  // Scales to integer coefficients with content 1 and positive leading
  // coefficient. Returns the factor applied.
  mpq_class make_primitive();

  std::string to_string(std::span<const std::string> names) const;
  std::size_t hash() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Returns a/b when b divides a exactly, nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor, integer-primitive with positive leading coefficient.
// gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace fada

#endif  // FADA_POLY_HPP
