#include "fada/ratfunc.hpp"

#include <stdexcept>
#include <vector>

namespace fada {

RationalFunction::RationalFunction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  *this = make_reduced(num, den);
}

RationalFunction RationalFunction::normalize_unit(Poly num, Poly den) {
  if (num.is_zero()) return {};
  const mpq_class lc = den.leading().second;
  if (lc != 1) {
    const mpq_class inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return RationalFunction(std::move(num), std::move(den), Reduced{});
}

RationalFunction RationalFunction::make_reduced(Poly num, Poly den) {
  if (num.is_zero()) return {};
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  return normalize_unit(std::move(num), std::move(den));
}

bool RationalFunction::in_power_series_ring() const {
  for (const auto& t : den_.terms())
    if (t.first.x_degree() == 0) return true;
  return false;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Reduced{});
    return RationalFunction::make_reduced(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one())
    return RationalFunction(a.num_ * b.den_ + b.num_, b.den_, RationalFunction::Reduced{});
  if (b.den_.is_one())
    return RationalFunction(a.num_ + b.num_ * a.den_, a.den_, RationalFunction::Reduced{});
  const Poly g = gcd(a.den_, b.den_);
  const Poly ad = *divide_exact(a.den_, g);
  const Poly bd = *divide_exact(b.den_, g);
  Poly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return {};
  Poly den = ad * b.den_;
  if (!g.is_constant()) {
    const Poly h = gcd(num, g);
    if (!h.is_constant()) {
      num = *divide_exact(num, h);
      den = *divide_exact(den, h);
    }
  }
  return RationalFunction::normalize_unit(std::move(num), std::move(den));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.den_.is_one() && b.den_.is_one())
    return RationalFunction(a.num_ * b.num_, a.den_, RationalFunction::Reduced{});
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant() && !an.is_constant()) {
    const Poly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = *divide_exact(an, g);
      bd = *divide_exact(bd, g);
    }
  }
  if (!ad.is_constant() && !bn.is_constant()) {
    const Poly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = *divide_exact(bn, g);
      ad = *divide_exact(ad, g);
    }
  }
  return RationalFunction::normalize_unit(an * bn, ad * bd);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return normalize_unit(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction r(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Reduced{});
  return r;
}

RationalFunction RationalFunction::evaluate_variable(std::size_t v, const mpq_class& value) const {
  Poly den = den_.evaluate_variable(v, value);
  if (den.is_zero()) throw std::domain_error("denominator vanishes at the substituted value");
  return make_reduced(num_.evaluate_variable(v, value), std::move(den));
}

namespace {

Poly substitute_homogenized(const Poly& p, const std::vector<std::vector<Poly>>& num_pow,
                            const std::vector<std::vector<Poly>>& den_pow, const std::vector<unsigned>& bound) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial beta_part;
    beta_part.e[0] = m.e[0];
    Poly term = Poly::monomial(beta_part, c);
    for (std::size_t i = 1; i < bound.size(); ++i) {
      if (!bound[i]) continue;
      term *= num_pow[i][m.e[i]];
      term *= den_pow[i][bound[i] - m.e[i]];
    }
    out += term;
  }
  return out;
}

}  // namespace

RationalFunction RationalFunction::substitute(std::span<const RationalFunction> images) const {
  if (is_zero()) return {};
  const std::size_t nv = images.size();
  std::vector<unsigned> bound(nv, 0);
  for (std::size_t i = 1; i < nv; ++i) bound[i] = std::max(num_.degree_in(i), den_.degree_in(i));
  std::vector<std::vector<Poly>> num_pow(nv), den_pow(nv);
  for (std::size_t i = 1; i < nv; ++i) {
    num_pow[i].push_back(Poly(1));
    den_pow[i].push_back(Poly(1));
    for (unsigned k = 1; k <= bound[i]; ++k) {
      num_pow[i].push_back(num_pow[i].back() * images[i].num());
      den_pow[i].push_back(den_pow[i].back() * images[i].den());
    }
  }
  Poly n = substitute_homogenized(num_, num_pow, den_pow, bound);
  Poly d = substitute_homogenized(den_, num_pow, den_pow, bound);
  if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  return make_reduced(std::move(n), std::move(d));
}

mpq_class RationalFunction::evaluate(std::span<const mpq_class> point) const {
  const mpq_class d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  const std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  const std::string nn = num_.size() > 1 ? "(" + n + ")" : n;
  return nn + "/(" + den_.to_string(names) + ")";
}

}  // namespace fada
