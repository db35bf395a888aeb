#include "fada/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fada {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

unsigned Monomial::x_degree() const { return degree() - e[0]; }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i] + other.e[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i] - other.e[i]);
  return m;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
  return h;
}

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return grlex_less(b.first, a.first); }

}  // namespace

Poly::Poly(const mpq_class& c) {
  if (c == 0) return;
  terms_.push_back({Monomial{}, c});
  terms_.back().second.canonicalize();
}

Poly Poly::variable(std::size_t v, unsigned power) {
  Monomial m;
  m.e[v] = static_cast<std::uint16_t>(power);
  return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1; }

mpq_class Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

unsigned Poly::degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned Poly::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.first.e[v]);
  return d;
}

unsigned Poly::x_valuation() const {
  unsigned v = std::numeric_limits<unsigned>::max();
  for (const auto& t : terms_) v = std::min(v, t.first.x_degree());
  return v;
}

std::uint32_t Poly::variables() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.first.e[i]) mask |= 1u << i;
  return mask;
}

Monomial Poly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().first;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], t.first.e[i]);
  return m;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->first == b->first) {
      mpq_class c = a->second + b->second;
      if (c != 0) out.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    } else if (grlex_less(b->first, a->first)) {
      out.push_back(std::move(*a++));
    } else {
      out.push_back(*b++);
    }
  }
  for (; a != ae; ++a) out.push_back(std::move(*a));
  for (; b != be; ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.leading().second;
  if (a.is_constant()) return b * a.leading().second;
  std::vector<Poly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) terms.push_back({ma * mb, ca * cb});
  return Poly::from_terms(std::move(terms));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::mul_monomial(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;
}

Poly Poly::div_monomial(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) t.first = t.first / m;
  return p;
}

Poly Poly::truncated(unsigned max_x_degree) const {
  Poly p;
  for (const auto& t : terms_)
    if (t.first.x_degree() <= max_x_degree) p.terms_.push_back(t);
  return p;
}

Poly Poly::mul_truncated(const Poly& a, const Poly& b, unsigned max_x_degree) {
  std::vector<Term> terms;
  for (const auto& [ma, ca] : a.terms_) {
    const unsigned da = ma.x_degree();
    if (da > max_x_degree) continue;
    for (const auto& [mb, cb] : b.terms_)
      if (da + mb.x_degree() <= max_x_degree) terms.push_back({ma * mb, ca * cb});
  }
  return from_terms(std::move(terms));
}

Poly Poly::x_homogeneous_part(unsigned d) const {
  Poly p;
  for (const auto& t : terms_)
    if (t.first.x_degree() == d) p.terms_.push_back(t);
  return p;
}

Poly Poly::evaluate_variable(std::size_t v, const mpq_class& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mpq_class cc = c;
    for (unsigned k = 0; k < m.e[v]; ++k) cc *= value;
    mm.e[v] = 0;
    terms.push_back({mm, cc});
  }
  return from_terms(std::move(terms));
}

mpq_class Poly::evaluate(std::span<const mpq_class> point) const {
  mpq_class sum = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      for (unsigned k = 0; k < m.e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

mpq_class Poly::make_primitive() {
  if (terms_.empty()) return 1;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
  for (const auto& t : terms_) {
    mpz_class n = t.second.get_num() * (den_lcm / t.second.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_.front().second < 0) factor = -factor;
  if (factor != 1) *this *= factor;
  return factor;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.is_one() || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m.e[i]) continue;
      if (need_star) os << '*';
      os << names[i];
      if (m.e[i] > 1) os << '^' << m.e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  MonomialHash mh;
  for (const auto& [m, c] : terms_) {
    h = h * 1000003u ^ mh(m);
    h = h * 1000003u ^ std::hash<std::string>{}(c.get_str());
  }
  return h;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return Poly{};
  if (b.is_constant()) return a * mpq_class(1 / b.leading().second);
  const auto& [lm, lc] = b.leading();
  if (a.degree() < b.degree()) return std::nullopt;
  std::map<Monomial, mpq_class, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
  std::vector<Poly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lm.divides(top->first)) return std::nullopt;
    const Monomial qm = top->first / lm;
    const mpq_class qc = top->second / lc;
    quotient.push_back({qm, qc});
    for (const auto& [m, c] : b.terms()) {
      const Monomial key = m * qm;
      auto [it, inserted] = rem.try_emplace(key, 0);
      it->second -= c * qc;
      if (it->second == 0) rem.erase(it);
    }
  }
  return Poly::from_terms(std::move(quotient));
}

namespace {

using Coeffs = std::vector<Poly>;

Coeffs split(const Poly& p, std::size_t v) {
  std::vector<std::vector<Poly::Term>> buckets(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    const unsigned k = mm.e[v];
    mm.e[v] = 0;
    buckets[k].push_back({mm, c});
  }
  Coeffs out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

Poly join(const Coeffs& coeffs, std::size_t v) {
  std::vector<Poly::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [m, c] : coeffs[k].terms()) {
      Monomial mm = m;
      mm.e[v] = static_cast<std::uint16_t>(k);
      terms.push_back({mm, c});
    }
  return Poly::from_terms(std::move(terms));
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly content(const Coeffs& coeffs) {
  Poly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

// Primitive part with respect to v, scaled to integer content 1.
Poly primitive_in(const Poly& p, std::size_t v) {
  Coeffs cs = split(p, v);
  Poly c = content(cs);
  Poly out = c.is_constant() ? p : exact(p, c);
  out.make_primitive();
  return out;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t v) {
  Coeffs A = split(a, v), B = split(b, v);
  trim(A);
  trim(B);
  const Poly lcb = B.back();
  while (!A.empty() && A.size() >= B.size()) {
    const Poly lca = A.back();
    const std::size_t shift = A.size() - B.size();
    for (auto& x : A) x *= lcb;
    for (std::size_t j = 0; j < B.size(); ++j) A[j + shift] -= lca * B[j];
    A.pop_back();
    trim(A);
  }
  return join(A, v);
}

Poly gcd_core(const Poly& a, const Poly& b) {
  const std::uint32_t va = a.variables(), vb = b.variables();
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    const std::uint32_t bit = 1u << v;
    if ((va & bit) && !(vb & bit)) return gcd(content(split(a, v)), b);
    if ((vb & bit) && !(va & bit)) return gcd(a, content(split(b, v)));
  }
  std::size_t main = kMaxVars;
  unsigned best = std::numeric_limits<unsigned>::max();
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!(va & (1u << v))) continue;
    const unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }
  if (main == kMaxVars) return Poly(1);

  const Poly ca = content(split(a, main));
  const Poly cb = content(split(b, main));
  Poly c = gcd(ca, cb);
  Poly pa = ca.is_constant() ? a : exact(a, ca);
  Poly pb = cb.is_constant() ? b : exact(b, cb);
  pa.make_primitive();
  pb.make_primitive();
  if (pa.degree_in(main) < pb.degree_in(main)) std::swap(pa, pb);
  while (true) {
    Poly r = pseudo_remainder(pa, pb, main);
    if (r.is_zero()) break;
    if (r.degree_in(main) == 0) {
      pb = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, main);
  }
  if (!pb.is_constant()) pb = primitive_in(pb, main);
  return c * pb;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    Poly g = a.is_zero() ? b : a;
    g.make_primitive();
    return g;
  }
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) {
    Poly g = a;
    g.make_primitive();
    return g;
  }
  const Monomial ma = a.min_exponents(), mb = b.min_exponents();
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::min(ma.e[i], mb.e[i]);
  const Poly ra = ma.is_one() ? a : a.div_monomial(ma);
  const Poly rb = mb.is_one() ? b : b.div_monomial(mb);
  Poly g;
  if (ra.is_constant() || rb.is_constant()) {
    g = Poly(1);
  } else if (ra.size() == 1 || rb.size() == 1) {
    // A monomial shares no non-monomial factor; the monomial part is already in m.
    g = Poly(1);
  } else {
    g = gcd_core(ra, rb);
  }
  g = g.mul_monomial(m);
  g.make_primitive();
  return g;
}

}  // namespace fada
