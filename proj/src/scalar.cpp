#include "fada/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fada {

namespace {

unsigned valuation(const Poly& p, int prec) {
  return p.is_zero() ? static_cast<unsigned>(prec + 1) : p.x_valuation();
}

// Product of a (known through pa) and b (known through pb), with its precision.
std::pair<Poly, int> mul_series(const Poly& a, int pa, const Poly& b, int pb, int cap) {
  const int prec = std::min({pa + static_cast<int>(valuation(b, pb)), pb + static_cast<int>(valuation(a, pa)), cap});
  if (prec < 0) return {Poly(), prec};
  return {Poly::mul_truncated(a, b, static_cast<unsigned>(prec)), prec};
}

}  // namespace

TableScalar::TableScalar(std::shared_ptr<const SeriesRing> ring, Poly num, std::vector<int> den, int prec)
    : ring_(std::move(ring)), num_(std::move(num)), prec_(std::min(prec, ring_->degree())) {
  const RootDatum& d = ring_->datum();
  const int P = d.num_positive();
  den.resize(d.num_roots(), 0);
  den_.assign(P, 0);
  for (int r = 0; r < P; ++r) den_[r] = den[r];
  for (int r = P; r < d.num_roots(); ++r) {
    for (int k = 0; k < den[r]; ++k) {
      const int pos = d.negate(r);
      auto [n, p] = mul_series(num_, prec_, ring_->negation_unit(pos), ring_->degree() - 1, ring_->degree());
      num_ = std::move(n);
      prec_ = p;
      ++den_[pos];
    }
  }
  reduce();
}

TableScalar TableScalar::constant(std::shared_ptr<const SeriesRing> ring, const mpq_class& c) {
  const int N = ring->degree();
  return TableScalar(std::move(ring), Poly(c), {}, N);
}

bool TableScalar::has_denominator() const {
  return std::any_of(den_.begin(), den_.end(), [](int k) { return k > 0; });
}

void TableScalar::reduce() {
  if (prec_ < 0) throw std::runtime_error("table-mode precision exhausted");
  num_ = num_.truncated(static_cast<unsigned>(prec_));
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0);
    return;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    if (num_.constant_term() != 0) break;
    for (std::size_t r = 0; r < den_.size(); ++r) {
      if (den_[r] == 0) continue;
      auto q = ring_->divide_by_root(num_, static_cast<int>(r), prec_);
      if (!q) continue;
      num_ = std::move(*q);
      --prec_;
      --den_[r];
      if (prec_ < 0) throw std::runtime_error("table-mode precision exhausted");
      progress = true;
      break;
    }
  }
}

TableScalar TableScalar::operator-() const {
  TableScalar t = *this;
  t.num_ = -t.num_;
  return t;
}

Poly TableScalar::numerator_over(const std::vector<int>& den, int* prec) const {
  Poly n = num_;
  int p = prec_;
  for (std::size_t r = 0; r < den_.size(); ++r)
    for (int k = den_[r]; k < den[r]; ++k) {
      auto [m, q] = mul_series(n, p, ring_->root_series(static_cast<int>(r)), ring_->degree(), ring_->degree());
      n = std::move(m);
      p = q;
    }
  *prec = p;
  return n;
}

TableScalar operator+(const TableScalar& a, const TableScalar& b) {
  if (a.ring_ != b.ring_ && a.ring_.get() != b.ring_.get()) throw std::invalid_argument("mixed series rings");
  std::vector<int> D(a.den_.size());
  for (std::size_t r = 0; r < D.size(); ++r) D[r] = std::max(a.den_[r], b.den_[r]);
  int pa, pb;
  Poly na = a.numerator_over(D, &pa);
  Poly nb = b.numerator_over(D, &pb);
  return TableScalar(a.ring_, na + nb, D, std::min(pa, pb));
}

TableScalar operator*(const TableScalar& a, const TableScalar& b) {
  auto [n, p] = mul_series(a.num_, a.prec_, b.num_, b.prec_, a.ring_->degree());
  std::vector<int> D(a.den_.size());
  for (std::size_t r = 0; r < D.size(); ++r) D[r] = a.den_[r] + b.den_[r];
  return TableScalar(a.ring_, std::move(n), std::move(D), p);
}

TableScalar operator/(const TableScalar& a, const TableScalar& b) {
  const auto& ring = a.ring_;
  Poly u = b.num_;
  int pu = b.prec_;
  std::vector<int> factors(b.den_.size(), 0);
  while (u.constant_term() == 0) {
    if (u.is_zero()) throw std::domain_error("division by zero");
    bool found = false;
    for (std::size_t r = 0; r < factors.size(); ++r) {
      auto q = ring->divide_by_root(u, static_cast<int>(r), pu);
      if (!q) continue;
      u = std::move(*q);
      --pu;
      ++factors[r];
      found = true;
      break;
    }
    if (!found) throw std::domain_error("table-mode division by a series that is not a unit times root factors");
    if (pu < 0) throw std::runtime_error("table-mode precision exhausted");
  }
  TableScalar m(ring, ring->unit_inverse(u, pu), factors, pu);
  for (std::size_t r = 0; r < b.den_.size(); ++r)
    for (int k = 0; k < b.den_[r]; ++k) m = m * TableScalar(ring, ring->root_series(static_cast<int>(r)), {}, ring->degree());
  return a * m;
}

TableScalar TableScalar::act(int w) const {
  if (w == 0) return *this;
  const RootDatum& d = ring_->datum();
  std::vector<const Poly*> images;
  for (int i = 1; i <= d.rank(); ++i) images.push_back(&ring_->root_series(d.w_act_root(w, d.simple_root(i))));
  Poly n = ring_->substitute(num_, images, prec_);
  std::vector<int> den(d.num_roots(), 0);
  for (std::size_t r = 0; r < den_.size(); ++r) den[d.w_act_root(w, static_cast<int>(r))] += den_[r];
  return TableScalar(ring_, std::move(n), std::move(den), prec_);
}

std::optional<TableScalar> TableScalar::divide_root_power(int r, int k) const {
  Poly n = num_;
  int p = prec_;
  for (int i = 0; i < k; ++i) {
    if (n.is_zero()) break;
    auto q = ring_->divide_by_root(n, r, p);
    if (!q) return std::nullopt;
    n = std::move(*q);
    --p;
  }
  if (p < 0) throw std::runtime_error("table-mode precision exhausted");
  return TableScalar(ring_, std::move(n), den_, p);
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (!a.is_table() && !b.is_table()) return Scalar(op(a.rational(), b.rational()));
  if (a.is_table() && b.is_table()) return Scalar(op(a.table(), b.table()));
  const Scalar& t = a.is_table() ? a : b;
  const Scalar& c = a.is_table() ? b : a;
  const auto k = c.as_constant();
  if (!k) throw std::invalid_argument("cannot mix hyperbolic and table scalars");
  TableScalar ct = TableScalar::constant(t.table().ring(), *k);
  return a.is_table() ? Scalar(op(a.table(), ct)) : Scalar(op(ct, b.table()));
}

}  // namespace

bool Scalar::is_zero() const { return is_table() ? table().is_zero() : rational().is_zero(); }

bool Scalar::is_one() const {
  if (!is_table()) return rational().is_one();
  return table().num().is_one() && !table().has_denominator();
}

std::optional<mpq_class> Scalar::as_constant() const {
  if (is_table()) {
    if (table().has_denominator() || !table().num().is_constant()) return std::nullopt;
    return table().num().constant_term();
  }
  const auto& f = rational();
  if (!f.den().is_one() || !f.num().is_constant()) return std::nullopt;
  return f.num().constant_term();
}

bool Scalar::in_S() const { return is_table() ? !table().has_denominator() : rational().in_power_series_ring(); }

Scalar Scalar::operator-() const { return is_table() ? Scalar(-table()) : Scalar(-rational()); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.is_table() && !b.is_table()) return a.rational() == b.rational();
  return (a - b).is_zero();
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return (Scalar(1) / *this).pow(-k);
  Scalar r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

std::size_t Scalar::hash() const {
  if (is_table()) return table().num().hash();
  return rational().hash();
}

std::shared_ptr<const ScalarContext> ScalarContext::hyperbolic(std::shared_ptr<const RootDatum> datum,
                                                               std::optional<mpq_class> beta) {
  auto ctx = std::shared_ptr<ScalarContext>(new ScalarContext());
  ctx->backend_ = Backend::hyperbolic;
  ctx->datum_ = std::move(datum);
  ctx->beta_value_ = std::move(beta);
  ctx->init_roots();
  return ctx;
}

std::shared_ptr<const ScalarContext> ScalarContext::table(std::shared_ptr<const RootDatum> datum, FormalGroupLaw fgl) {
  auto ctx = std::shared_ptr<ScalarContext>(new ScalarContext());
  ctx->backend_ = Backend::table;
  ctx->ring_ = std::make_shared<const SeriesRing>(*datum, std::move(fgl));
  ctx->datum_ = std::move(datum);
  ctx->init_roots();
  return ctx;
}

void ScalarContext::init_roots() {
  const int n = datum_->rank();
  if (n + 1 > static_cast<int>(kMaxVars)) throw std::invalid_argument("rank too large");
  names_ = {"b"};
  for (int i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
  while (names_.size() < kMaxVars) names_.push_back("v" + std::to_string(names_.size()));
  for (int r = 0; r < datum_->num_roots(); ++r) x_root_.push_back(x_of(datum_->root(r)));
  if (backend_ == Backend::hyperbolic) {
    images_.assign(datum_->order(), std::vector<RationalFunction>(n + 1));
    for (int w = 0; w < datum_->order(); ++w)
      for (int i = 1; i <= n; ++i) images_[w][i] = x_root_[datum_->w_act_root(w, datum_->simple_root(i))].rational();
  }
  frak_x_ = Scalar(1);
  for (int r = 0; r < datum_->num_positive(); ++r) frak_x_ *= x_root_[datum_->negate(r)];
}

Scalar ScalarContext::constant(const mpq_class& c) const {
  if (backend_ == Backend::table) return Scalar(TableScalar::constant(ring_, c));
  return Scalar(c);
}

Scalar ScalarContext::beta() const {
  if (backend_ == Backend::table) return constant(-ring_->fgl().coefficient(1, 1));
  if (beta_value_) return Scalar(*beta_value_);
  return Scalar(RationalFunction(Poly::variable(0)));
}

Scalar ScalarContext::x_of(const Lattice& lambda) const {
  if (backend_ == Backend::table) return Scalar(TableScalar(ring_, ring_->x_of(lambda), {}, ring_->degree()));
  const RationalFunction b = beta().rational();
  auto F = [&](const RationalFunction& u, const RationalFunction& v) { return u + v - b * u * v; };
  RationalFunction acc;
  for (int i = 0; i < datum_->rank(); ++i)
    for (int c = 0; c < lambda[i]; ++c) acc = F(acc, RationalFunction(Poly::variable(i + 1)));
  for (int i = 0; i < datum_->rank(); ++i)
    if (lambda[i] < 0) {
      const RationalFunction x(Poly::variable(i + 1));
      const RationalFunction inv = x / (b * x - RationalFunction(mpq_class(1)));
      for (int c = 0; c < -lambda[i]; ++c) acc = F(acc, inv);
    }
  return Scalar(acc);
}

Scalar ScalarContext::kappa(int r) const {
  return Scalar(1) / x_root_[r] + Scalar(1) / x_root_[datum_->negate(r)];
}

Scalar ScalarContext::mu() const {
  const int a = datum_->simple_root(1);
  return -x_root_[datum_->negate(a)] / x_root_[a];
}

Scalar ScalarContext::act(int w, const Scalar& s) const {
  if (w == 0) return s;
  if (s.is_table()) return Scalar(s.table().act(w));
  const auto& f = s.rational();
  if (f.num().is_constant() && f.den().is_constant()) return s;
  return Scalar(f.substitute(images_[w]));
}

std::optional<Scalar> ScalarContext::divides(const Scalar& s, int r, int k) const {
  if (!s.in_S()) throw std::invalid_argument("divisibility test expects an element of S");
  if (k == 0) return s;
  if (s.is_table()) {
    auto q = s.table().divide_root_power(r, k);
    if (!q) return std::nullopt;
    return Scalar(*q);
  }
  Scalar q = s / x_root_[r].pow(k);
  if (!q.in_S()) return std::nullopt;
  return q;
}

std::string ScalarContext::to_string(const Scalar& s) const {
  if (!s.is_table()) return s.rational().to_string(names_);
  const auto& t = s.table();
  std::string num = t.num().to_string(names_);
  if (!t.has_denominator()) return num;
  std::ostringstream den;
  bool first = true;
  for (std::size_t r = 0; r < t.den().size(); ++r) {
    if (!t.den()[r]) continue;
    den << (first ? "" : "*") << "x(";
    const auto& root = datum_->root(static_cast<int>(r));
    for (int i = 0; i < datum_->rank(); ++i) den << (i ? "," : "") << root[i];
    den << ')';
    if (t.den()[r] > 1) den << '^' << t.den()[r];
    first = false;
  }
  return "(" + num + ")/(" + den.str() + ")";
}

Scalar specialize_beta(const Scalar& s, const mpq_class& value) {
  if (s.is_table()) throw std::invalid_argument("beta specialization needs the hyperbolic backend");
  return Scalar(s.rational().evaluate_variable(0, value));
}

}  // namespace fada
