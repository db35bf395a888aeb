#include "fada/twisted.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "fada/linalg.hpp"

namespace fada {

TwistedElement TwistedElement::eta(const AffineWeylElement& u, const Scalar& c) {
  TwistedElement z;
  z.add_term(u, c);
  return z;
}

Scalar TwistedElement::coeff(const AffineWeylElement& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void TwistedElement::add_term(const AffineWeylElement& u, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(u, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool TwistedElement::supported_on_translations() const {
  for (const auto& [u, c] : terms_)
    if (!u.is_translation()) return false;
  return true;
}

TwistedElement TwistedElement::operator-() const {
  TwistedElement z = *this;
  for (auto& [u, c] : z.terms_) c = -c;
  return z;
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& o) {
  for (const auto& [u, c] : o.terms_) add_term(u, c);
  return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& o) {
  for (const auto& [u, c] : o.terms_) add_term(u, -c);
  return *this;
}

TwistedElement operator*(const Scalar& c, const TwistedElement& z) {
  TwistedElement out;
  if (c.is_zero()) return out;
  for (const auto& [u, d] : z.terms_) out.add_term(u, c * d);
  return out;
}

bool operator==(const TwistedElement& a, const TwistedElement& b) {
  if (a.terms_.size() == b.terms_.size()) {
    bool same = true;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); same && i != a.terms_.end(); ++i, ++j)
      same = i->first == j->first && i->second == j->second;
    if (same) return true;
  }
  // Table scalars compare through their difference.
  return (a - b).is_zero();
}

Algebra::Algebra(std::shared_ptr<const ScalarContext> ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("algebra needs a scalar context");
}

TwistedElement Algebra::mul(const TwistedElement& a, const TwistedElement& b) const {
  TwistedElement out;
  std::map<int, std::vector<Scalar>> acted;
  for (const auto& [u, c] : a.terms()) {
    auto it = acted.find(u.w);
    if (it == acted.end()) {
      std::vector<Scalar> v;
      v.reserve(b.size());
      for (const auto& [u2, c2] : b.terms()) v.push_back(ctx_->act(u.w, c2));
      it = acted.emplace(u.w, std::move(v)).first;
    }
    std::size_t k = 0;
    for (const auto& [u2, c2] : b.terms()) out.add_term(datum().mul(u, u2), c * it->second[k++]);
  }
  return out;
}

TwistedElement Algebra::pow(const TwistedElement& a, int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a twisted element");
  TwistedElement out = one();
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

TwistedElement Algebra::mul_right(const TwistedElement& z, const Scalar& b) const {
  TwistedElement out;
  for (const auto& [u, c] : z.terms()) out.add_term(u, c * ctx_->act(u.w, b));
  return out;
}

TwistedElement Algebra::demazure(int i) const {
  const RootDatum& d = datum();
  if (i < 0 || i > d.rank()) throw std::out_of_range("demazure index out of range");
  const int r = i == 0 ? d.negate(d.theta()) : d.simple_root(i);
  const Scalar inv = Scalar(1) / ctx_->x_root(r);
  TwistedElement z = TwistedElement::scalar(inv);
  z.add_term(d.simple(i), -inv);
  return z;
}

TwistedElement Algebra::pushpull(int i) const {
  const RootDatum& d = datum();
  if (i < 0 || i > d.rank()) throw std::out_of_range("pushpull index out of range");
  const int r = i == 0 ? d.theta() : d.simple_root(i);
  return TwistedElement::scalar(ctx_->kappa(r)) - demazure(i);
}

TwistedElement Algebra::demazure_root(int r) const {
  const Scalar inv = Scalar(1) / ctx_->x_root(r);
  TwistedElement z = TwistedElement::scalar(inv);
  z.add_term(datum().finite(datum().w_reflection(r)), -inv);
  return z;
}

TwistedElement Algebra::pushpull_root(int r) const {
  return TwistedElement::scalar(ctx_->kappa(r)) - demazure_root(r);
}

TwistedElement Algebra::z_elt(int r) const {
  const Scalar inv = Scalar(1) / ctx_->x_root(datum().negate(r));
  TwistedElement z = TwistedElement::scalar(inv);
  z.add_term(datum().translation(datum().coroot(r)), -inv);
  return z;
}

TwistedElement Algebra::x_word(const std::vector<int>& word) const {
  TwistedElement z = one();
  for (int i : word) z = mul(z, demazure(i));
  return z;
}

TwistedElement Algebra::y_word(const std::vector<int>& word) const {
  TwistedElement z = one();
  for (int i : word) z = mul(z, pushpull(i));
  return z;
}

namespace {

// Prefixes of the lexicographically smallest reduced word are again
// lexicographically smallest, so canonical products extend one letter at a time.
const TwistedElement& canonical(const Algebra& alg, const AffineWeylElement& u, std::mutex& m,
                                std::map<AffineWeylElement, TwistedElement>& cache,
                                const std::function<TwistedElement(int)>& gen) {
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(u); it != cache.end()) return it->second;
  }
  const RootDatum& d = alg.datum();
  TwistedElement value;
  if (u == d.identity()) {
    value = alg.one();
  } else {
    const auto word = d.reduced_word(u);
    const AffineWeylElement prefix = d.mul(u, d.simple(word.back()));
    value = alg.mul(canonical(alg, prefix, m, cache, gen), gen(word.back()));
  }
  std::lock_guard lock(m);
  return cache.emplace(u, std::move(value)).first->second;
}

}  // namespace

const TwistedElement& Algebra::x_canonical(const AffineWeylElement& u) const {
  return canonical(*this, u, cache_mutex_, x_cache_, [this](int i) { return demazure(i); });
}

const TwistedElement& Algebra::y_canonical(const AffineWeylElement& u) const {
  return canonical(*this, u, cache_mutex_, y_cache_, [this](int i) { return pushpull(i); });
}

PetersonElement Algebra::pr(const TwistedElement& z) const {
  PetersonElement out;
  for (const auto& [u, c] : z.terms()) out.add_term(datum().translation(u.lambda), c);
  return out;
}

TwistedElement Algebra::iota(const PetersonElement& xi) const {
  if (!xi.supported_on_translations()) throw std::invalid_argument("iota expects an element supported on translations");
  return xi;
}

PetersonElement Algebra::diamond(const TwistedElement& z, const PetersonElement& xi) const {
  if (!xi.supported_on_translations())
    throw std::invalid_argument("diamond expects its right argument supported on translations");
  const RootDatum& d = datum();
  PetersonElement out;
  for (const auto& [u, c] : z.terms())
    for (const auto& [v, c2] : xi.terms())
      out.add_term(d.translation(lattice_add(u.lambda, d.w_apply_coweight(u.w, v.lambda))), c * ctx_->act(u.w, c2));
  return out;
}

PetersonElement Algebra::weyl_act(int w, const PetersonElement& xi) const {
  return diamond(TwistedElement::eta(datum().finite(w)), xi);
}

PetersonElement Algebra::delta(int r, const PetersonElement& xi) const { return diamond(demazure_root(r), xi); }

TwistedElement Algebra::sigma_elt() const {
  TwistedElement z;
  for (int w = 0; w < datum().order(); ++w) z.add_term(datum().finite(w), Scalar(1));
  return z;
}

TwistedElement Algebra::y_pi() const { return mul_right(sigma_elt(), Scalar(1) / ctx_->frak_x()); }

bool Algebra::is_central(const TwistedElement& z) const {
  if (!z.supported_on_translations()) return false;
  for (int i = 1; i <= datum().rank(); ++i) {
    const TwistedElement s = eta(datum().simple(i));
    if (!(mul(s, z) == mul(z, s))) return false;
  }
  return true;
}

const BorelUnit& Algebra::borel_unit() const {
  {
    std::lock_guard lock(cache_mutex_);
    if (borel_) return *borel_;
  }
  if (ctx_->backend() != Backend::hyperbolic) throw std::domain_error("borel_unit needs the hyperbolic backend");
  const RootDatum& d = datum();
  const int n = d.rank(), order = d.order();

  // Candidate monomials of degree < |W| in graded-lex order, lowest degree first.
  std::vector<Poly> cands;
  std::vector<int> exps(n, 0);
  for (int deg = 0; deg < order; ++deg) {
    std::vector<Poly> layer;
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (var == n - 1) {
        exps[var] = left;
        Poly m(1);
        for (int v = 0; v < n; ++v)
          if (exps[v]) m = m * Poly::variable(static_cast<std::size_t>(v + 1), static_cast<unsigned>(exps[v]));
        layer.push_back(m);
        return;
      }
      for (int e = left; e >= 0; --e) {
        exps[var] = e;
        rec(var + 1, left - e);
      }
    };
    rec(0, deg);
    for (auto& m : layer) cands.push_back(std::move(m));
  }

  std::vector<std::vector<Scalar>> images(cands.size());
  for (std::size_t c = 0; c < cands.size(); ++c)
    for (int w = 0; w < order; ++w) images[c].push_back(ctx_->act(w, Scalar(RationalFunction(cands[c]))));

  // Numeric values at a generic point prune rank-deficient choices.
  std::vector<mpq_class> point(kMaxVars, 0);
  std::vector<std::vector<mpq_class>> values;
  for (int attempt = 0;; ++attempt) {
    point[0] = mpq_class(3 + attempt, 7);
    for (int v = 1; v <= n; ++v) point[v] = mpq_class(2 * v + 1 + attempt, 11 + 3 * v);
    try {
      values.assign(cands.size(), {});
      for (std::size_t c = 0; c < cands.size(); ++c)
        for (int w = 0; w < order; ++w) values[c].push_back(evaluate(images[c][w], point));
      break;
    } catch (const std::domain_error&) {
      if (attempt > 20) throw std::logic_error("no regular evaluation point for the Borel unit search");
    }
  }

  const Scalar fx = ctx_->frak_x();
  std::vector<std::size_t> chosen;
  std::optional<BorelUnit> found;
  std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == order) {
      ScalarMatrix M(order, std::vector<Scalar>(order));
      for (int w = 0; w < order; ++w)
        for (int i = 0; i < order; ++i) M[w][i] = images[chosen[i]][w];
      std::vector<Scalar> rhs(order, Scalar(0));
      rhs[0] = fx;
      auto a = solve(M, rhs);
      if (!a) return false;
      for (const auto& s : *a)
        if (!s.in_S()) return false;
      BorelUnit u;
      u.a = *a;
      for (std::size_t c : chosen) u.b.push_back(Scalar(RationalFunction(cands[c])));
      found = std::move(u);
      return true;
    }
    for (std::size_t c = start; c < cands.size(); ++c) {
      QMatrix Q;
      for (std::size_t k : chosen) Q.push_back(values[k]);
      Q.push_back(values[c]);
      if (rank(Q) != static_cast<int>(Q.size())) continue;
      chosen.push_back(c);
      if (search(c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0)) throw std::runtime_error("no Borel unit found among candidate monomials");
  std::lock_guard lock(cache_mutex_);
  if (!borel_) borel_ = std::move(found);
  return *borel_;
}

std::vector<std::pair<Scalar, TwistedElement>> Algebra::central_expansion(const PetersonElement& xi) const {
  if (!xi.supported_on_translations()) throw std::invalid_argument("central_expansion expects a translation-supported element");
  const BorelUnit& u = borel_unit();
  const TwistedElement Y = y_pi();
  std::vector<std::pair<Scalar, TwistedElement>> out;
  for (std::size_t i = 0; i < u.a.size(); ++i) out.emplace_back(u.a[i], psi(mul(mul_right(Y, u.b[i]), xi)));
  return out;
}

std::vector<CentralTerm> Algebra::central_decomposition(const TwistedElement& z) const {
  const RootDatum& d = datum();
  const int order = d.order();
  ScalarMatrix M(order, std::vector<Scalar>(order));
  for (int v = 0; v < order; ++v) {
    const TwistedElement& xv = x_canonical(d.finite(v));
    for (int w = 0; w < order; ++w) M[v][w] = xv.coeff(d.finite(w));
  }
  const auto inv = inverse(M);
  if (!inv) throw std::logic_error("X basis of the finite Weyl group is singular");
  std::map<Lattice, std::vector<Scalar>> rows;
  for (const auto& [u, c] : z.terms()) {
    auto& r = rows[u.lambda];
    if (r.empty()) r.assign(order, Scalar(0));
    r[u.w] = c;
  }
  std::vector<PetersonElement> xis(order);
  for (const auto& [lambda, r] : rows)
    for (int v = 0; v < order; ++v) {
      Scalar c(0);
      for (int w = 0; w < order; ++w)
        if (!r[w].is_zero() && !(*inv)[w][v].is_zero()) c += r[w] * (*inv)[w][v];
      xis[v].add_term(d.translation(lambda), c);
    }
  std::vector<CentralTerm> out;
  for (int v = 0; v < order; ++v) {
    if (xis[v].is_zero()) continue;
    for (auto& [a, central] : central_expansion(xis[v]))
      if (!central.is_zero() && !a.is_zero()) out.push_back({a * x_canonical(d.finite(v)), std::move(central)});
  }
  return out;
}

XExpansion Algebra::expand_in_x_basis(const TwistedElement& z, int L) const {
  const RootDatum& d = datum();
  for (const auto& [u, c] : z.terms())
    if (d.length(u) > L) throw std::out_of_range("support element " + d.to_string(u) + " lies outside the ball");
  XExpansion out;
  TwistedElement rest = z;
  std::size_t guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 100000) throw std::logic_error("x-basis expansion did not terminate");
    const AffineWeylElement* top = nullptr;
    int best = -1;
    for (const auto& [u, c] : rest.terms()) {
      const int len = d.length(u);
      if (len > best) best = len, top = &u;
    }
    const AffineWeylElement u = *top;
    const TwistedElement& xu = x_canonical(u);
    const Scalar c = rest.coeff(u) / xu.coeff(u);
    rest -= c * xu;
    out.coeffs[u] += c;
    if (out.coeffs[u].is_zero()) out.coeffs.erase(u);
  }
  for (const auto& [u, c] : out.coeffs)
    if (!c.in_S()) out.all_in_S = false;
  return out;
}

std::string Algebra::to_string(const TwistedElement& z) const {
  if (z.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : z.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << ctx_->to_string(c) << ")*eta(" << datum().to_string(u) << ')';
  }
  return os.str();
}

}  // namespace fada
