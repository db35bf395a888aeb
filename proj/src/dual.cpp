#include "fada/dual.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fada/linalg.hpp"

namespace fada {

DualFunctional DualFunctional::basis(const AffineWeylElement& u, int L, const Scalar& c) {
  DualFunctional f(L);
  f.add_term(u, c);
  return f;
}

Scalar DualFunctional::value(const AffineWeylElement& u) const {
  auto it = values_.find(u);
  return it == values_.end() ? Scalar(0) : it->second;
}

void DualFunctional::add_term(const AffineWeylElement& u, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = values_.emplace(u, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) values_.erase(it);
}

DualFunctional& DualFunctional::operator+=(const DualFunctional& o) {
  ball_ = std::max(ball_, o.ball_);
  for (const auto& [u, c] : o.values_) add_term(u, c);
  return *this;
}

DualFunctional& DualFunctional::operator-=(const DualFunctional& o) {
  ball_ = std::max(ball_, o.ball_);
  for (const auto& [u, c] : o.values_) add_term(u, -c);
  return *this;
}

DualFunctional operator*(const Scalar& c, const DualFunctional& f) {
  DualFunctional out(f.ball_);
  for (const auto& [u, d] : f.values_) out.add_term(u, c * d);
  return out;
}

bool operator==(const DualFunctional& a, const DualFunctional& b) { return (a - b).is_zero(); }

void Dual::check_ball(const AffineWeylElement& u, int L) const {
  if (alg_.datum().length(u) > L) {
    throw std::out_of_range("functional support " + alg_.datum().to_string(u) +
                            " leaves the ball of radius " + std::to_string(L));
  }
}

Scalar Dual::evaluate(const DualFunctional& f, const TwistedElement& z) const {
  Scalar out(0);
  for (const auto& [u, c] : z.terms()) {
    auto it = f.values().find(u);
    if (it != f.values().end()) out += c * it->second;
  }
  return out;
}

// a eta_w bullet b f_v = b (v w^{-1})(a) f_{v w^{-1}}.
DualFunctional Dual::bullet(const TwistedElement& z, const DualFunctional& f) const {
  const auto& d = alg_.datum();
  DualFunctional out(f.ball());
  for (const auto& [w, a] : z.terms()) {
    const AffineWeylElement winv = d.inverse(w);
    for (const auto& [v, b] : f.values()) {
      const AffineWeylElement u = d.mul(v, winv);
      check_ball(u, f.ball());
      out.add_term(u, b * alg_.ctx().act(u, a));
    }
  }
  return out;
}

// a eta_w odot b f_v = a w(b) f_{w v}.
DualFunctional Dual::odot(const TwistedElement& z, const DualFunctional& f) const {
  const auto& d = alg_.datum();
  DualFunctional out(f.ball());
  for (const auto& [w, a] : z.terms()) {
    for (const auto& [v, b] : f.values()) {
      const AffineWeylElement u = d.mul(w, v);
      check_ball(u, f.ball());
      out.add_term(u, a * alg_.ctx().act(w, b));
    }
  }
  return out;
}

DualFunctional Dual::iota_star(const DualFunctional& f) const {
  DualFunctional out(f.ball());
  for (const auto& [u, c] : f.values())
    if (u.is_translation()) out.add_term(u, c);
  return out;
}

HH0Reduction Dual::hh0_reduce(const DualFunctional& f) const {
  const auto& d = alg_.datum();
  const auto& ctx = alg_.ctx();
  HH0Reduction out;
  out.canonical = iota_star(f);
  for (const auto& [u, c] : f.values()) {
    if (u.is_translation()) continue;
    HH0Witness w;
    w.elem = u;
    w.coeff = c;
    for (int i = 1; i <= d.rank(); ++i) {
      const Scalar& x = ctx.x_simple(i);
      Scalar moved = ctx.act(u.w, x);
      if (moved == x) continue;
      w.simple = i;
      w.x_mu = x;
      w.denom = x - moved;
      break;
    }
    if (w.simple == 0) throw std::logic_error("no simple root moved by a nontrivial Weyl element");
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

DualFunctional Dual::witness_value(const HH0Witness& w, int L) const {
  const DualFunctional g = DualFunctional::basis(w.elem, L, w.coeff);
  const TwistedElement x = TwistedElement::scalar(w.x_mu);
  return (Scalar(1) / w.denom) * (odot(x, g) - bullet(x, g));
}

std::map<AffineWeylElement, DualFunctional> Dual::dual_basis_y(int L) const {
  const auto& d = alg_.datum();
  const std::vector<AffineWeylElement> ball = d.enumerate_ball(L);
  std::map<AffineWeylElement, int> len;
  for (const auto& u : ball) len[u] = d.length(u);

  // Rows of the triangular matrix M[v][u] = coefficient of eta_u in Y_{I_v}.
  std::map<AffineWeylElement, const TwistedElement*> rows;
  for (const auto& v : ball) {
    const TwistedElement& y = alg_.y_canonical(v);
    for (const auto& [u, c] : y.terms()) {
      auto it = len.find(u);
      if (u != v && (it == len.end() || it->second >= len[v]))
        throw std::logic_error("Y basis matrix is not triangular at " + d.to_string(v));
    }
    rows[v] = &y;
  }

  std::map<AffineWeylElement, DualFunctional> out;
  for (const auto& w : ball) {
    DualFunctional f(L);
    for (const auto& v : ball) {
      if (len[v] < len[w]) continue;
      const TwistedElement& row = *rows[v];
      Scalar acc(v == w ? 1 : 0);
      for (const auto& [u, c] : row.terms()) {
        if (u == v) continue;
        Scalar fu = f.value(u);
        if (!fu.is_zero()) acc -= c * fu;
      }
      if (!acc.is_zero()) f.add_term(v, acc / row.coeff(v));
    }
    out.emplace(w, std::move(f));
  }
  return out;
}

Scalar Dual::ell_product(const AffineWeylElement& w) const {
  const auto& d = alg_.datum();
  Scalar out(1);
  for (int r = 0; r < d.num_positive(); ++r) out *= alg_.ctx().x_root(r).pow(d.ell_alpha(w, r));
  return out;
}

Scalar Dual::inversion_product(const AffineWeylElement& w) const {
  const auto& d = alg_.datum();
  Scalar out(1);
  AffineWeylElement prefix = d.identity();
  for (int i : d.reduced_word(w)) {
    out *= alg_.ctx().x_root(d.apply(prefix, d.affine_simple_root(i)).root);
    prefix = d.mul(prefix, d.simple(i));
  }
  return out;
}

Scalar Dual::delta_lambda(const Lattice& lambda) const {
  return ell_product(alg_.datum().w_min_coset(lambda));
}

int Dual::stratum_of(const AffineWeylElement& u) const {
  const auto& d = alg_.datum();
  return d.length(d.w_min_coset(u.lambda));
}

Report Dual::gkm_check(const DualFunctional& f, std::optional<int> stratum) const {
  const auto& d = alg_.datum();
  const auto& ctx = alg_.ctx();
  Report rep;
  rep.check = "gkm";
  std::set<Lattice> cosets;
  int lowest = -1;
  for (const auto& [u, c] : f.values()) {
    const int s = stratum_of(u);
    if (lowest < 0 || s < lowest) lowest = s;
  }
  const int target = stratum ? *stratum : lowest;
  rep.subject = target < 0 ? "empty support" : "stratum " + std::to_string(target);
  for (const auto& [u, c] : f.values())
    if (stratum_of(u) == target) cosets.insert(u.lambda);

  for (const Lattice& lambda : cosets) {
    const AffineWeylElement wl = d.w_min_coset(lambda);
    const std::string tag = d.to_string(d.translation(lambda));
    if (d.length(wl) + d.w_length(d.w_longest()) > f.ball()) {
      rep.failures.push_back("coset of " + tag + " extends beyond the ball");
      continue;
    }
    for (int w = 0; w < d.order(); ++w) {
      const AffineWeylElement u{lambda, w};
      const Scalar value = f.value(u);
      if (!value.in_S()) {
        rep.failures.push_back("f(" + d.to_string(u) + ") is not in S");
        continue;
      }
      for (int r = 0; r < d.num_roots(); ++r) {
        const int pos = d.is_positive(r) ? r : d.negate(r);
        const int k = d.ell_alpha(wl, pos);
        if (!ctx.divides(value, r, k)) {
          std::ostringstream msg;
          msg << "x_" << r << "^" << k << " does not divide f(" << d.to_string(u) << ")";
          rep.failures.push_back(msg.str());
        }
        const AffineWeylElement su{lambda, d.w_mul(d.w_reflection(pos), w)};
        const Scalar diff = value - f.value(su);
        if (!diff.in_S()) continue;
        if (!ctx.divides(diff, r, k + 1)) {
          std::ostringstream msg;
          msg << "x_" << r << "^" << k + 1 << " does not divide f(" << d.to_string(u) << ") - f("
              << d.to_string(su) << ")";
          rep.failures.push_back(msg.str());
        }
      }
    }
  }
  return rep;
}

std::vector<AffineWeylElement> Dual::filtration_stratum(int i, int L) const {
  const auto& d = alg_.datum();
  if (i > L) return {};
  if (i + d.w_length(d.w_longest()) > L)
    throw std::out_of_range("ball of radius " + std::to_string(L) + " does not contain stratum " +
                            std::to_string(i));
  std::vector<AffineWeylElement> out;
  for (const auto& u : d.enumerate_ball(L))
    if (stratum_of(u) == i) out.push_back(u);
  return out;
}

namespace {

// Values of f on the listed points, as a row.
std::vector<Scalar> restrict_to(const DualFunctional& f, const std::vector<AffineWeylElement>& pts) {
  std::vector<Scalar> row;
  row.reserve(pts.size());
  for (const auto& u : pts) row.push_back(f.value(u));
  return row;
}

}  // namespace

GradedRank Dual::graded_rank_check(int i, int L) const {
  const auto& d = alg_.datum();
  const auto& ctx = alg_.ctx();
  GradedRank out;
  out.report.check = "graded-rank";
  out.report.subject = "stratum " + std::to_string(i);
  auto& fails = out.report.failures;

  const std::vector<AffineWeylElement> stratum = filtration_stratum(i, L);
  out.stratum_size = static_cast<int>(stratum.size());
  std::vector<AffineWeylElement> translations;
  for (const auto& u : stratum)
    if (u.is_translation()) translations.push_back(u);
  out.cosets = static_cast<int>(translations.size());
  if (stratum.empty()) return out;

  const auto basis = dual_basis_y(L);
  ScalarMatrix rows;
  for (const auto& w : stratum) {
    const DualFunctional& f = basis.at(w);
    rows.push_back(restrict_to(f, stratum));
    DualFunctional res(L);
    for (const auto& u : stratum) res.add_term(u, f.value(u));
    Report g = gkm_check(res, i);
    for (const auto& msg : g.failures) fails.push_back("Y*" + d.to_string(w) + ": " + msg);
  }
  out.z_rank = rank(rows);
  if (out.z_rank != out.stratum_size)
    fails.push_back("restricted Y* rank " + std::to_string(out.z_rank) + " != " +
                    std::to_string(out.stratum_size));

  // The GKM module on the stratum is generated by Delta_lambda times the
  // finite dual Y basis transported to each coset; each generator must be an
  // S-combination of the restricted Y*.
  const int nw = d.order();
  std::vector<AffineWeylElement> finite_pts;
  for (int w = 0; w < nw; ++w) finite_pts.push_back(d.finite(w));
  const auto fin = dual_basis_y(d.w_length(d.w_longest()));
  ScalarMatrix At(stratum.size(), std::vector<Scalar>(stratum.size()));
  for (std::size_t a = 0; a < stratum.size(); ++a)
    for (std::size_t b = 0; b < stratum.size(); ++b) At[b][a] = rows[a][b];
  for (const auto& t : translations) {
    const Scalar delta = delta_lambda(t.lambda);
    for (int v = 0; v < nw; ++v) {
      const DualFunctional& yv = fin.at(d.finite(v));
      std::vector<Scalar> g(stratum.size(), Scalar(0));
      for (std::size_t b = 0; b < stratum.size(); ++b)
        if (stratum[b].lambda == t.lambda) g[b] = delta * yv.value(d.finite(stratum[b].w));
      auto c = solve(At, g);
      if (!c) {
        fails.push_back("GKM generator at " + d.to_string(t) + " outside the span");
        continue;
      }
      for (const auto& s : *c)
        if (!s.in_S()) {
          fails.push_back("GKM generator at " + d.to_string(t) + " needs a coefficient outside S");
          break;
        }
    }
  }

  // Hochschild quotient: iota_star sees one value per coset, and its kernel on
  // the stratum is spanned by the relations x_j bullet f - x_j odot f.
  ScalarMatrix iota_rows, rel_rows;
  for (const auto& w : stratum) {
    DualFunctional res(L);
    for (const auto& u : stratum) res.add_term(u, basis.at(w).value(u));
    iota_rows.push_back(restrict_to(iota_star(res), translations));
    for (int j = 1; j <= d.rank(); ++j) {
      const TwistedElement x = TwistedElement::scalar(ctx.x_simple(j));
      const DualFunctional rel = bullet(x, res) - odot(x, res);
      if (!iota_star(rel).is_zero())
        fails.push_back("iota_star does not kill a relation at " + d.to_string(w));
      rel_rows.push_back(restrict_to(rel, stratum));
    }
  }
  out.iota_rank = rank(iota_rows);
  out.relation_rank = rank(rel_rows);
  if (out.iota_rank != out.cosets)
    fails.push_back("iota_star image rank " + std::to_string(out.iota_rank) + " != cosets " +
                    std::to_string(out.cosets));
  if (out.iota_rank + out.relation_rank != out.stratum_size)
    fails.push_back("relations do not span the kernel of iota_star");
  return out;
}

PairMap Dual::m_star(const DualFunctional& f, int L) const {
  const auto& d = alg_.datum();
  PairMap out;
  const auto ball = d.enumerate_ball(L);
  std::set<AffineWeylElement> in_ball(ball.begin(), ball.end());
  for (const auto& [w, c] : f.values()) {
    for (const auto& u : ball) {
      const AffineWeylElement v = d.mul(d.inverse(u), w);
      if (!in_ball.count(v)) continue;
      auto [it, inserted] = out.emplace(std::make_pair(u, v), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

Scalar Dual::pair_hat(const PairMap& m, const Scalar& a, const AffineWeylElement& u, const Scalar& b,
                      const AffineWeylElement& v) const {
  auto it = m.find({u, v});
  if (it == m.end()) return Scalar(0);
  return it->second * a * alg_.ctx().act(u, b);
}

}  // namespace fada
