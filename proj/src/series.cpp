#include "fada/series.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fada {

namespace {

std::vector<Poly> truncated_powers(const Poly& u, int count, int N) {
  std::vector<Poly> p{Poly(1)};
  for (int k = 1; k <= count; ++k) p.push_back(Poly::mul_truncated(p.back(), u, static_cast<unsigned>(N)));
  return p;
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(int N, Table coeffs) : N_(N) {
  if (N < 1) throw std::invalid_argument("formal group law truncation degree must be positive");
  for (auto& [ij, c] : coeffs) {
    const auto [i, j] = ij;
    if (i < 1 || j < 1) throw std::invalid_argument("formal group law coefficients need i, j >= 1");
    if (i + j > N || c == 0) continue;
    coeffs_[ij] = c;
  }
  for (const auto& [ij, c] : coeffs_)
    if (coefficient(ij.second, ij.first) != c)
      throw std::invalid_argument("formal group law table is not symmetric at (" + std::to_string(ij.first) + "," +
                                  std::to_string(ij.second) + ")");
  const Poly x = Poly::variable(1), y = Poly::variable(2), z = Poly::variable(3);
  if (apply(apply(x, y), z) != apply(x, apply(y, z)))
    throw std::invalid_argument("formal group law table is not associative through the truncation degree");
  // iota(t) = -t - sum a_ij t^i iota^j, iterated to a fixed point.
  Poly iota = -x;
  for (int it = 0; it <= N_; ++it) {
    Poly next = -x;
    const auto tp = truncated_powers(x, N_, N_);
    const auto ip = truncated_powers(iota, N_, N_);
    for (const auto& [ij, c] : coeffs_) next -= Poly::mul_truncated(tp[ij.first], ip[ij.second], N_) * c;
    if (next == iota) break;
    iota = std::move(next);
  }
  inverse_series_ = iota;
  if (apply(x, iota).truncated(N_) != Poly()) throw std::logic_error("formal inverse did not converge");
}

FormalGroupLaw FormalGroupLaw::hyperbolic_table(const mpq_class& beta, int N) {
  Table t;
  t[{1, 1}] = -beta;
  return FormalGroupLaw(N, t);
}

FormalGroupLaw FormalGroupLaw::load(const std::string& path, int N) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open formal group law table: " + path);
  Table t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    int i, j;
    std::string c;
    if (!(ls >> i)) continue;
    if (!(ls >> j >> c)) throw std::runtime_error("malformed table line " + std::to_string(lineno));
    mpq_class q;
    try {
      q = mpq_class(c);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("bad coefficient on table line " + std::to_string(lineno) + ": " + c);
    }
    q.canonicalize();
    if (i + j <= N) t[{i, j}] = q;
  }
  return FormalGroupLaw(N, t);
}

mpq_class FormalGroupLaw::coefficient(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

Poly FormalGroupLaw::apply(const Poly& u, const Poly& v) const {
  Poly out = (u + v).truncated(N_);
  if (coeffs_.empty()) return out;
  const auto up = truncated_powers(u, N_, N_);
  const auto vp = truncated_powers(v, N_, N_);
  for (const auto& [ij, c] : coeffs_) out += Poly::mul_truncated(up[ij.first], vp[ij.second], N_) * c;
  return out;
}

Poly FormalGroupLaw::inverse(const Poly& u) const {
  const auto up = truncated_powers(u, N_, N_);
  Poly out;
  for (const auto& [m, c] : inverse_series_.terms()) out += up[m.e[1]] * c;
  return out.truncated(N_);
}


SeriesRing::SeriesRing(const RootDatum& datum, FormalGroupLaw fgl)
    : datum_(datum), fgl_(std::move(fgl)), rank_(datum.rank()) {
  if (rank_ + 1 > static_cast<int>(kMaxVars)) throw std::invalid_argument("rank too large for the series backend");
  for (int r = 0; r < datum_.num_roots(); ++r) root_series_.push_back(x_of(datum_.root(r)));
  negation_unit_.resize(datum_.num_roots());
  for (int r = 0; r < datum_.num_positive(); ++r) {
    auto q = divide_by_root(root_series_[r], datum_.negate(r), degree());
    if (!q) throw std::logic_error("x_gamma is not divisible by x_{-gamma}");
    negation_unit_[r] = *q;
  }
}

Poly SeriesRing::x_of(const Lattice& lambda) const {
  Poly acc;
  for (int i = 0; i < rank_; ++i)
    for (int c = 0; c < lambda[i]; ++c) acc = fgl_.apply(acc, Poly::variable(i + 1));
  for (int i = 0; i < rank_; ++i)
    if (lambda[i] < 0) {
      const Poly inv = fgl_.inverse(Poly::variable(i + 1));
      for (int c = 0; c < -lambda[i]; ++c) acc = fgl_.apply(acc, inv);
    }
  return acc;
}

std::optional<Poly> SeriesRing::divide_by_root(const Poly& a, int r, int prec) const {
  const Poly& g = root_series_[r];
  if (a.constant_term() != 0) return std::nullopt;
  const Poly lin = g.x_homogeneous_part(1);
  std::vector<Poly> gp(degree() + 1);
  for (int j = 0; j <= degree(); ++j) gp[j] = g.x_homogeneous_part(j);
  std::vector<Poly> q;
  for (int d = 1; d <= prec; ++d) {
    Poly rhs = a.x_homogeneous_part(d);
    for (int j = 2; j <= d && j <= degree(); ++j) rhs -= q[d - j] * gp[j];
    auto part = divide_exact(rhs, lin);
    if (!part) return std::nullopt;
    q.push_back(std::move(*part));
  }
  Poly out;
  for (auto& p : q) out += p;
  return out;
}

Poly SeriesRing::unit_inverse(const Poly& u, int prec) const {
  const mpq_class c = u.constant_term();
  if (c == 0) throw std::domain_error("series is not a unit");
  const mpq_class ci = 1 / c;
  std::vector<Poly> up(prec + 1), v(prec + 1);
  for (int j = 0; j <= prec; ++j) up[j] = u.x_homogeneous_part(j);
  v[0] = Poly(ci);
  for (int d = 1; d <= prec; ++d) {
    Poly s;
    for (int j = 1; j <= d; ++j)
      if (!up[j].is_zero() && !v[d - j].is_zero()) s += up[j] * v[d - j];
    v[d] = s * mpq_class(-ci);
  }
  Poly out;
  for (auto& p : v) out += p;
  return out;
}

Poly SeriesRing::substitute(const Poly& a, const std::vector<const Poly*>& images, int prec) const {
  if (prec < 0) return {};
  std::vector<std::vector<Poly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i] = truncated_powers(*images[i], static_cast<int>(a.degree_in(i + 1)), prec);
  Poly out;
  for (const auto& [m, c] : a.terms()) {
    if (static_cast<int>(m.x_degree()) > prec) continue;
    Poly t(c);
    for (std::size_t i = 0; i < images.size() && !t.is_zero(); ++i)
      if (m.e[i + 1]) t = Poly::mul_truncated(t, powers[i][m.e[i + 1]], prec);
    out += t;
  }
  return out;
}

Poly SeriesRing::expand(const RationalFunction& f, int prec) const {
  if (f.num().degree_in(0) || f.den().degree_in(0))
    throw std::invalid_argument("series expansion needs beta specialized to a number");
  return Poly::mul_truncated(f.num().truncated(prec), unit_inverse(f.den(), prec), prec);
}

}  // namespace fada
