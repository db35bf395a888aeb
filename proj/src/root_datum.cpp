#include "fada/weyl.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fada {

Lattice lattice_add(const Lattice& a, const Lattice& b) {
  Lattice c{};
  for (std::size_t i = 0; i < kMaxRank; ++i) c[i] = a[i] + b[i];
  return c;
}

Lattice lattice_sub(const Lattice& a, const Lattice& b) {
  Lattice c{};
  for (std::size_t i = 0; i < kMaxRank; ++i) c[i] = a[i] - b[i];
  return c;
}

Lattice lattice_scale(const Lattice& a, int k) {
  Lattice c{};
  for (std::size_t i = 0; i < kMaxRank; ++i) c[i] = a[i] * k;
  return c;
}

std::size_t AffineWeylHash::operator()(const AffineWeylElement& u) const noexcept {
  std::size_t h = static_cast<std::size_t>(u.w) * 0x9e3779b97f4a7c15ull;
  for (int x : u.lambda) h = (h ^ static_cast<std::size_t>(x + 0x1000)) * 1099511628211ull;
  return h;
}

RootDatum::RootDatum(std::vector<std::vector<int>> cartan, std::string label)
    : n_(static_cast<int>(cartan.size())), label_(std::move(label)), cartan_(std::move(cartan)) {
  if (n_ < 1 || n_ > static_cast<int>(kMaxRank)) throw std::invalid_argument("unsupported rank");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(cartan_[i].size()) != n_) throw std::invalid_argument("Cartan matrix is not square");
    if (cartan_[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw std::invalid_argument("Cartan off-diagonal entries must be non-positive");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
    }
  }
  build_roots();
  build_weyl_group();
}

RootDatum RootDatum::type_A(int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return RootDatum(std::move(c), "A" + std::to_string(n));
}

RootDatum RootDatum::from_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Cartan file: " + path);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::runtime_error("malformed Cartan file line: " + line);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return RootDatum(std::move(rows), "cartan:" + path);
}

RootDatum RootDatum::parse(const std::string& text) {
  if (text.rfind("cartan:", 0) == 0) return from_cartan_file(text.substr(7));
  if (text.size() >= 2 && text[0] == 'A') {
    const int n = std::stoi(text.substr(1));
    return type_A(n);
  }
  throw std::invalid_argument("unknown root type: " + text);
}

int RootDatum::pairing(const Lattice& coweight, const Lattice& weight) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (!coweight[i]) continue;
    for (int j = 0; j < n_; ++j) s += coweight[i] * cartan_[i][j] * weight[j];
  }
  return s;
}

int RootDatum::height(int r) const { return std::accumulate(roots_[r].begin(), roots_[r].end(), 0); }

int RootDatum::root_index(const Lattice& v) const {
  auto it = std::find(roots_.begin(), roots_.end(), v);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

void RootDatum::build_roots() {
  // Closure of (root, coroot) pairs under simple reflections.
  std::map<Lattice, Lattice> found;
  std::deque<Lattice> queue;
  for (int i = 0; i < n_; ++i) {
    Lattice a{};
    a[i] = 1;
    found[a] = a;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    const Lattice a = queue.front();
    queue.pop_front();
    const Lattice av = found[a];
    for (int i = 0; i < n_; ++i) {
      Lattice ai{}, aiv{};
      ai[i] = 1;
      aiv[i] = 1;
      const Lattice b = lattice_sub(a, lattice_scale(ai, pairing(aiv, a)));
      const Lattice bv = lattice_sub(av, lattice_scale(aiv, pairing(av, ai)));
      if (found.emplace(b, bv).second) {
        queue.push_back(b);
        if (found.size() > 4000) throw std::invalid_argument("Cartan matrix is not of finite type");
      }
    }
  }
  std::vector<Lattice> pos;
  for (const auto& [a, av] : found) {
    const bool positive = std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
    const bool negative = std::all_of(a.begin(), a.end(), [](int x) { return x <= 0; });
    if (!positive && !negative) throw std::invalid_argument("Cartan matrix is not of finite type");
    if (positive) pos.push_back(a);
  }
  std::stable_sort(pos.begin(), pos.end(), [](const Lattice& a, const Lattice& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_ = pos;
  for (const auto& a : pos) roots_.push_back(lattice_scale(a, -1));
  for (const auto& a : roots_) coroots_.push_back(found.at(a));
  simple_index_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    Lattice a{};
    a[i] = 1;
    simple_index_[i] = root_index(a);
  }
  int best = 0;
  for (int r = 0; r < num_positive(); ++r)
    if (height(r) > height(best)) best = r;
  for (int r = 0; r < num_positive(); ++r)
    if (r != best && height(r) == height(best)) throw std::invalid_argument("highest root is not unique");
  theta_ = best;
  for (int r = 0; r < num_roots(); ++r)
    if (pairing(coroots_[r], roots_[r]) != 2) throw std::logic_error("root/coroot pairing is not 2");
}

std::vector<int> RootDatum::apply_matrix(int w, const Lattice& v, bool coweight) const {
  const auto& m = coweight ? w_cow_[w] : w_root_[w];
  std::vector<int> out(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Lattice RootDatum::w_apply_root(int w, const Lattice& v) const {
  auto o = apply_matrix(w, v, false);
  Lattice r{};
  std::copy(o.begin(), o.end(), r.begin());
  return r;
}

Lattice RootDatum::w_apply_coweight(int w, const Lattice& v) const {
  auto o = apply_matrix(w, v, true);
  Lattice r{};
  std::copy(o.begin(), o.end(), r.begin());
  return r;
}

void RootDatum::build_weyl_group() {
  using Matrix = std::vector<std::vector<int>>;
  auto identity = [&] {
    Matrix m(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i) m[i][i] = 1;
    return m;
  };
  auto product = [&](const Matrix& a, const Matrix& b) {
    Matrix c(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        if (a[i][k])
          for (int j = 0; j < n_; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  std::vector<Matrix> sr(n_), sc(n_);
  for (int i = 0; i < n_; ++i) {
    sr[i] = identity();
    sc[i] = identity();
    // s_i(alpha_j) = alpha_j - a_ij alpha_i; s_i(alpha_j^vee) = alpha_j^vee - a_ji alpha_i^vee.
    for (int j = 0; j < n_; ++j) {
      sr[i][i][j] -= cartan_[i][j];
      sc[i][i][j] -= cartan_[j][i];
    }
  }
  std::map<Matrix, int> index;
  w_root_.push_back(identity());
  w_cow_.push_back(identity());
  index[w_root_[0]] = 0;
  for (std::size_t k = 0; k < w_root_.size(); ++k) {
    for (int i = 0; i < n_; ++i) {
      Matrix m = product(sr[i], w_root_[k]);
      if (index.count(m)) continue;
      index[m] = static_cast<int>(w_root_.size());
      w_root_.push_back(m);
      w_cow_.push_back(product(sc[i], w_cow_[k]));
      if (w_root_.size() > 100000) throw std::invalid_argument("Weyl group too large");
    }
  }
  const int N = order();
  w_perm_.assign(N, std::vector<int>(num_roots()));
  w_len_.assign(N, 0);
  for (int w = 0; w < N; ++w)
    for (int r = 0; r < num_roots(); ++r) {
      const int img = root_index(w_apply_root(w, roots_[r]));
      if (img < 0) throw std::logic_error("Weyl group does not preserve roots");
      w_perm_[w][r] = img;
      if (is_positive(r) && !is_positive(img)) ++w_len_[w];
    }
  // Elements are determined by their permutation of the roots.
  std::map<std::vector<int>, int> by_perm;
  for (int w = 0; w < N; ++w) by_perm[w_perm_[w]] = w;
  w_mul_.assign(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> p(num_roots());
      for (int r = 0; r < num_roots(); ++r) p[r] = w_perm_[a][w_perm_[b][r]];
      w_mul_[a][b] = by_perm.at(p);
    }
  w_inv_.assign(N, 0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (w_mul_[a][b] == 0) w_inv_[a] = b;
  w_simple_.resize(n_);
  for (int i = 0; i < n_; ++i) w_simple_[i] = index.at(sr[i]);
  w_word_.assign(N, {});
  for (int w = 0; w < N; ++w) {
    int cur = w;
    while (cur != 0) {
      for (int i = 0; i < n_; ++i) {
        const int next = w_mul_[w_simple_[i]][cur];
        if (w_len_[next] < w_len_[cur]) {
          w_word_[w].push_back(i + 1);
          cur = next;
          break;
        }
      }
    }
  }
  w_refl_.assign(num_roots(), 0);
  for (int r = 0; r < num_roots(); ++r) {
    // s_alpha(beta) = beta - <alpha^vee, beta> alpha
    std::vector<int> p(num_roots());
    for (int b = 0; b < num_roots(); ++b)
      p[b] = root_index(lattice_sub(roots_[b], lattice_scale(roots_[r], pairing(coroots_[r], roots_[b]))));
    w_refl_[r] = by_perm.at(p);
  }
  w_longest_ = static_cast<int>(std::max_element(w_len_.begin(), w_len_.end()) - w_len_.begin());
}

AffineWeylElement RootDatum::simple(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("simple reflection index out of range");
  if (i > 0) return finite(w_simple(i));
  return {coroots_[theta_], w_refl_[theta_]};
}

AffineWeylElement RootDatum::mul(const AffineWeylElement& u, const AffineWeylElement& v) const {
  if (v.w == 0 && u.w == 0) return {lattice_add(u.lambda, v.lambda), 0};
  return {lattice_add(u.lambda, w_apply_coweight(u.w, v.lambda)), w_mul(u.w, v.w)};
}

AffineWeylElement RootDatum::inverse(const AffineWeylElement& u) const {
  const int wi = w_inverse(u.w);
  return {lattice_scale(w_apply_coweight(wi, u.lambda), -1), wi};
}

AffineWeylElement RootDatum::from_word(std::span<const int> word) const {
  AffineWeylElement u;
  for (int i : word) u = mul(u, simple(i));
  return u;
}

AffineRoot RootDatum::apply(const AffineWeylElement& u, const AffineRoot& b) const {
  const int img = w_act_root(u.w, b.root);
  return {img, b.k - pairing(u.lambda, roots_[img])};
}

AffineRoot RootDatum::affine_simple_root(int i) const {
  if (i == 0) return {negate(theta_), 1};
  return {simple_root(i), 0};
}

int RootDatum::ell_alpha(const AffineWeylElement& u, int alpha) const {
  if (!is_positive(alpha)) throw std::invalid_argument("ell_alpha expects a positive root");
  const int p = pairing(u.lambda, roots_[alpha]);
  const int neg = is_positive(w_act_root(w_inverse(u.w), alpha)) ? 0 : 1;
  return p <= 0 ? -p + neg : p - neg;
}

int RootDatum::length(const AffineWeylElement& u) const {
  int l = 0;
  for (int r = 0; r < num_positive(); ++r) l += ell_alpha(u, r);
  return l;
}

bool RootDatum::is_left_descent(const AffineWeylElement& u, int i) const {
  // s_i u < u iff u^{-1}(alpha_i) < 0.
  return !is_positive(apply(inverse(u), affine_simple_root(i)));
}

std::vector<int> RootDatum::reduced_word(const AffineWeylElement& u) const {
  std::vector<int> word;
  AffineWeylElement cur = u;
  while (!(cur == identity())) {
    bool found = false;
    for (int i = 0; i <= n_; ++i) {
      if (is_left_descent(cur, i)) {
        word.push_back(i);
        cur = mul(simple(i), cur);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no left descent for a non-identity element");
  }
  return word;
}

AffineWeylElement RootDatum::w_min_coset(const Lattice& lambda) const {
  AffineWeylElement best{lambda, 0};
  int best_len = length(best);
  for (int w = 1; w < order(); ++w) {
    AffineWeylElement c{lambda, w};
    const int l = length(c);
    if (l < best_len) {
      best = c;
      best_len = l;
    }
  }
  return best;
}

bool RootDatum::bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& v) const {
  AffineWeylElement a = u, b = v;
  while (true) {
    if (a == identity()) return true;
    if (b == identity()) return false;
    if (length(a) > length(b)) return false;
    int s = 0;
    while (!is_left_descent(b, s)) ++s;
    b = mul(simple(s), b);
    if (is_left_descent(a, s)) a = mul(simple(s), a);
  }
}

std::vector<AffineWeylElement> RootDatum::enumerate_ball(int L) const {
  std::vector<AffineWeylElement> out{identity()};
  std::set<AffineWeylElement> seen{identity()};
  std::size_t begin = 0;
  for (int l = 1; l <= L; ++l) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 0; i <= n_; ++i) {
        AffineWeylElement c = mul(out[k], simple(i));
        if (length(c) == l && seen.insert(c).second) out.push_back(c);
      }
    begin = end;
  }
  std::vector<std::pair<std::vector<int>, AffineWeylElement>> keyed;
  for (const auto& u : out) keyed.push_back({reduced_word(u), u});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  out.clear();
  for (auto& [w, u] : keyed) out.push_back(u);
  return out;
}

AffineWeylElement RootDatum::sigma(int i) const {
  if (!is_affine_A1()) throw std::invalid_argument("sigma indexing is defined for affine A1 only");
  Lattice l{};
  if (i >= 0) {
    const int h = i / 2;
    l[0] = -h;
    AffineWeylElement t = translation(l);
    return i % 2 == 0 ? t : mul(simple(0), t);
  }
  const int j = -i;
  l[0] = j / 2;
  AffineWeylElement t = translation(l);
  return j % 2 == 0 ? t : mul(simple(1), t);
}

std::string RootDatum::to_string(const AffineWeylElement& u) const {
  std::ostringstream os;
  bool any = false;
  if (u.lambda != Lattice{}) {
    os << "t[";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << u.lambda[i];
    os << ']';
    any = true;
  }
  for (int i : w_word(u.w)) {
    os << (any ? "*" : "") << 's' << i;
    any = true;
  }
  if (!any) return "e";
  return os.str();
}

AffineWeylElement RootDatum::parse_element(const std::string& text) const {
  AffineWeylElement u;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "e") return u;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('*', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    if (tok == "e") {
    } else if (tok.size() >= 3 && tok[0] == 't' && tok[1] == '[' && tok.back() == ']') {
      Lattice l{};
      std::istringstream ls(tok.substr(2, tok.size() - 3));
      std::string part;
      int k = 0;
      while (std::getline(ls, part, ',')) {
        if (k >= n_) throw std::invalid_argument("translation has too many coordinates: " + tok);
        l[k++] = std::stoi(part);
      }
      if (k != n_) throw std::invalid_argument("translation needs " + std::to_string(n_) + " coordinates: " + tok);
      u = mul(u, translation(l));
    } else if (tok.size() >= 2 && tok[0] == 's' &&
               std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int i = std::stoi(tok.substr(1));
      if (i > n_) throw std::invalid_argument("simple reflection out of range: " + tok);
      u = mul(u, simple(i));
    } else {
      throw std::invalid_argument("cannot parse group element token: " + tok);
    }
    pos = next + 1;
  }
  return u;
}

}  // namespace fada
