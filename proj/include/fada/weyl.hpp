#ifndef FADA_WEYL_HPP
#define FADA_WEYL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace fada {

inline constexpr std::size_t kMaxRank = 7;

// Integer vector in simple-root or simple-coroot coordinates.
using Lattice = std::array<int, kMaxRank>;

// The element t_lambda w of the affine Weyl group; w indexes the enumerated
// finite Weyl group.
struct AffineWeylElement {
  Lattice lambda{};
  int w = 0;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement&, const AffineWeylElement&) = default;
  bool is_translation() const { return w == 0; }
};

struct AffineWeylHash {
  std::size_t operator()(const AffineWeylElement& u) const noexcept;
};

// The affine root root(r) + k*delta.
struct AffineRoot {
  int root = 0;
  int k = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

class RootDatum {
 public:
  // Cartan matrix a_ij = <alpha_i^vee, alpha_j> of a finite irreducible system.
  RootDatum(std::vector<std::vector<int>> cartan, std::string label);

  static RootDatum type_A(int n);
  // Text file with one row of integers per line; '#' starts a comment.
  static RootDatum from_cartan_file(const std::string& path);
  // "A1", "A2", ..., or "cartan:<file>".
  static RootDatum parse(const std::string& text);

  const std::string& label() const { return label_; }
  int rank() const { return n_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  // Roots: indices 0..P-1 are the positive roots by height, P..2P-1 their
  // negatives in the same order.
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  const Lattice& root(int r) const { return roots_[r]; }
  const Lattice& coroot(int r) const { return coroots_[r]; }
  bool is_positive(int r) const { return r < num_positive(); }
  int negate(int r) const { return is_positive(r) ? r + num_positive() : r - num_positive(); }
  int height(int r) const;
  // -1 when v is not a root.
  int root_index(const Lattice& v) const;
  // Index of simple root alpha_i, i = 1..n.
  int simple_root(int i) const { return simple_index_[i - 1]; }
  int theta() const { return theta_; }
  int pairing(const Lattice& coweight, const Lattice& weight) const;

  // Finite Weyl group; element 0 is the identity.
  int order() const { return static_cast<int>(w_root_.size()); }
  int w_mul(int a, int b) const { return w_mul_[a][b]; }
  int w_inverse(int a) const { return w_inv_[a]; }
  int w_length(int a) const { return w_len_[a]; }
  // Lexicographically smallest reduced word in 1..n.
  const std::vector<int>& w_word(int a) const { return w_word_[a]; }
  int w_simple(int i) const { return w_simple_[i - 1]; }
  int w_reflection(int r) const { return w_refl_[r]; }
  int w_longest() const { return w_longest_; }
  int w_act_root(int w, int r) const { return w_perm_[w][r]; }
  Lattice w_apply_root(int w, const Lattice& v) const;
  Lattice w_apply_coweight(int w, const Lattice& v) const;

  // Affine Weyl group.
  AffineWeylElement identity() const { return {}; }
  AffineWeylElement translation(const Lattice& lambda) const { return {lambda, 0}; }
  AffineWeylElement finite(int w) const { return {{}, w}; }
  // s_i for i in 0..n.
  AffineWeylElement simple(int i) const;
  AffineWeylElement mul(const AffineWeylElement& u, const AffineWeylElement& v) const;
  AffineWeylElement inverse(const AffineWeylElement& u) const;
  AffineWeylElement from_word(std::span<const int> word) const;
  AffineRoot apply(const AffineWeylElement& u, const AffineRoot& b) const;
  bool is_positive(const AffineRoot& b) const { return b.k > 0 || (b.k == 0 && is_positive(b.root)); }
  // Affine simple root alpha_i; alpha_0 = -theta + delta.
  AffineRoot affine_simple_root(int i) const;

  int ell_alpha(const AffineWeylElement& u, int alpha) const;
  int length(const AffineWeylElement& u) const;
  bool is_left_descent(const AffineWeylElement& u, int i) const;
  std::vector<int> reduced_word(const AffineWeylElement& u) const;
  AffineWeylElement w_min_coset(const Lattice& lambda) const;
  bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& v) const;
  // All elements of length <= L, sorted by length then reduced word.
  std::vector<AffineWeylElement> enumerate_ball(int L) const;

  // Affine A1 indexing: sigma_{2i} = t_{-i alpha^vee}, sigma_{2i+1} = s_0 sigma_{2i},
  // sigma_{-2i} = t_{i alpha^vee}, sigma_{-2i-1} = s_1 sigma_{-2i}.
  AffineWeylElement sigma(int i) const;
  bool is_affine_A1() const { return n_ == 1; }

  // "e", "t[1,0]", "t[1,0]*s1*s2", "s0*s1".
  std::string to_string(const AffineWeylElement& u) const;
  AffineWeylElement parse_element(const std::string& text) const;

  Lattice zero() const { return {}; }

 private:
  void build_roots();
  void build_weyl_group();
  std::vector<int> apply_matrix(int w, const Lattice& v, bool coweight) const;

  int n_;
  std::string label_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Lattice> roots_, coroots_;
  std::vector<int> simple_index_;
  int theta_ = 0;
  std::vector<std::vector<std::vector<int>>> w_root_, w_cow_;
  std::vector<std::vector<int>> w_mul_, w_perm_, w_word_;
  std::vector<int> w_inv_, w_len_, w_simple_, w_refl_;
  int w_longest_ = 0;
};

Lattice lattice_add(const Lattice& a, const Lattice& b);
Lattice lattice_sub(const Lattice& a, const Lattice& b);
Lattice lattice_scale(const Lattice& a, int k);

}  // namespace fada

#endif  // FADA_WEYL_HPP
