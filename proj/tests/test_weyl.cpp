#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "fada/weyl.hpp"

using fada::AffineRoot;
using fada::AffineWeylElement;
using fada::Lattice;
using fada::RootDatum;

namespace {

Lattice lat(std::initializer_list<int> v) {
  Lattice l{};
  int i = 0;
  for (int x : v) l[i++] = x;
  return l;
}

// Counts affine inversions over +-alpha + k delta with 0 <= k <= kmax.
int ell_alpha_by_inversions(const RootDatum& d, const AffineWeylElement& u, int alpha, int kmax) {
  const AffineWeylElement inv = d.inverse(u);
  int count = 0;
  for (int k = 0; k <= kmax; ++k) {
    for (int r : {alpha, d.negate(alpha)}) {
      AffineRoot b{r, k};
      if (!d.is_positive(b)) continue;
      if (!d.is_positive(d.apply(inv, b))) ++count;
    }
  }
  return count;
}

// Shortest-word lengths by BFS over the Cayley graph, up to radius L.
std::map<AffineWeylElement, int> bfs_lengths(const RootDatum& d, int L) {
  std::map<AffineWeylElement, int> dist{{d.identity(), 0}};
  std::vector<AffineWeylElement> frontier{d.identity()};
  for (int l = 1; l <= L; ++l) {
    std::vector<AffineWeylElement> next;
    for (const auto& u : frontier)
      for (int i = 0; i <= d.rank(); ++i) {
        auto c = d.mul(u, d.simple(i));
        if (dist.emplace(c, l).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return dist;
}

// u <= v iff u is a product of a subword of a reduced word of v.
bool bruhat_by_subwords(const RootDatum& d, const AffineWeylElement& u, const AffineWeylElement& v) {
  const auto word = d.reduced_word(v);
  const std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) sub.push_back(word[k]);
    if (d.from_word(sub) == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("root data of A1 and A2") {
  RootDatum a1 = RootDatum::type_A(1), a2 = RootDatum::type_A(2);
  CHECK(a1.order() == 2);
  CHECK(a2.order() == 6);
  CHECK(a2.num_roots() == 6);
  CHECK(a2.root(a2.theta()) == lat({1, 1}));
  CHECK(RootDatum::type_A(3).order() == 24);
  for (int r = 0; r < a2.num_roots(); ++r) CHECK(a2.pairing(a2.coroot(r), a2.root(r)) == 2);
  CHECK(a2.w_length(a2.w_longest()) == 3);
  CHECK(a2.w_word(a2.w_longest()) == std::vector<int>{1, 2, 1});
  // s1(alpha2) = alpha1 + alpha2
  CHECK(a2.w_apply_root(a2.w_simple(1), lat({0, 1})) == lat({1, 1}));
  CHECK_THROWS(RootDatum({{2, 1}, {1, 2}}, "bad"));
  // B2 from a Cartan matrix: 8 roots, order 8.
  RootDatum b2({{2, -1}, {-2, 2}}, "B2");
  CHECK(b2.num_roots() == 8);
  CHECK(b2.order() == 8);
  for (int r = 0; r < b2.num_roots(); ++r) CHECK(b2.pairing(b2.coroot(r), b2.root(r)) == 2);
}

TEST_CASE("affine multiplication") {
  RootDatum d = RootDatum::type_A(1);
  // s0 is the reflection in alpha_0 = -theta + delta.
  AffineWeylElement s0 = d.simple(0);
  CHECK(s0 == AffineWeylElement{lat({1}), d.w_simple(1)});
  CHECK(d.apply(s0, d.affine_simple_root(0)) == AffineRoot{d.theta(), -1});
  CHECK(d.mul(d.simple(1), s0) == d.translation(lat({-1})));
  CHECK(d.mul(d.simple(1), s0) == d.sigma(2));
  RootDatum a2 = RootDatum::type_A(2);
  for (const auto& u : a2.enumerate_ball(3)) {
    CHECK(a2.mul(u, a2.inverse(u)) == a2.identity());
    for (const auto& v : a2.enumerate_ball(2)) {
      const auto w = a2.simple(0);
      CHECK(a2.mul(a2.mul(u, v), w) == a2.mul(u, a2.mul(v, w)));
    }
  }
  // s_{alpha + k delta} = t_{-k alpha^vee} s_alpha acts as a reflection on the affine root.
  for (int k = -2; k <= 2; ++k) {
    AffineWeylElement r{a2.coroot(a2.theta()), a2.w_reflection(a2.theta())};
    r.lambda = fada::lattice_scale(r.lambda, -k);
    CHECK(a2.apply(r, AffineRoot{a2.theta(), k}) == AffineRoot{a2.negate(a2.theta()), -k});
  }
}

TEST_CASE("ell_alpha closed form against inversion counting") {
  for (int n : {1, 2}) {
    RootDatum d = RootDatum::type_A(n);
    for (const auto& u : d.enumerate_ball(6))
      for (int a = 0; a < d.num_positive(); ++a) CHECK(d.ell_alpha(u, a) == ell_alpha_by_inversions(d, u, a, 12));
  }
  RootDatum d = RootDatum::type_A(1);
  CHECK(d.ell_alpha(d.sigma(3), 0) == 3);
  CHECK(d.ell_alpha(d.translation(lat({-1})), 0) == 2);
  CHECK(d.ell_alpha(d.identity(), 0) == 0);
}

TEST_CASE("length agrees with BFS") {
  for (int n : {1, 2}) {
    RootDatum d = RootDatum::type_A(n);
    auto dist = bfs_lengths(d, 6);
    for (const auto& [u, l] : dist) CHECK(d.length(u) == l);
    CHECK(d.enumerate_ball(6).size() == dist.size());
  }
  RootDatum a2 = RootDatum::type_A(2);
  CHECK(a2.length(a2.translation(a2.coroot(a2.theta()))) == 4);
  RootDatum a1 = RootDatum::type_A(1);
  for (int i = 0; i <= 5; ++i) CHECK(a1.length(a1.sigma(2 * i)) == 2 * i);
}

TEST_CASE("canonical reduced words") {
  RootDatum d = RootDatum::type_A(1);
  CHECK(d.reduced_word(d.sigma(3)) == std::vector<int>{0, 1, 0});
  CHECK(d.reduced_word(d.identity()).empty());
  CHECK(d.reduced_word(d.translation(lat({1}))) == std::vector<int>{0, 1});
  RootDatum a2 = RootDatum::type_A(2);
  for (const auto& u : a2.enumerate_ball(5)) {
    auto w = a2.reduced_word(u);
    CHECK(static_cast<int>(w.size()) == a2.length(u));
    CHECK(a2.from_word(w) == u);
  }
}

TEST_CASE("minimal coset representatives") {
  RootDatum d = RootDatum::type_A(1);
  for (int i = 0; i <= 4; ++i) {
    CHECK(d.w_min_coset(lat({-i})) == d.sigma(2 * i));
    if (i >= 1) CHECK(d.w_min_coset(lat({i})) == d.sigma(2 * i - 1));
  }
  CHECK(d.w_min_coset(lat({0})) == d.identity());
}

TEST_CASE("Bruhat order against subword enumeration") {
  for (int n : {1, 2}) {
    RootDatum d = RootDatum::type_A(n);
    auto ball = d.enumerate_ball(n == 1 ? 5 : 4);
    for (const auto& u : ball)
      for (const auto& v : ball) CHECK(d.bruhat_leq(u, v) == bruhat_by_subwords(d, u, v));
  }
  RootDatum d = RootDatum::type_A(1);
  CHECK(d.bruhat_leq(d.sigma(2), d.sigma(3)));
  CHECK_FALSE(d.bruhat_leq(d.sigma(3), d.sigma(2)));
}

TEST_CASE("balls") {
  RootDatum d = RootDatum::type_A(1);
  CHECK(d.enumerate_ball(0).size() == 1);
  CHECK(d.enumerate_ball(2).size() == 5);
  RootDatum a2 = RootDatum::type_A(2);
  CHECK(a2.enumerate_ball(1).size() == 4);
}

TEST_CASE("length is subadditive") {
  RootDatum d = RootDatum::type_A(2);
  auto ball = d.enumerate_ball(3);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      const int l = d.length(d.mul(u, v));
      CHECK(std::abs(l - d.length(u)) <= d.length(v));
    }
}

TEST_CASE("element notation round trip") {
  RootDatum d = RootDatum::type_A(2);
  for (const auto& u : d.enumerate_ball(4)) CHECK(d.parse_element(d.to_string(u)) == u);
  CHECK(d.to_string(d.identity()) == "e");
  CHECK(d.parse_element("s0") == d.simple(0));
  CHECK_THROWS(d.parse_element("q1"));
}
