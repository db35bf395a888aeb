#include <doctest.h>

#include "fada/dual.hpp"
#include "fada/random.hpp"

using namespace fada;

namespace {

Lattice lat(int a) {
  Lattice l{};
  l[0] = a;
  return l;
}

struct Affine {
  explicit Affine(int n)
      : datum(std::make_shared<const RootDatum>(RootDatum::type_A(n))),
        alg(ScalarContext::hyperbolic(datum)),
        dual(alg) {}

  std::shared_ptr<const RootDatum> datum;
  Algebra alg;
  Dual dual;
};

DualFunctional random_functional(const Algebra& alg, Rng& rng, int support, int L, int terms) {
  const TwistedElement z = random_twisted(alg, rng, support, terms, true);
  DualFunctional f(L);
  for (const auto& [u, c] : z.terms()) f.add_term(u, c);
  return f;
}

}  // namespace

TEST_CASE("bullet and odot on basis functionals") {
  Affine a(1);
  const auto& d = *a.datum;
  const auto& ctx = a.alg.ctx();
  const Scalar x1 = ctx.x_simple(1);
  const Scalar xm = ctx.x_root(1);
  const auto s0 = d.simple(0), s1 = d.simple(1);
  CHECK(a.dual.bullet(a.alg.eta(s1), DualFunctional::basis(d.identity(), 4)) == DualFunctional::basis(s1, 4));
  CHECK(a.dual.bullet(TwistedElement::scalar(x1), DualFunctional::basis(s1, 4)) ==
        DualFunctional::basis(s1, 4, xm));
  CHECK(a.dual.odot(TwistedElement::scalar(x1), DualFunctional::basis(s1, 4)) ==
        DualFunctional::basis(s1, 4, x1));
  CHECK(a.dual.odot(a.alg.eta(s0), DualFunctional::basis(d.identity(), 4, x1)) ==
        DualFunctional::basis(s0, 4, xm));
  CHECK(a.dual.bullet(a.alg.eta(s0), DualFunctional::basis(s1, 4)) ==
        DualFunctional::basis(d.mul(s1, s0), 4));
  CHECK_THROWS_AS(a.dual.odot(a.alg.eta(s0), DualFunctional::basis(d.sigma(4), 4)), std::out_of_range);
}

TEST_CASE("bullet is dual to right multiplication") {
  Affine a(1);
  const auto& d = *a.datum;
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const DualFunctional f = random_functional(a.alg, rng, 2, 8, 3);
    const TwistedElement z = random_twisted(a.alg, rng, 2, 2, true);
    const TwistedElement zp = random_twisted(a.alg, rng, 2, 2, true);
    CHECK(a.dual.evaluate(a.dual.bullet(z, f), zp) == a.dual.evaluate(f, a.alg.mul(zp, z)));
  }
  // The other order does not match: f_{s1} on (x1)(eta_{s1}) versus (eta_{s1})(x1).
  const auto s1 = d.simple(1);
  const DualFunctional f = DualFunctional::basis(s1, 4);
  const TwistedElement z = TwistedElement::scalar(a.alg.ctx().x_simple(1));
  CHECK(a.dual.evaluate(a.dual.bullet(z, f), a.alg.eta(s1)) == a.alg.ctx().x_root(1));
  CHECK_FALSE(a.dual.evaluate(a.dual.bullet(z, f), a.alg.eta(s1)) ==
              a.dual.evaluate(f, a.alg.mul(z, a.alg.eta(s1))));
}

TEST_CASE("action axioms and commutation") {
  for (int n : {1, 2}) {
    Affine a(n);
    Rng rng(20 + n);
    for (int trial = 0; trial < 10; ++trial) {
      const DualFunctional f = random_functional(a.alg, rng, 2, 8, 3);
      const TwistedElement z = random_twisted(a.alg, rng, 2, 2, true);
      const TwistedElement zp = random_twisted(a.alg, rng, 2, 2, true);
      const TwistedElement prod = a.alg.mul(z, zp);
      CHECK(a.dual.bullet(z, a.dual.bullet(zp, f)) == a.dual.bullet(prod, f));
      CHECK(a.dual.odot(z, a.dual.odot(zp, f)) == a.dual.odot(prod, f));
      CHECK(a.dual.bullet(z, a.dual.odot(zp, f)) == a.dual.odot(zp, a.dual.bullet(z, f)));
      CHECK(a.dual.bullet(a.alg.one(), f) == f);
      CHECK(a.dual.odot(a.alg.one(), f) == f);
    }
  }
}

TEST_CASE("Hochschild reduction") {
  for (int n : {1, 2}) {
    Affine a(n);
    const auto& ctx = a.alg.ctx();
    Rng rng(30 + n);
    for (int trial = 0; trial < 10; ++trial) {
      const DualFunctional f = random_functional(a.alg, rng, 3, 6, 4);
      const TwistedElement s = TwistedElement::scalar(random_scalar(ctx, rng, true));
      CHECK(a.dual.iota_star(a.dual.bullet(s, f) - a.dual.odot(s, f)).is_zero());

      const HH0Reduction red = a.dual.hh0_reduce(f);
      DualFunctional sum = red.canonical;
      for (const auto& w : red.witnesses) {
        const DualFunctional v = a.dual.witness_value(w, f.ball());
        CHECK(v == DualFunctional::basis(w.elem, f.ball(), w.coeff));
        CHECK_FALSE(w.denom.is_zero());
        sum += v;
      }
      CHECK(sum == f);
      for (const auto& [u, c] : red.canonical.values()) CHECK(u.is_translation());
    }
  }
}

TEST_CASE("dual Y basis") {
  Affine a(1);
  const auto& d = *a.datum;
  const auto& ctx = a.alg.ctx();
  const auto small = a.dual.dual_basis_y(4);
  const auto big = a.dual.dual_basis_y(6);
  const auto ball = d.enumerate_ball(4);
  for (const auto& w : ball) {
    for (const auto& v : ball)
      CHECK(a.dual.evaluate(small.at(w), a.alg.y_canonical(v)) == Scalar(v == w ? 1 : 0));
    for (const auto& [u, c] : small.at(w).values()) {
      CHECK(big.at(w).value(u) == c);
      CHECK(d.bruhat_leq(w, u));
    }
    CHECK(small.at(w).value(w) == a.dual.inversion_product(w));
  }
  CHECK(small.at(d.sigma(2)).value(d.sigma(2)) == ctx.x_simple(1).pow(2));
  CHECK(a.dual.ell_product(d.sigma(2)) == ctx.x_simple(1).pow(2));
  // On s0 the leading value is x_{-alpha}, a unit multiple of x_alpha.
  CHECK(small.at(d.sigma(1)).value(d.sigma(1)) == ctx.x_root(1));
  CHECK_FALSE(small.at(d.sigma(1)).value(d.sigma(1)) == a.dual.ell_product(d.sigma(1)));
  CHECK((a.dual.ell_product(d.sigma(1)) / ctx.x_root(1)).in_S());
  CHECK((ctx.x_root(1) / a.dual.ell_product(d.sigma(1))).in_S());
}

TEST_CASE("GKM conditions") {
  {
    Affine a(1);
    const auto& d = *a.datum;
    const auto basis = a.dual.dual_basis_y(5);
    for (const auto& w : d.enumerate_ball(4)) {
      CHECK(a.dual.gkm_check(basis.at(w)).pass());
      CHECK_FALSE(a.dual.gkm_check(basis.at(w), a.dual.stratum_of(w) + 1).pass());
    }
    const Report neg = a.dual.gkm_check(DualFunctional::basis(d.translation(lat(2)), 6));
    REQUIRE_FALSE(neg.pass());
    CHECK(neg.failures.front() == "x_0^3 does not divide f(t[2])");
    const Report short_ball = a.dual.gkm_check(DualFunctional::basis(d.translation(lat(2)), 3));
    CHECK(short_ball.failures.front() == "coset of t[2] extends beyond the ball");
  }
  {
    Affine a(2);
    const auto& d = *a.datum;
    const auto basis = a.dual.dual_basis_y(5);
    for (const auto& w : d.enumerate_ball(2)) CHECK(a.dual.gkm_check(basis.at(w)).pass());
  }
}

TEST_CASE("filtration strata") {
  Affine a(1);
  const auto& d = *a.datum;
  const auto s0 = a.dual.filtration_stratum(0, 3);
  CHECK(s0 == std::vector<AffineWeylElement>{d.identity(), d.simple(1)});
  const auto s2 = a.dual.filtration_stratum(2, 5);
  CHECK(s2 == std::vector<AffineWeylElement>{d.translation(lat(-1)), d.mul(d.translation(lat(-1)), d.simple(1))});
  CHECK(a.dual.filtration_stratum(7, 5).empty());
  CHECK_THROWS_AS(a.dual.filtration_stratum(5, 5), std::out_of_range);
}

TEST_CASE("graded ranks") {
  {
    Affine a(1);
    for (int i = 0; i <= 2; ++i) {
      const GradedRank g = a.dual.graded_rank_check(i, 5);
      CHECK(g.report.pass());
      CHECK(g.stratum_size == 2);
      CHECK(g.z_rank == 2);
      CHECK(g.cosets == 1);
      CHECK(g.iota_rank == 1);
      CHECK(g.relation_rank == 1);
    }
  }
  {
    Affine a(2);
    const GradedRank g = a.dual.graded_rank_check(1, 4);
    CHECK(g.report.pass());
    CHECK(g.stratum_size == 6);
    CHECK(g.z_rank == 6);
    CHECK(g.iota_rank == 1);
    CHECK(g.relation_rank == 5);
  }
}

TEST_CASE("coproduct dual m_star") {
  Affine a(1);
  const auto& d = *a.datum;
  Rng rng(41);
  const auto ball = d.enumerate_ball(2);
  for (int trial = 0; trial < 5; ++trial) {
    const DualFunctional f = random_functional(a.alg, rng, 2, 4, 3);
    const PairMap m = a.dual.m_star(f, 4);
    for (int k = 0; k < 10; ++k) {
      const auto& u = ball[rng() % ball.size()];
      const auto& v = ball[rng() % ball.size()];
      const Scalar s = random_scalar(a.alg.ctx(), rng, true);
      const Scalar t = random_scalar(a.alg.ctx(), rng, true);
      const Scalar direct = a.dual.evaluate(f, a.alg.mul(TwistedElement::eta(u, s), TwistedElement::eta(v, t)));
      CHECK(a.dual.pair_hat(m, s, u, t, v) == direct);
    }
  }
}

TEST_CASE("small dual examples") {
  Affine a(1);
  const auto& d = *a.datum;
  const auto& ctx = a.alg.ctx();
  const HH0Reduction red = a.dual.hh0_reduce(DualFunctional::basis(d.simple(1), 3));
  CHECK(red.canonical.is_zero());
  REQUIRE(red.witnesses.size() == 1);
  CHECK(red.witnesses[0].x_mu == ctx.x_simple(1));
  CHECK(red.witnesses[0].denom == ctx.x_simple(1) - ctx.x_root(1));
  const auto t = d.translation(lat(1));
  CHECK(a.dual.hh0_reduce(DualFunctional::basis(t, 3)).witnesses.empty());
  CHECK(a.dual.iota_star(DualFunctional::basis(d.mul(t, d.simple(1)), 3)).is_zero());

  CHECK(a.dual.m_star(DualFunctional(3), 3).empty());
  const PairMap m = a.dual.m_star(DualFunctional::basis(d.identity(), 3), 3);
  CHECK(m.size() == d.enumerate_ball(3).size());
  for (const auto& [uv, c] : m) {
    CHECK(uv.second == d.inverse(uv.first));
    CHECK(c == Scalar(1));
  }
  CHECK(a.dual.gkm_check(DualFunctional(3)).pass());
  CHECK(a.dual.dual_basis_y(3).at(d.identity()).value(d.identity()) == Scalar(1));
}
