#include "fada/random.hpp"

namespace fada {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Scalar random_scalar(const ScalarContext& ctx, Rng& rng, bool in_S) {
  const int roots = ctx.datum().num_roots();
  Scalar out(0);
  const int summands = uniform(rng, 1, 2);
  for (int s = 0; s < summands; ++s) {
    int num = uniform(rng, -9, 9);
    if (num == 0) num = 1;
    Scalar term = ctx.constant(mpq_class(num, uniform(rng, 1, 9)));
    const int atoms = uniform(rng, 0, 2);
    for (int a = 0; a < atoms; ++a) {
      const int r = uniform(rng, 0, roots - 1);
      switch (uniform(rng, 0, in_S ? 2 : 3)) {
        case 0: term *= ctx.x_root(r); break;
        case 1: term *= ctx.kappa(r); break;
        case 2: term *= ctx.beta(); break;
        default: term /= ctx.x_root(r); break;
      }
    }
    out += term;
  }
  if (out.is_zero()) out = ctx.constant(1);
  return out;
}

TwistedElement random_twisted(const Algebra& alg, Rng& rng, int L, int terms, bool in_S) {
  const auto ball = alg.datum().enumerate_ball(L);
  TwistedElement z;
  for (int k = 0; k < terms; ++k)
    z.add_term(ball[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ball.size()) - 1))],
               random_scalar(alg.ctx(), rng, in_S));
  return z;
}

PetersonElement random_peterson(const Algebra& alg, Rng& rng, int radius, int terms, bool in_S) {
  const RootDatum& d = alg.datum();
  PetersonElement z;
  for (int k = 0; k < terms; ++k) {
    Lattice lambda{};
    for (int i = 0; i < d.rank(); ++i) lambda[i] = uniform(rng, -radius, radius);
    z.add_term(d.translation(lambda), random_scalar(alg.ctx(), rng, in_S));
  }
  return z;
}

}  // namespace fada
