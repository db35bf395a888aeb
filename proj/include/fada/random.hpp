#ifndef FADA_RANDOM_HPP
#define FADA_RANDOM_HPP

#include <random>

#include "fada/twisted.hpp"

namespace fada {

using Rng = std::mt19937_64;

// Small rational (numerator and denominator at most 9) times a product of
// atoms: x_gamma, kappa_gamma, beta, and 1/x_gamma unless in_S is set.
Scalar random_scalar(const ScalarContext& ctx, Rng& rng, bool in_S = false);
// Random combination of eta_u with u in the ball of radius L.
TwistedElement random_twisted(const Algebra& alg, Rng& rng, int L, int terms, bool in_S = false);
// Random combination of eta_{t_lambda} with |lambda_i| <= radius.
PetersonElement random_peterson(const Algebra& alg, Rng& rng, int radius, int terms, bool in_S = false);

}  // namespace fada

#endif  // FADA_RANDOM_HPP
