#pragma once

// Shared deterministic generators for the property-style tests.

#include "closc/algebra.hpp"

#include <random>
#include <vector>

namespace testsupport {

using closc::AlgebraParams;
using closc::Rational;

// Uniform rational strictly inside (lo, hi): lo + (hi-lo)*k/q with
// k in [1, q-1]. Prime q keeps samples off integer-valued boundaries.
inline Rational rand_in_open(std::mt19937& gen, const Rational& lo,
                             const Rational& hi, long q = 97) {
  std::uniform_int_distribution<long> pick(1, q - 1);
  return lo + (hi - lo) * Rational(pick(gen), q);
}

// Admissible parameters for any lambda: sample the cumulative sums
// beta_mu = -mu + u with u in (0, span), so F(mu) = mu + beta_mu > 0.
inline AlgebraParams rand_admissible(std::mt19937& gen, int lambda,
                                     const Rational& span = 8) {
  std::vector<Rational> beta(lambda);
  beta[0] = 0;
  for (int mu = 1; mu < lambda; ++mu)
    beta[mu] = Rational(-mu) + rand_in_open(gen, 0, span, 101);
  std::vector<Rational> alpha(lambda - 1);
  for (int mu = 0; mu + 1 < lambda; ++mu) alpha[mu] = beta[mu + 1] - beta[mu];
  return AlgebraParams(lambda, std::move(alpha));
}

// lambda=3 sampler covering all three ground-order regions, strictly off
// the alpha_0 = 2 and alpha_1 = -4 boundaries.
inline AlgebraParams rand_admissible_l3(std::mt19937& gen,
                                        const Rational& hi0 = 12,
                                        const Rational& hi1 = 12) {
  for (;;) {
    const Rational a0 = rand_in_open(gen, -1, hi0, 97);
    const Rational a1 = rand_in_open(gen, -2 - a0, hi1, 89);
    if (a0 == 2 || a1 == -4) continue;
    return AlgebraParams(3, {a0, a1});
  }
}

}  // namespace testsupport
