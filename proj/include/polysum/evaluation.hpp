#ifndef POLYSUM_EVALUATION_HPP
#define POLYSUM_EVALUATION_HPP

#include "polysum/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace polysum {

/// A point c at which formal exponentials are evaluated: e^mu(c) = exp(sum_i c_i mu_i),
/// pairing on Dynkin labels.
template <typename Scalar>
using EvaluationPoint = Vector<Scalar>;

/// c is too close to a pole of a vertex term, or an exponent is large enough to
/// threaten double precision. Callers retry with a fresh point.
class NearPoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenericityPolicy {
  /// Minimum |<c, alpha>| over all roots.
  double pole_tolerance = 1e-3;
  /// Maximum |<c, mu>| over every exponent that will be evaluated.
  double max_exponent = 30.0;
};

template <typename Scalar, typename Derived>
Scalar pairing(const EvaluationPoint<Scalar>& c, const Eigen::MatrixBase<Derived>& mu) {
  return c.dot(mu.template cast<Scalar>());
}

/// Throws NearPoleError unless c is generic for exponents drawn from the Weyl orbits
/// of the given weights.
template <typename Scalar>
void check_generic(const CartanData& cd, const EvaluationPoint<Scalar>& c, std::span<const Weight> exponents,
                   const GenericityPolicy& policy = {}) {
  if (c.size() != cd.rank()) throw InvalidArgument("evaluation point has the wrong length");
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (!std::isfinite(double(c(i)))) throw InvalidArgument("evaluation point has a non-finite entry");
  }
  for (const Weight& alpha : cd.positive_root_weights) {
    const double p = std::abs(double(pairing(c, alpha)));
    if (p < policy.pole_tolerance) {
      throw NearPoleError("near-pole: |<c, " + format_tuple(alpha) + ">| = " + std::to_string(p));
    }
  }
  for (const Weight& mu : exponents) {
    for (const Weight& nu : orbit(cd, mu)) {
      if (std::abs(double(pairing(c, nu))) > policy.max_exponent) {
        throw NearPoleError("near-pole: exponent <c, " + format_tuple(nu) + "> exceeds " +
                            std::to_string(policy.max_exponent));
      }
    }
  }
}

/// Draws c with entries uniform in [0.05, 2] and random signs, retrying until generic.
template <typename Scalar, typename Rng>
EvaluationPoint<Scalar> sample_generic_point(const CartanData& cd, std::span<const Weight> exponents, Rng& rng,
                                             const GenericityPolicy& policy = {}, int attempts = 50) {
  std::uniform_real_distribution<double> magnitude(0.05, 2.0);
  std::bernoulli_distribution flip(0.5);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    EvaluationPoint<Scalar> c(cd.rank());
    for (int i = 0; i < cd.rank(); ++i) c(i) = Scalar(flip(rng) ? magnitude(rng) : -magnitude(rng));
    try {
      check_generic(cd, c, exponents, policy);
      return c;
    } catch (const NearPoleError&) {
    }
  }
  throw NearPoleError("no generic evaluation point found in " + std::to_string(attempts) + " attempts");
}

/// |a - b| within rel * |b|, with an absolute floor of 1e-12 * (1 + |b|).
template <typename Scalar>
bool relatively_close(Scalar a, Scalar b, double rel) {
  using std::abs;
  const double diff = double(abs(a - b));
  const double scale = double(abs(b));
  return diff <= std::max(rel * scale, 1e-12 * (1.0 + scale));
}

template <typename Scalar>
double relative_error(Scalar a, Scalar b) {
  using std::abs;
  return double(abs(a - b)) / std::max(double(abs(b)), 1e-300);
}

}  // namespace polysum

#endif  // POLYSUM_EVALUATION_HPP
