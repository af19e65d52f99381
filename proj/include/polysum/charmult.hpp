#ifndef POLYSUM_CHARMULT_HPP
#define POLYSUM_CHARMULT_HPP

#include "polysum/evaluation.hpp"
#include "polysum/multmap.hpp"

namespace polysum {

void require_dominant(const CartanData& cd, const Weight& lam, std::string_view what = "highest weight");

/// Multiplicities of the dominant weights of L(lam) by Freudenthal's recursion.
std::map<Weight, Int> dominant_multiplicities(const CartanData& cd, const Weight& lam);

/// Full character of L(lam), computed afresh.
MultMap freudenthal(const CartanData& cd, const Weight& lam);

/// Cached character of L(lam). The reference stays valid for the life of the process.
const MultMap& weight_system(const CartanData& cd, const Weight& lam);

/// Weyl dimension formula in exact rationals.
Int dim(const CartanData& cd, const Weight& lam);

/// (sum_w det w e^{w(lam+rho)}) / (sum_w det w e^{w rho}).
template <typename Scalar>
Scalar char_eval_quotient(const CartanData& cd, const Weight& lam, const EvaluationPoint<Scalar>& c,
                          const GenericityPolicy& policy = {}) {
  require_dominant(cd, lam);
  const Weight shifted = lam + cd.rho;
  const Weight exps[] = {shifted};
  check_generic(cd, c, std::span<const Weight>(exps), policy);
  Scalar numerator(0), denominator(0);
  for (const WeylElement& w : weyl_group(cd)) {
    numerator += Scalar(w.det) * std::exp(pairing(c, w(shifted)));
    denominator += Scalar(w.det) * std::exp(pairing(c, w(cd.rho)));
  }
  return numerator / denominator;
}

/// sum_w e^{w lam} prod_{alpha > 0} (1 - e^{-w alpha})^{-1}.
template <typename Scalar>
Scalar char_eval_brionform(const CartanData& cd, const Weight& lam, const EvaluationPoint<Scalar>& c,
                           const GenericityPolicy& policy = {}) {
  require_dominant(cd, lam);
  const Weight exps[] = {lam};
  check_generic(cd, c, std::span<const Weight>(exps), policy);
  Scalar sum(0);
  for (const WeylElement& w : weyl_group(cd)) {
    Scalar term = std::exp(pairing(c, w(lam)));
    for (const Weight& alpha : cd.positive_root_weights) {
      term /= Scalar(1) - std::exp(-pairing(c, w(alpha)));
    }
    sum += term;
  }
  return sum;
}

/// Alternating side of the denominator identity: sum_w det w e^{w rho}.
template <typename Scalar>
Scalar weyl_denominator_sum(const CartanData& cd, const EvaluationPoint<Scalar>& c) {
  Scalar sum(0);
  for (const WeylElement& w : weyl_group(cd)) sum += Scalar(w.det) * std::exp(pairing(c, w(cd.rho)));
  return sum;
}

/// Product side: e^{rho} prod_{alpha > 0} (1 - e^{-alpha}).
template <typename Scalar>
Scalar weyl_denominator_product(const CartanData& cd, const EvaluationPoint<Scalar>& c) {
  Scalar prod = std::exp(pairing(c, cd.rho));
  for (const Weight& alpha : cd.positive_root_weights) prod *= Scalar(1) - std::exp(-pairing(c, alpha));
  return prod;
}

}  // namespace polysum

#endif  // POLYSUM_CHARMULT_HPP
