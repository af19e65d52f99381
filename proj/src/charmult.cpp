#include "polysum/charmult.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

namespace polysum {

namespace {

Int scaled_inner(const CartanData& cd, const IntVector& u, const IntVector& v) {
  return u.dot(cd.scaled_qform * v);
}

}  // namespace

void require_dominant(const CartanData& cd, const Weight& lam, std::string_view what) {
  check_rank(cd, lam, what);
  if (!is_dominant(lam)) {
    throw InvalidArgument(std::string(what) + " " + format_tuple(lam) + " is not dominant");
  }
}

std::map<Weight, Int> dominant_multiplicities(const CartanData& cd, const Weight& lam) {
  require_dominant(cd, lam);
  const std::vector<Weight> candidates = dominant_weights_below(cd, lam);
  const std::set<Weight> dominant_set(candidates.begin(), candidates.end());

  const Weight top_shift = lam + cd.rho;
  const Int top_norm = scaled_inner(cd, top_shift, top_shift);
  std::map<Weight, Int> mult;
  for (const Weight& mu : candidates) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Int sum = 0;
    for (const Weight& alpha : cd.positive_root_weights) {
      Weight step = mu + alpha;
      while (true) {
        const Weight dom = dominant_weight(cd, step);
        if (!dominant_set.contains(dom)) break;
        sum += mult.at(dom) * scaled_inner(cd, step, alpha);
        step += alpha;
      }
    }
    const Weight shift = mu + cd.rho;
    const Int gap = top_norm - scaled_inner(cd, shift, shift);
    if (gap <= 0 || (2 * sum) % gap != 0) {
      throw ConsistencyError("Freudenthal recursion broke at " + format_tuple(mu) + " in L" + format_tuple(lam));
    }
    mult[mu] = 2 * sum / gap;
  }
  return mult;
}

MultMap freudenthal(const CartanData& cd, const Weight& lam) {
  MultMap ch;
  for (const auto& [mu, m] : dominant_multiplicities(cd, lam)) {
    for (const Weight& nu : orbit(cd, mu)) ch.add(nu, m);
  }
  return ch;
}

const MultMap& weight_system(const CartanData& cd, const Weight& lam) {
  static std::mutex mutex;
  static std::map<std::pair<AlgebraId, Weight>, std::unique_ptr<const MultMap>> cache;
  auto key = std::make_pair(cd.id, lam);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<const MultMap>(freudenthal(cd, lam));
  std::lock_guard lock(mutex);
  return *cache.emplace(std::move(key), std::move(computed)).first->second;
}

Int dim(const CartanData& cd, const Weight& lam) {
  require_dominant(cd, lam);
  const Weight shifted = lam + cd.rho;
  Rational d(1);
  for (const Weight& alpha : cd.positive_root_weights) {
    d *= inner(cd, shifted, alpha) / inner(cd, cd.rho, alpha);
  }
  if (d.denominator() != 1) {
    throw ConsistencyError("dimension of L" + format_tuple(lam) + " is not integral: " + format_rational(d));
  }
  return d.numerator();
}

}  // namespace polysum
