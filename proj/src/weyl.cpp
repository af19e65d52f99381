#include "polysum/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace polysum {

namespace {

void check_index(const CartanData& cd, int i) {
  if (i < 0 || i >= cd.rank()) {
    throw InvalidArgument("simple root index " + std::to_string(i) + " out of range for " + cd.id.name());
  }
}

}  // namespace

WeylElement identity_element(const CartanData& cd) {
  return WeylElement{IntMatrix::Identity(cd.rank(), cd.rank()), 1, 0};
}

IntMatrix reflection_matrix(const CartanData& cd, int i) {
  check_index(cd, i);
  IntMatrix m = IntMatrix::Identity(cd.rank(), cd.rank());
  m.col(i) -= cd.simple_root_weights[std::size_t(i)];
  return m;
}

Weight reflect(const CartanData& cd, int i, const Weight& mu) {
  check_index(cd, i);
  check_rank(cd, mu);
  return Weight(mu - mu(i) * cd.simple_root_weights[std::size_t(i)]);
}

std::vector<WeylElement> enumerate(const CartanData& cd, Int bound) {
  if (cd.weyl_order > bound) {
    throw InvalidArgument("group too large: |W(" + cd.id.name() + ")| = " + std::to_string(cd.weyl_order) +
                          " exceeds the enumeration bound " + std::to_string(bound));
  }
  const int r = cd.rank();
  std::vector<IntMatrix> generators;
  for (int i = 0; i < r; ++i) generators.push_back(reflection_matrix(cd, i));

  // w(rho) identifies w since rho is regular.
  std::unordered_set<IntVector, WeightHash> seen;
  std::vector<WeylElement> elements;
  elements.reserve(std::size_t(cd.weyl_order));
  elements.push_back(identity_element(cd));
  seen.insert(cd.rho);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const IntMatrix& g : generators) {
      IntMatrix product = g * elements[k].action;
      IntVector image = product * cd.rho;
      if (seen.insert(image).second) {
        elements.push_back(WeylElement{std::move(product), -elements[k].det, elements[k].length + 1});
      }
    }
  }
  if (Int(elements.size()) != cd.weyl_order) {
    throw ConsistencyError("enumerated " + std::to_string(elements.size()) + " Weyl elements for " +
                           cd.id.name() + ", expected " + std::to_string(cd.weyl_order));
  }
  return elements;
}

const std::vector<WeylElement>& weyl_group(const CartanData& cd) {
  static std::mutex mutex;
  static std::map<AlgebraId, std::unique_ptr<const std::vector<WeylElement>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(cd.id); it != cache.end()) return *it->second;
  }
  auto group = std::make_unique<const std::vector<WeylElement>>(enumerate(cd));
  std::lock_guard lock(mutex);
  return *cache.emplace(cd.id, std::move(group)).first->second;
}

std::vector<Weight> orbit(const CartanData& cd, const Weight& mu) {
  check_rank(cd, mu);
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    const Weight current = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < cd.rank(); ++i) {
      if (current(i) == 0) continue;
      Weight next = reflect(cd, i, current);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), LevelLexLess{&cd});
  return out;
}

Weight dominant_weight(const CartanData& cd, const Weight& mu) {
  check_rank(cd, mu);
  Weight current = mu;
  for (int i = 0; i < cd.rank();) {
    if (current(i) < 0) {
      current -= current(i) * cd.simple_root_weights[std::size_t(i)];
      i = 0;
    } else {
      ++i;
    }
  }
  return current;
}

std::pair<Weight, WeylElement> dominant_representative(const CartanData& cd, const Weight& mu) {
  check_rank(cd, mu);
  Weight current = mu;
  WeylElement w = identity_element(cd);
  for (int i = 0; i < cd.rank();) {
    if (current(i) < 0) {
      const IntMatrix r = reflection_matrix(cd, i);
      current = r * current;
      w.action = r * w.action;
      w.det = -w.det;
      ++w.length;
      i = 0;
    } else {
      ++i;
    }
  }
  return {current, w};
}

Weight shifted_action(const CartanData& cd, const WeylElement& w, const Weight& mu) {
  check_rank(cd, mu);
  return Weight(w.action * (mu + cd.rho) - cd.rho);
}

std::optional<SignedWeight> shifted_reduce(const CartanData& cd, const Weight& mu) {
  check_rank(cd, mu);
  Weight shifted = mu + cd.rho;
  int sign = 1;
  for (int i = 0; i < cd.rank();) {
    if (shifted(i) == 0) return std::nullopt;
    if (shifted(i) < 0) {
      shifted -= shifted(i) * cd.simple_root_weights[std::size_t(i)];
      sign = -sign;
      i = 0;
    } else {
      ++i;
    }
  }
  return SignedWeight{sign, Weight(shifted - cd.rho)};
}

std::vector<RootCoords> inversion_set(const CartanData& cd, const WeylElement& w) {
  std::unordered_set<IntVector, WeightHash> positive(cd.positive_root_weights.begin(),
                                                    cd.positive_root_weights.end());
  std::vector<RootCoords> out;
  for (std::size_t k = 0; k < cd.positive_roots.size(); ++k) {
    const IntVector image = w.action * cd.positive_root_weights[k];
    if (!positive.contains(image)) out.push_back(cd.positive_roots[k]);
  }
  return out;
}

}  // namespace polysum
