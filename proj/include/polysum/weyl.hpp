#ifndef POLYSUM_WEYL_HPP
#define POLYSUM_WEYL_HPP

#include "polysum/rootsys.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polysum {

/// A Weyl group element acting on Dynkin labels.
struct WeylElement {
  IntMatrix action;
  int det = 1;
  /// Number of positive roots sent to negative roots.
  int length = 0;

  Weight operator()(const Weight& mu) const { return Weight(action * mu); }
};

inline constexpr Int kDefaultWeylBound = 1'000'000;

WeylElement identity_element(const CartanData& cd);

/// Matrix of the simple reflection r_i, i in [0, rank).
IntMatrix reflection_matrix(const CartanData& cd, int i);

/// r_i mu = mu - mu_i alpha_i, i in [0, rank).
Weight reflect(const CartanData& cd, int i, const Weight& mu);

/// All elements, identity first, in breadth-first order from the generators.
/// Throws InvalidArgument when weyl_order exceeds the bound.
std::vector<WeylElement> enumerate(const CartanData& cd, Int bound = kDefaultWeylBound);

/// Cached enumerate(cd) shared across callers.
const std::vector<WeylElement>& weyl_group(const CartanData& cd);

/// The orbit W mu, sorted by level then lexicographic.
std::vector<Weight> orbit(const CartanData& cd, const Weight& mu);

/// The dominant weight in W mu.
Weight dominant_weight(const CartanData& cd, const Weight& mu);

/// Dominant weight in W mu together with an element mapping mu to it.
std::pair<Weight, WeylElement> dominant_representative(const CartanData& cd, const Weight& mu);

/// w.mu = w(mu + rho) - rho.
Weight shifted_action(const CartanData& cd, const WeylElement& w, const Weight& mu);

struct SignedWeight {
  int sign = 1;
  Weight weight;
};

/// Resolves ch_mu = sign * ch_nu with nu dominant, or nullopt when mu + rho lies on a
/// wall and the character vanishes.
std::optional<SignedWeight> shifted_reduce(const CartanData& cd, const Weight& mu);

/// Positive roots sent to negative roots by w, in the order of cd.positive_roots.
std::vector<RootCoords> inversion_set(const CartanData& cd, const WeylElement& w);

}  // namespace polysum

#endif  // POLYSUM_WEYL_HPP
