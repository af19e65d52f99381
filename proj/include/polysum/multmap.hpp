#ifndef POLYSUM_MULTMAP_HPP
#define POLYSUM_MULTMAP_HPP

#include "polysum/core.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace polysum {

/// A formal sum sum_mu m_mu e^mu with integer coefficients. Zero coefficients are never stored.
class MultMap {
 public:
  using Storage = std::map<Weight, Int>;
  using const_iterator = Storage::const_iterator;

  MultMap() = default;

  /// Indicator sum: coefficient 1 on every weight of the range.
  template <typename Range>
  static MultMap indicator(const Range& weights) {
    MultMap out;
    for (const Weight& w : weights) out.add(w, 1);
    return out;
  }

  void add(const Weight& mu, Int m) {
    if (m == 0) return;
    auto [it, inserted] = entries_.try_emplace(mu, m);
    if (!inserted && (it->second += m) == 0) entries_.erase(it);
  }

  /// this += scale * other.
  MultMap& add_scaled(const MultMap& other, Int scale) {
    for (const auto& [mu, m] : other) add(mu, scale * m);
    return *this;
  }

  [[nodiscard]] Int operator[](const Weight& mu) const {
    const auto it = entries_.find(mu);
    return it == entries_.end() ? 0 : it->second;
  }
  [[nodiscard]] bool contains(const Weight& mu) const { return entries_.contains(mu); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] const_iterator begin() const { return entries_.begin(); }
  [[nodiscard]] const_iterator end() const { return entries_.end(); }

  /// Sum of all coefficients; the value of the formal sum at c = 0.
  [[nodiscard]] Int total() const {
    Int t = 0;
    for (const auto& [mu, m] : entries_) t += m;
    return t;
  }

  /// sum_mu m_mu exp(<c, mu>), accumulated in map order.
  template <typename Scalar, typename Derived>
  [[nodiscard]] Scalar evaluate(const Eigen::MatrixBase<Derived>& c) const {
    Scalar sum(0);
    for (const auto& [mu, m] : entries_) {
      sum += Scalar(m) * std::exp(c.dot(mu.template cast<Scalar>()));
    }
    return sum;
  }

  friend bool operator==(const MultMap&, const MultMap&) = default;

 private:
  Storage entries_;
};

}  // namespace polysum

#endif  // POLYSUM_MULTMAP_HPP
