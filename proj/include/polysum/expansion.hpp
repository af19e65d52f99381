#ifndef POLYSUM_EXPANSION_HPP
#define POLYSUM_EXPANSION_HPP

#include "polysum/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polysum {

using DenseIntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Signed coefficients of prod_{gamma in R_> \ S} (1 - e^{-gamma}) = sum_beta F(beta) e^{-beta}.
struct PartitionF {
  std::map<RootCoords, Int> entries;

  [[nodiscard]] Int operator()(const RootCoords& beta) const {
    const auto it = entries.find(beta);
    return it == entries.end() ? 0 : it->second;
  }
};

/// Largest |R_> \ S| accepted by partition_f.
inline constexpr int kMaxNonSimpleRoots = 24;

PartitionF partition_f(const CartanData& cd);

struct SignedTerm {
  Int coeff;
  Weight weight;
  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// B_lam = sum_beta F(beta) ch_{lam - beta}, before any shifted-action reduction.
/// Terms follow the order of F's keys.
std::vector<SignedTerm> b_expand(const CartanData& cd, const Weight& lam);

/// Exact B_lam in the group algebra.
MultMap brion_multiset(const CartanData& cd, const Weight& lam);

/// sum_w det w F(lam - w.mu). Zero when lam and mu lie in different classes.
Int a_inverse(const CartanData& cd, const Weight& lam, const Weight& mu);

/// Row lam of A^{-1} obtained by reducing b_expand through shifted_reduce.
std::map<Weight, Int> a_inverse_row_by_reduction(const CartanData& cd, const Weight& lam);

enum class MatrixKind { A, AInverse };

struct ExpansionMatrix {
  std::vector<Weight> order;
  DenseIntMatrix rows;
  MatrixKind kind = MatrixKind::A;
  /// Weights indexing the rows when they differ from `order` (single rows).
  std::vector<Weight> row_order;

  [[nodiscard]] Int at(const Weight& lam, const Weight& mu) const;
};

/// Dominant weights of the given class with level <= max_level, in the default
/// matrix order (ascending level, then descending labels).
std::vector<Weight> default_order(const CartanData& cd, Int max_level, int class_index);

/// Every dominant weight with level <= max_level, all classes, default matrix order.
std::vector<Weight> dominant_weights_up_to_level(const CartanData& cd, Int max_level);

/// Dominant weights <= some member of `order` that are absent from it.
std::vector<Weight> missing_from_order(const CartanData& cd, const std::vector<Weight>& order);

ExpansionMatrix a_inverse_matrix(const CartanData& cd, const std::vector<Weight>& order);

/// Inverse of a_inverse_matrix on the same order. Throws InvalidArgument listing
/// the missing weights if the order is not downward closed.
ExpansionMatrix a_matrix(const CartanData& cd, const std::vector<Weight>& order);

/// Row lam of A over the dominant weights below lam, in default matrix order.
ExpansionMatrix a_row(const CartanData& cd, const Weight& lam);

/// The weights mu with A_{lam,mu} = 1 predicted by the closed C2 patterns; every
/// other entry of the row is 0.
std::vector<Weight> c2_patterns(const CartanData& cd, const Weight& lam);

struct CountEntry {
  Weight lambda;
  Int dim = 0;
  /// Total of brion_multiset(lambda).
  Int brion_total = 0;
  Int point_count = 0;
  std::optional<Int> closed_form;
  /// sum_sigma A_{lambda,sigma} b*_sigma.
  Int dim_from_expansion = 0;
  /// sum_mu A^{-1}_{lambda,mu} d_mu.
  Int brion_from_expansion = 0;

  [[nodiscard]] bool identities_hold() const {
    return dim_from_expansion == dim && brion_from_expansion == brion_total;
  }
  [[nodiscard]] bool counts_agree() const {
    return brion_total == point_count && (!closed_form || *closed_form == point_count);
  }
};

struct CountReport {
  AlgebraId algebra;
  Int max_level = 0;
  std::vector<CountEntry> entries;

  [[nodiscard]] bool identities_hold() const;
  [[nodiscard]] std::vector<const CountEntry*> count_mismatches() const;
};

CountReport verify_counts(const CartanData& cd, Int max_level);

struct NegativeEntry {
  Weight lambda;
  Weight mu;
  Int value;
};

struct PointDiscrepancy {
  Weight mu;
  Int brion = 0;
  Int indicator = 0;
};

struct PolytopeMismatch {
  Weight lambda;
  Int brion_total = 0;
  Int point_count = 0;
  std::vector<PointDiscrepancy> differences;
};

struct ConjectureReport {
  AlgebraId algebra;
  Int max_level = 0;
  std::size_t weights_checked = 0;
  std::vector<NegativeEntry> negative_entries;
  std::vector<PolytopeMismatch> polytope_mismatches;
};

/// brion_multiset(lam) against the indicator of points(lam); empty when equal.
std::optional<PolytopeMismatch> compare_with_polytope(const CartanData& cd, const Weight& lam);

ConjectureReport verify_conjectures(const CartanData& cd, Int max_level);

}  // namespace polysum

#endif  // POLYSUM_EXPANSION_HPP
