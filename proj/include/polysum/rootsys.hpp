#ifndef POLYSUM_ROOTSYS_HPP
#define POLYSUM_ROOTSYS_HPP

#include "polysum/core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace polysum {

/// A finite simple Lie algebra X_r.
struct AlgebraId {
  char series = 'A';
  int rank = 1;

  [[nodiscard]] std::string name() const { return std::string(1, series) + std::to_string(rank); }
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Throws InvalidArgument naming the violated constraint.
void validate(const AlgebraId& id);

/// Parses "A2", "g2", "B3". Case-insensitive series letter, decimal rank.
AlgebraId parse_algebra(std::string_view text);

/// Static data of a root system.
///
/// Conventions: row i of `cartan` is the simple root alpha_i written in Dynkin labels,
/// so cartan(i, j) = <alpha_i, alpha_j^vee>. Numbering is Bourbaki except for G2, where
/// alpha_2 is the short root. For C2, alpha_1 is short (Bourbaki agrees).
///
///   A2: [ 2 -1]   C2: [ 2 -1]   G2: [ 2 -3]
///       [-1  2]       [-2  2]       [-1  2]
struct CartanData {
  AlgebraId id;
  IntMatrix cartan;
  /// d_i with diag(d) * cartan symmetric; smallest positive integers.
  IntVector symmetrizers;
  /// (Lambda^i, Lambda^j), long roots normalized to squared length 2.
  RationalMatrix qform;
  /// Sorted by height, then descending lexicographic on coefficients.
  std::vector<RootCoords> positive_roots;
  /// Parallel to positive_roots.
  std::vector<Weight> positive_root_weights;
  std::vector<Weight> simple_root_weights;
  Weight rho;
  RootCoords theta;
  Weight theta_weight;
  IntVector comarks;
  Int weyl_order = 1;
  Int center_order = 1;

  /// Squared lengths (alpha_i, alpha_i).
  RationalVector root_norms;
  /// Inverse of cartan^T: maps Dynkin labels to simple-root coordinates.
  RationalMatrix weight_to_root;
  /// qform scaled by the smallest integer that clears its denominators.
  IntMatrix scaled_qform;
  Int qform_scale = 1;
  /// Matrix of -w0 on Dynkin labels.
  IntMatrix conjugation;
  /// Fractional root coordinates of one representative per congruence class,
  /// class 0 first, then in order of discovery from the fundamental weights.
  std::vector<RationalVector> class_residues;
  /// Parallel to class_residues: 0 for class 0, otherwise a sum of fundamental weights
  /// (a single one whenever that reaches the class first).
  std::vector<Weight> class_reps;

  [[nodiscard]] int rank() const { return id.rank; }
  [[nodiscard]] int num_positive_roots() const { return int(positive_roots.size()); }
};

CartanData build(const AlgebraId& id);

/// Shared immutable instance per algebra.
const CartanData& cartan_data(const AlgebraId& id);

struct RationalRootCoords {
  RationalVector coords;
  bool integral = false;
};

void check_rank(const CartanData& cd, const IntVector& w, std::string_view what = "weight");

RationalRootCoords to_root_coords(const CartanData& cd, const Weight& w);

/// Weight form of a root-lattice element.
Weight to_weight(const CartanData& cd, const RootCoords& beta);

/// Integral root coordinates of w; throws ConsistencyError if w is not in Q.
RootCoords root_coords_of(const CartanData& cd, const Weight& w);

/// Index in [0, center_order) of the class of w in P/Q.
int congruence_class(const CartanData& cd, const Weight& w);

/// The stored representative of a class; throws InvalidArgument when out of range.
Weight class_representative(const CartanData& cd, int index);

/// sum_i comarks_i * labels_i.
Int level(const CartanData& cd, const IntVector& w);

Rational inner(const CartanData& cd, const Weight& u, const Weight& v);

/// -w0(w). For A_r this reverses the labels.
Weight charge_conjugate(const CartanData& cd, const Weight& w);

/// True when lam - mu is a non-negative integer combination of simple roots.
bool dominates(const CartanData& cd, const Weight& lam, const Weight& mu);

/// Every dominant mu <= lam, sorted by the height of lam - mu (then lexicographic).
/// lam must be dominant.
std::vector<Weight> dominant_weights_below(const CartanData& cd, const Weight& lam);

/// Ascending level, then ascending lexicographic.
struct LevelLexLess {
  const CartanData* cd;
  bool operator()(const Weight& a, const Weight& b) const {
    const Int la = level(*cd, a), lb = level(*cd, b);
    if (la != lb) return la < lb;
    return a < b;
  }
};

/// Ascending level, then descending first label, then descending later labels.
/// Reproduces the conventional G2 table order.
struct MatrixOrderLess {
  const CartanData* cd;
  bool operator()(const Weight& a, const Weight& b) const {
    const Int la = level(*cd, a), lb = level(*cd, b);
    if (la != lb) return la < lb;
    return b < a;
  }
};

}  // namespace polysum

#endif  // POLYSUM_ROOTSYS_HPP
