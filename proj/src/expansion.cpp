#include "polysum/expansion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace polysum {

PartitionF partition_f(const CartanData& cd) {
  const int r = cd.rank();
  std::vector<RootCoords> nonsimple;
  for (const RootCoords& beta : cd.positive_roots) {
    if (beta.sum() > 1) nonsimple.push_back(beta);
  }
  if (int(nonsimple.size()) > kMaxNonSimpleRoots) {
    throw InvalidArgument("partition function for " + cd.id.name() + " needs 2^" +
                          std::to_string(nonsimple.size()) + " subsets; the limit is 2^" +
                          std::to_string(kMaxNonSimpleRoots));
  }
  PartitionF f;
  const std::uint64_t subsets = std::uint64_t(1) << nonsimple.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    RootCoords sum(r);
    Int sign = 1;
    for (std::size_t k = 0; k < nonsimple.size(); ++k) {
      if (mask & (std::uint64_t(1) << k)) {
        sum += nonsimple[k];
        sign = -sign;
      }
    }
    auto [it, inserted] = f.entries.try_emplace(sum, sign);
    if (!inserted && (it->second += sign) == 0) f.entries.erase(it);
  }
  return f;
}

namespace {

const PartitionF& cached_partition_f(const CartanData& cd) {
  static std::mutex mutex;
  static std::map<AlgebraId, std::unique_ptr<const PartitionF>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(cd.id); it != cache.end()) return *it->second;
  }
  auto f = std::make_unique<const PartitionF>(partition_f(cd));
  std::lock_guard lock(mutex);
  return *cache.emplace(cd.id, std::move(f)).first->second;
}

}  // namespace

std::vector<SignedTerm> b_expand(const CartanData& cd, const Weight& lam) {
  require_dominant(cd, lam);
  std::vector<SignedTerm> terms;
  for (const auto& [beta, coeff] : cached_partition_f(cd).entries) {
    terms.push_back(SignedTerm{coeff, Weight(lam - to_weight(cd, beta))});
  }
  return terms;
}

MultMap brion_multiset(const CartanData& cd, const Weight& lam) {
  MultMap out;
  for (const auto& [nu, coeff] : a_inverse_row_by_reduction(cd, lam)) {
    out.add_scaled(weight_system(cd, nu), coeff);
  }
  return out;
}

std::map<Weight, Int> a_inverse_row_by_reduction(const CartanData& cd, const Weight& lam) {
  std::map<Weight, Int> row;
  for (const SignedTerm& term : b_expand(cd, lam)) {
    const auto reduced = shifted_reduce(cd, term.weight);
    if (!reduced) continue;
    Int& slot = row[reduced->weight];
    slot += reduced->sign * term.coeff;
    if (slot == 0) row.erase(reduced->weight);
  }
  return row;
}

Int a_inverse(const CartanData& cd, const Weight& lam, const Weight& mu) {
  require_dominant(cd, lam);
  require_dominant(cd, mu, "weight");
  if (congruence_class(cd, lam) != congruence_class(cd, mu)) return 0;
  const PartitionF& f = cached_partition_f(cd);
  Int sum = 0;
  for (const WeylElement& w : weyl_group(cd)) {
    const RootCoords beta = root_coords_of(cd, Weight(lam - shifted_action(cd, w, mu)));
    if ((beta.array() < 0).any()) continue;
    sum += w.det * f(beta);
  }
  return sum;
}

Int ExpansionMatrix::at(const Weight& lam, const Weight& mu) const {
  const std::vector<Weight>& labels = row_order.empty() ? order : row_order;
  const auto i = std::find(labels.begin(), labels.end(), lam);
  const auto j = std::find(order.begin(), order.end(), mu);
  if (i == labels.end() || j == order.end()) throw InvalidArgument("weight not in matrix order");
  return rows(i - labels.begin(), j - order.begin());
}

std::vector<Weight> dominant_weights_up_to_level(const CartanData& cd, Int max_level) {
  const int r = cd.rank();
  std::vector<Weight> out;
  if (max_level < 0) return out;
  Weight w(r);
  while (true) {
    if (level(cd, w) <= max_level) out.push_back(w);
    int i = 0;
    for (; i < r; ++i) {
      if (++w(i) * cd.comarks(i) <= max_level) break;
      w(i) = 0;
    }
    if (i == r) break;
  }
  std::sort(out.begin(), out.end(), MatrixOrderLess{&cd});
  return out;
}

std::vector<Weight> default_order(const CartanData& cd, Int max_level, int class_index) {
  class_representative(cd, class_index);  // range check
  std::vector<Weight> out;
  for (const Weight& w : dominant_weights_up_to_level(cd, max_level)) {
    if (congruence_class(cd, w) == class_index) out.push_back(w);
  }
  return out;
}

std::vector<Weight> missing_from_order(const CartanData& cd, const std::vector<Weight>& order) {
  const std::set<Weight> present(order.begin(), order.end());
  std::set<Weight> missing;
  for (const Weight& lam : order) {
    require_dominant(cd, lam, "order weight");
    for (const Weight& mu : dominant_weights_below(cd, lam)) {
      if (!present.contains(mu)) missing.insert(mu);
    }
  }
  std::vector<Weight> out(missing.begin(), missing.end());
  std::sort(out.begin(), out.end(), MatrixOrderLess{&cd});
  return out;
}

ExpansionMatrix a_inverse_matrix(const CartanData& cd, const std::vector<Weight>& order) {
  const Eigen::Index n = Eigen::Index(order.size());
  ExpansionMatrix m{order, DenseIntMatrix::Zero(n, n), MatrixKind::AInverse, {}};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || dominates(cd, order[std::size_t(i)], order[std::size_t(j)])) {
        m.rows(i, j) = a_inverse(cd, order[std::size_t(i)], order[std::size_t(j)]);
      }
    }
  }
  return m;
}

ExpansionMatrix a_matrix(const CartanData& cd, const std::vector<Weight>& order) {
  {
    std::set<Weight> unique(order.begin(), order.end());
    if (unique.size() != order.size()) throw InvalidArgument("matrix order lists a weight twice");
  }
  if (const auto missing = missing_from_order(cd, order); !missing.empty()) {
    std::string list;
    for (const Weight& w : missing) list += (list.empty() ? "" : " ") + format_tuple(w);
    throw InvalidArgument("order is not closed downward under dominance; missing " + list);
  }
  const ExpansionMatrix inv = a_inverse_matrix(cd, order);
  const Eigen::Index n = inv.rows.rows();

  // Ascending level is a linear extension of dominance, so the permuted matrix is
  // unit lower triangular.
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Eigen::Index a, Eigen::Index b) {
    return level(cd, order[std::size_t(a)]) < level(cd, order[std::size_t(b)]);
  });
  DenseIntMatrix sorted(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) sorted(i, j) = inv.rows(perm[std::size_t(i)], perm[std::size_t(j)]);
  if (!sorted.diagonal().isOnes() || !sorted.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().isZero()) {
    throw ConsistencyError("A^{-1} is not unit triangular with respect to dominance");
  }
  const DenseIntMatrix sorted_a =
      sorted.triangularView<Eigen::UnitLower>().solve(DenseIntMatrix::Identity(n, n));

  ExpansionMatrix a{order, DenseIntMatrix::Zero(n, n), MatrixKind::A, {}};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a.rows(perm[std::size_t(i)], perm[std::size_t(j)]) = sorted_a(i, j);
  if (!(a.rows * inv.rows).isIdentity()) throw ConsistencyError("A * A^{-1} is not the identity");
  return a;
}

ExpansionMatrix a_row(const CartanData& cd, const Weight& lam) {
  require_dominant(cd, lam);
  std::vector<Weight> order = dominant_weights_below(cd, lam);
  std::sort(order.begin(), order.end(), MatrixOrderLess{&cd});
  ExpansionMatrix full = a_matrix(cd, order);
  const Eigen::Index row = std::find(order.begin(), order.end(), lam) - order.begin();
  return ExpansionMatrix{order, full.rows.row(row), MatrixKind::A, {lam}};
}

std::vector<Weight> c2_patterns(const CartanData& cd, const Weight& lam) {
  if (cd.id.series != 'C' || cd.rank() != 2) throw InvalidArgument("c2_patterns requires C2, got " + cd.id.name());
  require_dominant(cd, lam);
  const Int l1 = lam(0), l2 = lam(1);
  std::vector<Weight> out;
  // Rows lam - 2j Lambda^1 while the first label stays >= 1, each stepped down by Lambda^2.
  for (Int first = l1; first >= 1; first -= 2) {
    for (Int second = l2; second >= 0; --second) out.push_back(Weight{first, second});
  }
  // Even first label: tail ch_{l2 Lambda^2} = B_{l2} + B_{l2 - 2} + ...
  if (l1 % 2 == 0) {
    for (Int second = l2; second >= 0; second -= 2) out.push_back(Weight{0, second});
  }
  return out;
}

bool CountReport::identities_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const CountEntry& e) { return e.identities_hold(); });
}

std::vector<const CountEntry*> CountReport::count_mismatches() const {
  std::vector<const CountEntry*> out;
  for (const CountEntry& e : entries)
    if (!e.counts_agree()) out.push_back(&e);
  return out;
}

CountReport verify_counts(const CartanData& cd, Int max_level) {
  CountReport report{cd.id, max_level, {}};
  for (int k = 0; k < int(cd.center_order); ++k) {
    const std::vector<Weight> order = default_order(cd, max_level, k);
    if (order.empty()) continue;
    const ExpansionMatrix a = a_matrix(cd, order);
    const ExpansionMatrix inv = a_inverse_matrix(cd, order);
    const Eigen::Index n = Eigen::Index(order.size());
    Eigen::Matrix<Int, Eigen::Dynamic, 1> dims(n), brion(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      dims(i) = dim(cd, order[std::size_t(i)]);
      brion(i) = brion_multiset(cd, order[std::size_t(i)]).total();
    }
    const Eigen::Matrix<Int, Eigen::Dynamic, 1> dims_from = a.rows * brion;
    const Eigen::Matrix<Int, Eigen::Dynamic, 1> brion_from = inv.rows * dims;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Weight& lam = order[std::size_t(i)];
      CountEntry e;
      e.lambda = lam;
      e.dim = dims(i);
      e.brion_total = brion(i);
      e.point_count = Int(points(cd, lam).size());
      if (has_closed_form(cd.id)) e.closed_form = count_closed_form(cd, lam);
      e.dim_from_expansion = dims_from(i);
      e.brion_from_expansion = brion_from(i);
      report.entries.push_back(std::move(e));
    }
  }
  std::stable_sort(report.entries.begin(), report.entries.end(), [&](const CountEntry& x, const CountEntry& y) {
    return MatrixOrderLess{&cd}(x.lambda, y.lambda);
  });
  return report;
}

std::optional<PolytopeMismatch> compare_with_polytope(const CartanData& cd, const Weight& lam) {
  const MultMap brion = brion_multiset(cd, lam);
  const std::vector<Weight> pts = points(cd, lam);
  const MultMap indicator = MultMap::indicator(pts);
  if (brion == indicator) return std::nullopt;
  PolytopeMismatch mismatch{lam, brion.total(), Int(pts.size()), {}};
  MultMap diff = brion;
  diff.add_scaled(indicator, -1);
  std::vector<Weight> where;
  for (const auto& [mu, m] : diff) where.push_back(mu);
  std::sort(where.begin(), where.end(), LevelLexLess{&cd});
  for (const Weight& mu : where) mismatch.differences.push_back({mu, brion[mu], indicator[mu]});
  return mismatch;
}

ConjectureReport verify_conjectures(const CartanData& cd, Int max_level) {
  ConjectureReport report{cd.id, max_level, 0, {}, {}};
  for (int k = 0; k < int(cd.center_order); ++k) {
    const std::vector<Weight> order = default_order(cd, max_level, k);
    if (order.empty()) continue;
    const ExpansionMatrix a = a_matrix(cd, order);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        const Int v = a.rows(Eigen::Index(i), Eigen::Index(j));
        if (v < 0) report.negative_entries.push_back({order[i], order[j], v});
      }
    }
  }
  for (const Weight& lam : dominant_weights_up_to_level(cd, max_level)) {
    ++report.weights_checked;
    if (auto mismatch = compare_with_polytope(cd, lam)) report.polytope_mismatches.push_back(std::move(*mismatch));
  }
  return report;
}

}  // namespace polysum
