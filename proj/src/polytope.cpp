#include "polysum/polytope.hpp"

#include "polysum/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polysum {

std::vector<Weight> points(const CartanData& cd, const Weight& lam) {
  require_dominant(cd, lam);
  std::vector<Weight> out;
  for (const Weight& mu : dominant_weights_below(cd, lam)) {
    const std::vector<Weight> o = orbit(cd, mu);
    out.insert(out.end(), o.begin(), o.end());
  }
  std::sort(out.begin(), out.end(), LevelLexLess{&cd});
  return out;
}

bool in_weight_polytope(const CartanData& cd, const Weight& lam, const Weight& mu) {
  require_dominant(cd, lam);
  check_rank(cd, mu);
  return dominates(cd, lam, dominant_weight(cd, mu));
}

bool has_closed_form(const AlgebraId& id) {
  return (id.series == 'A' && (id.rank == 2 || id.rank == 3)) || (id.series == 'C' && id.rank == 2) ||
         (id.series == 'G' && id.rank == 2);
}

Int count_closed_form(const CartanData& cd, const Weight& lam) {
  if (!has_closed_form(cd.id)) {
    throw InvalidArgument("no closed-form point count for " + cd.id.name() + " (available: A2, C2, G2, A3)");
  }
  require_dominant(cd, lam);
  if (cd.id.series == 'A' && cd.rank() == 3) {
    const Rational a(lam(0)), b(lam(1)), c(lam(2));
    // The last cubic term is c^3; the mirror of a^3 under a <-> c.
    const Rational count = Rational(1) + (11 * a + 14 * b + 11 * c) / 6 + 4 * a * b + 3 * a * c + 4 * b * c +
                           a * a + 2 * b * b + c * c +
                           (36 * a * b * c + 12 * a * b * b + 12 * b * b * c + 6 * a * a * b + 6 * b * c * c +
                            9 * a * a * c + 9 * a * c * c + a * a * a + 4 * b * b * b + c * c * c) /
                               6;
    if (count.denominator() != 1) throw ConsistencyError("A3 closed form is not integral");
    return count.numerator();
  }
  const Int l1 = lam(0), l2 = lam(1);
  switch (cd.id.series) {
    case 'A':
      return (l1 * l1 + 4 * l1 * l2 + l2 * l2 + 3 * l1 + 3 * l2 + 2) / 2;
    case 'C':
      return l1 * l1 + 4 * l1 * l2 + 2 * l2 * l2 + 2 * l1 + 2 * l2 + 1;
    default:
      return 9 * l1 * l1 + 12 * l1 * l2 + 3 * l2 * l2 + 3 * l1 + 3 * l2 + 1;
  }
}

namespace {

// gcd of the maximal minors of a d x k matrix with k <= d.
Int minor_gcd(const Eigen::MatrixXi& m) {
  const int d = int(m.rows()), k = int(m.cols());
  if (k == 0) return 1;
  std::vector<int> rows(static_cast<std::size_t>(k));
  std::iota(rows.begin(), rows.end(), 0);
  Int g = 0;
  while (true) {
    Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> sub(k, k);
    for (int i = 0; i < k; ++i) sub.row(i) = m.row(rows[std::size_t(i)]).cast<Int>();
    g = std::gcd(g, exact_determinant(sub));
    int i = k - 1;
    while (i >= 0 && rows[std::size_t(i)] == d - k + i) --i;
    if (i < 0) break;
    ++rows[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) rows[std::size_t(j)] = rows[std::size_t(j - 1)] + 1;
  }
  return g;
}

}  // namespace

void validate(const GenericPolytope& p) {
  if (p.dimension < 1) throw InvalidArgument("polytope dimension must be positive");
  if (p.cones.size() != p.vertices.size()) throw InvalidArgument("one vertex cone per vertex is required");
  for (std::size_t v = 0; v < p.cones.size(); ++v) {
    const VertexCone& cone = p.cones[v];
    if (cone.apex.size() != p.dimension || cone.apex != p.vertices[v]) {
      throw InvalidArgument("cone " + std::to_string(v) + " is not based at its vertex");
    }
    const int k = int(cone.generators.size());
    if (k > p.dimension) throw InvalidArgument("cone " + std::to_string(v) + " has too many generators");
    Eigen::MatrixXi gens(p.dimension, k);
    for (int i = 0; i < k; ++i) {
      if (cone.generators[std::size_t(i)].size() != p.dimension) {
        throw InvalidArgument("cone generator has the wrong dimension");
      }
      gens.col(i) = cone.generators[std::size_t(i)];
    }
    const Int g = minor_gcd(gens);
    if (g == 0) throw InvalidArgument("cone " + std::to_string(v) + " has linearly dependent generators");
    if (g != 1) {
      throw InvalidArgument("cone " + std::to_string(v) + " is not unimodular (index " + std::to_string(g) +
                            "); signed decompositions are not supported");
    }
  }
}

namespace {

LatticeVector vec(std::initializer_list<int> xs) {
  LatticeVector v(Eigen::Index(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

}  // namespace

GenericPolytope interval_example() {
  GenericPolytope p;
  p.dimension = 1;
  p.vertices = {vec({7}), vec({2})};
  p.cones = {VertexCone{vec({7}), {vec({-1})}}, VertexCone{vec({2}), {vec({1})}}};
  return p;
}

std::vector<LatticeVector> interval_example_points() {
  std::vector<LatticeVector> pts;
  for (int x = 7; x >= 2; --x) pts.push_back(vec({x}));
  return pts;
}

GenericPolytope triangle_example() {
  GenericPolytope p;
  p.dimension = 2;
  p.vertices = {vec({1, 1}), vec({1, 0}), vec({0, 0})};
  p.cones = {VertexCone{vec({1, 1}), {vec({-1, -1}), vec({0, -1})}},
             VertexCone{vec({1, 0}), {vec({-1, 0}), vec({0, 1})}},
             VertexCone{vec({0, 0}), {vec({1, 0}), vec({1, 1})}}};
  return p;
}

std::vector<LatticeVector> triangle_example_points() { return {vec({1, 1}), vec({1, 0}), vec({0, 0})}; }

}  // namespace polysum
