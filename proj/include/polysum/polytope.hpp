#ifndef POLYSUM_POLYTOPE_HPP
#define POLYSUM_POLYTOPE_HPP

#include "polysum/charmult.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace polysum {

/// Lattice points of the weight polytope Pt_lam in lam + Q, sorted by level then
/// lexicographic. Built as the union of the orbits of the dominant weights below lam.
std::vector<Weight> points(const CartanData& cd, const Weight& lam);

/// mu in lam + Q with dominant representative <= lam.
bool in_weight_polytope(const CartanData& cd, const Weight& lam, const Weight& mu);

/// Whether count_closed_form has a polynomial for this algebra (A2, C2, G2, A3).
bool has_closed_form(const AlgebraId& id);

/// Point count of Pt_lam from the published polynomials. Throws InvalidArgument for
/// other algebras.
Int count_closed_form(const CartanData& cd, const Weight& lam);

/// B_lam = sum_w e^{w lam} prod_{alpha simple} (1 - e^{-w alpha})^{-1}, over the full group.
template <typename Scalar>
Scalar brion_numeric(const CartanData& cd, const Weight& lam, const EvaluationPoint<Scalar>& c,
                     const GenericityPolicy& policy = {}) {
  require_dominant(cd, lam);
  const Weight exps[] = {lam};
  check_generic(cd, c, std::span<const Weight>(exps), policy);
  Scalar sum(0);
  for (const WeylElement& w : weyl_group(cd)) {
    Scalar term = std::exp(pairing(c, w(lam)));
    for (const Weight& alpha : cd.simple_root_weights) term /= Scalar(1) - std::exp(-pairing(c, w(alpha)));
    sum += term;
  }
  return sum;
}

// Generic lattice polytopes with explicitly supplied vertex cones.

using LatticeVector = Eigen::VectorXi;

struct VertexCone {
  LatticeVector apex;
  std::vector<LatticeVector> generators;
};

struct GenericPolytope {
  int dimension = 1;
  std::vector<LatticeVector> vertices;
  std::vector<VertexCone> cones;
};

/// Throws InvalidArgument if a cone is malformed, has dependent generators, or is not
/// unimodular.
void validate(const GenericPolytope& p);

/// sum_v e^{<c,v>} prod_i (1 - e^{<c,u_i>})^{-1}.
template <typename Scalar>
Scalar generic_brion_numeric(const GenericPolytope& p, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c,
                             double pole_tolerance = 1e-3) {
  validate(p);
  if (c.size() != p.dimension) throw InvalidArgument("evaluation point has the wrong dimension");
  Scalar sum(0);
  for (const VertexCone& cone : p.cones) {
    Scalar term = std::exp(c.dot(cone.apex.cast<Scalar>()));
    for (const LatticeVector& u : cone.generators) {
      const Scalar x = c.dot(u.cast<Scalar>());
      if (std::abs(double(x)) < pole_tolerance) throw NearPoleError("near-pole: generator pairing too small");
      term /= Scalar(1) - std::exp(x);
    }
    sum += term;
  }
  return sum;
}

/// sum over the listed lattice points of e^{<c,x>}.
template <typename Scalar>
Scalar lattice_sum(const std::vector<LatticeVector>& pts, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c) {
  Scalar sum(0);
  for (const LatticeVector& x : pts) sum += std::exp(c.dot(x.cast<Scalar>()));
  return sum;
}

/// The interval with vertices (2) and (7).
GenericPolytope interval_example();
std::vector<LatticeVector> interval_example_points();

/// The triangle with vertices (0,0), (1,0), (1,1).
GenericPolytope triangle_example();
std::vector<LatticeVector> triangle_example_points();

}  // namespace polysum

#endif  // POLYSUM_POLYTOPE_HPP
