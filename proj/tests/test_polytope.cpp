#include "doctest.h"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace polysum;

namespace {

const CartanData& alg(const char* name) { return cartan_data(parse_algebra(name)); }

std::set<Weight> as_set(const std::vector<Weight>& ws) { return {ws.begin(), ws.end()}; }

}  // namespace

TEST_CASE("weight polytope points") {
  CHECK(points(alg("A2"), Weight{1, 1}).size() == 7);
  CHECK(points(alg("G2"), Weight{1, 0}).size() == 13);
  CHECK(points(alg("B3"), Weight{0, 0, 0}) == std::vector<Weight>{Weight{0, 0, 0}});
  CHECK_THROWS_AS(points(alg("A2"), Weight{-1, 1}), InvalidArgument);
  CHECK(in_weight_polytope(alg("G2"), Weight{1, 0}, Weight{-1, 3}));
  CHECK_FALSE(in_weight_polytope(alg("G2"), Weight{0, 1}, Weight{1, 0}));
}

TEST_CASE("points agree with the half-space oracle") {
  for (const char* name : {"A2", "C2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(name);
    const CartanData& cd = alg(name);
    for (const Weight& lam : oracle::dominant_up_to_level(cd, 4)) {
      CAPTURE(format_tuple(lam));
      const std::vector<Weight> pts = points(cd, lam);
      CHECK(as_set(pts) == as_set(oracle::polytope_points(cd, lam)));
      CHECK(std::is_sorted(pts.begin(), pts.end(), LevelLexLess{&cd}));
      const std::set<Weight> s = as_set(pts);
      CHECK(s.size() == pts.size());
      for (const Weight& v : orbit(cd, lam)) CHECK(s.contains(v));
      for (const Weight& mu : pts) {
        for (int i = 0; i < cd.rank(); ++i) CHECK(s.contains(reflect(cd, i, mu)));
      }
    }
  }
}

TEST_CASE("points equal the support of the character for simply-laced types") {
  for (const char* name : {"A2", "A3", "D4"}) {
    const CartanData& cd = alg(name);
    for (const Weight& lam : oracle::dominant_up_to_level(cd, 3)) {
      std::set<Weight> support;
      for (const auto& [mu, m] : weight_system(cd, lam)) support.insert(mu);
      CHECK(support == as_set(points(cd, lam)));
    }
  }
}

TEST_CASE("closed-form counts") {
  CHECK(count_closed_form(alg("A2"), Weight{1, 1}) == 7);
  CHECK(count_closed_form(alg("G2"), Weight{0, 3}) == 37);
  CHECK(count_closed_form(alg("G2"), Weight{1, 0}) == 13);
  CHECK(count_closed_form(alg("A3"), Weight{1, 0, 1}) == 13);
  CHECK(count_closed_form(alg("C2"), Weight{1, 1}) == 12);
  CHECK_THROWS_AS(count_closed_form(alg("B3"), Weight{1, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(count_closed_form(alg("A2"), Weight{1, -1}), InvalidArgument);
  CHECK_FALSE(has_closed_form(AlgebraId{'B', 2}));

  for (const char* name : {"A2", "C2", "G2", "A3"}) {
    CAPTURE(name);
    const CartanData& cd = alg(name);
    for (const Weight& lam : oracle::dominant_up_to_level(cd, 6)) {
      CAPTURE(format_tuple(lam));
      CHECK(count_closed_form(cd, lam) == Int(oracle::polytope_points(cd, lam).size()));
    }
  }
}

TEST_CASE("Brion sums over weight polytopes") {
  std::mt19937_64 rng(31);
  const CartanData& a2 = alg("A2");
  const Weight zero{0, 0};
  const Weight zero_exps[] = {a2.rho};
  const auto c0 = sample_generic_point<double>(a2, zero_exps, rng);
  CHECK(std::abs(brion_numeric(a2, zero, c0) - 1.0) < 1e-9);

  for (const auto& [name, lam] : std::vector<std::pair<const char*, Weight>>{
           {"A2", {1, 1}}, {"G2", {1, 0}}, {"A3", {1, 1, 0}}, {"C2", {1, 1}}}) {
    CAPTURE(name);
    const CartanData& cd = alg(name);
    const MultMap indicator = MultMap::indicator(points(cd, lam));
    const Weight exps[] = {lam};
    for (int n = 0; n < 20; ++n) {
      const auto c = sample_generic_point<double>(cd, exps, rng);
      CHECK(relatively_close(brion_numeric(cd, lam, c), indicator.evaluate<double>(c), 1e-9));
    }
  }
}

TEST_CASE("generic polytopes") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  const auto draw = [&](int d) {
    while (true) {
      Eigen::VectorXd c(d);
      for (int i = 0; i < d; ++i) c(i) = coord(rng);
      if ((c.array().abs() > 0.05).all() && std::abs(c.sum()) > 0.05) return c;
    }
  };
  for (int n = 0; n < 20; ++n) {
    const Eigen::VectorXd c1 = draw(1);
    double direct = 0;
    for (int x = 2; x <= 7; ++x) direct += std::exp(c1(0) * x);
    CHECK(relatively_close(generic_brion_numeric(interval_example(), c1), direct, 1e-12));

    const Eigen::VectorXd c2 = draw(2);
    const double tri = std::exp(c2(0) + c2(1)) + std::exp(c2(0)) + 1.0;
    CHECK(relatively_close(generic_brion_numeric(triangle_example(), c2), tri, 1e-12));
  }

  GenericPolytope point;
  point.dimension = 2;
  LatticeVector v(2);
  v << 3, -1;
  point.vertices = {v};
  point.cones = {VertexCone{v, {}}};
  Eigen::VectorXd c(2);
  c << 0.3, 0.7;
  CHECK(relatively_close(generic_brion_numeric(point, c), std::exp(0.2), 1e-12));

  GenericPolytope bad = triangle_example();
  LatticeVector g(2);
  g << 2, 0;
  bad.cones[1].generators[0] = -g;
  CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("unimodular"), InvalidArgument);
  bad = triangle_example();
  bad.cones[0].generators[1] = bad.cones[0].generators[0];
  CHECK_THROWS_WITH_AS(validate(bad), doctest::Contains("dependent"), InvalidArgument);
  bad = triangle_example();
  bad.cones.pop_back();
  CHECK_THROWS_AS(validate(bad), InvalidArgument);

  Eigen::VectorXd pole(1);
  pole << 1e-5;
  CHECK_THROWS_AS(generic_brion_numeric(interval_example(), pole), NearPoleError);
}
