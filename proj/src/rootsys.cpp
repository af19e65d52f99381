#include "polysum/rootsys.hpp"

#include "polysum/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace polysum {

namespace {

void link(IntMatrix& a, int i, int j, Int aij = -1, Int aji = -1) {
  a(i, j) = aij;
  a(j, i) = aji;
}

IntMatrix cartan_matrix(const AlgebraId& id) {
  const int r = id.rank;
  IntMatrix a = 2 * IntMatrix::Identity(r, r);
  switch (id.series) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case 'B':
      // alpha_r short
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 2, r - 1, -2, -1);
      break;
    case 'C':
      // alpha_r long
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 2, r - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 3, r - 1);
      break;
    case 'E':
      // 1-3-4-5-6-..., 2 attached to 4
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2, -2, -1);
      link(a, 2, 3);
      break;
    case 'G':
      // alpha_2 short
      link(a, 0, 1, -3, -1);
      break;
  }
  return a;
}

Rational floor_of(const Rational& q) {
  Int n = q.numerator(), d = q.denominator();
  Int f = n / d;
  if (n % d != 0 && n < 0) --f;
  return Rational(f);
}

RationalVector fractional(const RationalVector& v) {
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) - floor_of(v(i));
  return out;
}

Int lcm_of_denominators(const RationalMatrix& m) {
  Int l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = std::lcm(l, m(i, j).denominator());
  return l;
}

std::vector<RootCoords> generate_positive_roots(const IntMatrix& a) {
  const int r = int(a.rows());
  std::set<RootCoords> known;
  std::vector<std::vector<RootCoords>> by_height(1);
  for (int i = 0; i < r; ++i) {
    RootCoords s(r);
    s(i) = 1;
    known.insert(s);
    by_height[0].push_back(s);
  }
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    std::vector<RootCoords> next;
    for (const RootCoords& beta : by_height[h]) {
      const IntVector labels = a.transpose() * beta;
      for (int i = 0; i < r; ++i) {
        if (beta.sum() == 1 && beta(i) == 1) continue;
        // alpha_i-string through beta: q - p = -<beta, alpha_i^vee>
        Int p = 0;
        RootCoords down = beta;
        while (true) {
          down(i) -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        const Int q = p - labels(i);
        if (q <= 0) continue;
        RootCoords up = beta;
        up(i) += 1;
        if (known.insert(up).second) next.push_back(up);
      }
    }
    if (next.empty()) break;
    by_height.push_back(std::move(next));
  }
  std::vector<RootCoords> roots;
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), [](const RootCoords& x, const RootCoords& y) { return y < x; });
    roots.insert(roots.end(), level.begin(), level.end());
  }
  return roots;
}

}  // namespace

void validate(const AlgebraId& id) {
  const int r = id.rank;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("invalid algebra " + id.name() + ": " + why);
  };
  switch (id.series) {
    case 'A':
      if (r < 1) fail("A requires rank >= 1");
      break;
    case 'B':
      if (r < 2) fail("B requires rank >= 2");
      break;
    case 'C':
      if (r < 2) fail("C requires rank >= 2");
      break;
    case 'D':
      if (r < 3) fail("D requires rank >= 3");
      break;
    case 'E':
      if (r < 6 || r > 8) fail("E requires rank 6, 7 or 8");
      break;
    case 'F':
      if (r != 4) fail("F requires rank 4");
      break;
    case 'G':
      if (r != 2) fail("G requires rank 2");
      break;
    default:
      fail("series must be one of A,B,C,D,E,F,G");
  }
  if (r > kMaxRank) fail("ranks above " + std::to_string(kMaxRank) + " are not supported");
}

AlgebraId parse_algebra(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("unknown algebra '" + std::string(text) + "'");
  AlgebraId id;
  id.series = char(std::toupper(static_cast<unsigned char>(text.front())));
  const std::string_view digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("unknown algebra '" + std::string(text) + "'");
  }
  validate(id);
  return id;
}

CartanData build(const AlgebraId& id) {
  validate(id);
  const int r = id.rank;
  CartanData cd;
  cd.id = id;
  cd.cartan = cartan_matrix(id);

  // Symmetrizers: d_i a_ij = d_j a_ji, propagated along the (connected) Dynkin graph.
  RationalVector d = RationalVector::Zero(r);
  d(0) = 1;
  for (int pass = 0; pass < r; ++pass) {
    for (int i = 0; i < r; ++i) {
      if (d(i) == Rational(0)) continue;
      for (int j = 0; j < r; ++j) {
        if (i != j && cd.cartan(i, j) != 0 && d(j) == Rational(0)) {
          d(j) = d(i) * Rational(cd.cartan(i, j), cd.cartan(j, i));
        }
      }
    }
  }
  Int den = 1;
  for (int i = 0; i < r; ++i) den = std::lcm(den, d(i).denominator());
  cd.symmetrizers = IntVector(r);
  Int g = 0;
  for (int i = 0; i < r; ++i) {
    cd.symmetrizers(i) = (d(i) * den).numerator();
    g = std::gcd(g, cd.symmetrizers(i));
  }
  cd.symmetrizers /= g;
  const Int dmin = cd.symmetrizers.minCoeff();
  cd.root_norms = RationalVector(r);
  for (int i = 0; i < r; ++i) cd.root_norms(i) = Rational(2 * dmin, cd.symmetrizers(i));

  const auto inv = exact_inverse(cd.cartan);
  if (!inv) throw ConsistencyError("singular Cartan matrix for " + id.name());
  cd.weight_to_root = inv->transpose();
  cd.center_order = exact_determinant(cd.cartan);

  RationalMatrix half_norms = RationalMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) half_norms(i, i) = cd.root_norms(i) / Rational(2);
  cd.qform = half_norms * cd.weight_to_root;
  cd.qform_scale = lcm_of_denominators(cd.qform);
  cd.scaled_qform = IntMatrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cd.scaled_qform(i, j) = (cd.qform(i, j) * cd.qform_scale).numerator();

  cd.positive_roots = generate_positive_roots(cd.cartan);
  for (const RootCoords& beta : cd.positive_roots) cd.positive_root_weights.push_back(to_weight(cd, beta));
  for (int i = 0; i < r; ++i) cd.simple_root_weights.push_back(Weight(cd.cartan.row(i).transpose()));
  cd.rho = Weight(IntVector::Ones(r));
  cd.theta = cd.positive_roots.back();
  cd.theta_weight = cd.positive_root_weights.back();

  cd.comarks = IntVector(r);
  Int marks_product = 1;
  for (int i = 0; i < r; ++i) {
    const Rational c = Rational(cd.theta(i)) * cd.root_norms(i) / Rational(2);
    if (c.denominator() != 1) throw ConsistencyError("non-integral comark for " + id.name());
    cd.comarks(i) = c.numerator();
    marks_product *= cd.theta(i);
  }
  Int factorial = 1;
  for (int k = 2; k <= r; ++k) factorial *= k;
  cd.weyl_order = factorial * cd.center_order * marks_product;

  // w0 is the unique element sending -rho to rho.
  IntMatrix w0 = IntMatrix::Identity(r, r);
  IntVector mu = -cd.rho;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < r; ++i) {
      if (mu(i) < 0) {
        IntMatrix reflection = IntMatrix::Identity(r, r);
        reflection.col(i) -= cd.simple_root_weights[std::size_t(i)];
        mu = reflection * mu;
        w0 = reflection * w0;
        moved = true;
      }
    }
  }
  cd.conjugation = -w0;

  cd.class_residues.push_back(RationalVector::Zero(r));
  cd.class_reps.push_back(Weight(r));
  for (std::size_t k = 0; k < cd.class_residues.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      const RationalVector next = fractional(cd.class_residues[k] + cd.weight_to_root.col(i));
      if (std::find(cd.class_residues.begin(), cd.class_residues.end(), next) == cd.class_residues.end()) {
        cd.class_residues.push_back(next);
        Weight rep = cd.class_reps[k];
        rep(i) += 1;
        cd.class_reps.push_back(rep);
      }
    }
  }
  if (Int(cd.class_residues.size()) != cd.center_order) {
    throw ConsistencyError("congruence class count mismatch for " + id.name());
  }
  return cd;
}

const CartanData& cartan_data(const AlgebraId& id) {
  static std::mutex mutex;
  static std::map<AlgebraId, std::unique_ptr<const CartanData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(id); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const CartanData>(build(id));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(id, std::move(built));
  return *it->second;
}

void check_rank(const CartanData& cd, const IntVector& w, std::string_view what) {
  if (w.size() != cd.rank()) {
    throw InvalidArgument(std::string(what) + " " + format_tuple(w) + " has " + std::to_string(w.size()) +
                          " labels but " + cd.id.name() + " has rank " + std::to_string(cd.rank()));
  }
}

RationalRootCoords to_root_coords(const CartanData& cd, const Weight& w) {
  check_rank(cd, w);
  RationalRootCoords out;
  out.coords = cd.weight_to_root * w.cast<Rational>();
  out.integral = is_integral(out.coords);
  return out;
}

Weight to_weight(const CartanData& cd, const RootCoords& beta) {
  check_rank(cd, beta, "root coordinates");
  return Weight(cd.cartan.transpose() * beta);
}

RootCoords root_coords_of(const CartanData& cd, const Weight& w) {
  const RationalRootCoords rc = to_root_coords(cd, w);
  if (!rc.integral) throw ConsistencyError("weight " + format_tuple(w) + " is not in the root lattice");
  RootCoords out(cd.rank());
  for (int i = 0; i < cd.rank(); ++i) out(i) = rc.coords(i).numerator();
  return out;
}

int congruence_class(const CartanData& cd, const Weight& w) {
  const RationalVector residue = fractional(to_root_coords(cd, w).coords);
  const auto it = std::find(cd.class_residues.begin(), cd.class_residues.end(), residue);
  if (it == cd.class_residues.end()) throw ConsistencyError("unclassified weight " + format_tuple(w));
  return int(it - cd.class_residues.begin());
}

Weight class_representative(const CartanData& cd, int index) {
  if (index < 0 || index >= int(cd.class_reps.size())) {
    throw InvalidArgument("class index " + std::to_string(index) + " out of range for " + cd.id.name() +
                          " (" + std::to_string(cd.class_reps.size()) + " classes)");
  }
  return cd.class_reps[std::size_t(index)];
}

Int level(const CartanData& cd, const IntVector& w) {
  check_rank(cd, w);
  return cd.comarks.dot(w);
}

Rational inner(const CartanData& cd, const Weight& u, const Weight& v) {
  check_rank(cd, u);
  check_rank(cd, v);
  return Rational(u.dot(cd.scaled_qform * v), cd.qform_scale);
}

Weight charge_conjugate(const CartanData& cd, const Weight& w) {
  check_rank(cd, w);
  return Weight(cd.conjugation * w);
}

bool dominates(const CartanData& cd, const Weight& lam, const Weight& mu) {
  const RationalRootCoords diff = to_root_coords(cd, Weight(lam - mu));
  return diff.integral && (diff.coords.array() >= Rational(0)).all();
}

std::vector<Weight> dominant_weights_below(const CartanData& cd, const Weight& lam) {
  check_rank(cd, lam);
  if (!is_dominant(lam)) throw InvalidArgument("weight " + format_tuple(lam) + " is not dominant");
  const int r = cd.rank();
  // Dominant mu have non-negative root coordinates, so lam - mu lies in a box.
  const RationalVector top = to_root_coords(cd, lam).coords;
  IntVector bound(r);
  for (int i = 0; i < r; ++i) bound(i) = floor_of(top(i)).numerator();
  std::vector<std::pair<Int, Weight>> found;
  IntVector steps = IntVector::Zero(r);
  while (true) {
    const Weight mu = lam - cd.cartan.transpose() * steps;
    if (is_dominant(mu)) found.emplace_back(steps.sum(), mu);
    int i = 0;
    for (; i < r; ++i) {
      if (++steps(i) <= bound(i)) break;
      steps(i) = 0;
    }
    if (i == r) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [depth, mu] : found) out.push_back(std::move(mu));
  return out;
}

}  // namespace polysum
