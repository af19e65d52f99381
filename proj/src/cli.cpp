#include "polysum/cli.hpp"

#include "polysum/expansion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace polysum::cli {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const IntVector& w) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) a.push_back(w(i));
  return a;
}

template <typename Range>
ordered_json weights_json(const Range& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

const CartanData& algebra_of(const Command& cmd) { return cartan_data(cmd.algebra); }

const Weight& weight_of(const Command& cmd, const CartanData& cd) {
  if (!cmd.weight) throw InvalidArgument("a weight argument is required");
  check_rank(cd, *cmd.weight);
  return *cmd.weight;
}

const Weight& dominant_weight_of(const Command& cmd, const CartanData& cd) {
  const Weight& w = weight_of(cmd, cd);
  if (!is_dominant(w)) throw InvalidArgument("weight " + format_tuple(w) + " is not dominant");
  return w;
}

std::string run_roots(const Command& cmd) {
  const CartanData& cd = algebra_of(cmd);
  const int r = cd.rank();
  if (cmd.json) {
    ordered_json j;
    j["algebra"] = cd.id.name();
    j["rank"] = r;
    ordered_json cartan = ordered_json::array(), qform = ordered_json::array();
    for (int i = 0; i < r; ++i) {
      cartan.push_back(to_json(IntVector(cd.cartan.row(i).transpose())));
      ordered_json row = ordered_json::array();
      for (int k = 0; k < r; ++k) row.push_back(format_rational(cd.qform(i, k)));
      qform.push_back(row);
    }
    j["cartan"] = cartan;
    j["symmetrizers"] = to_json(cd.symmetrizers);
    j["qform"] = qform;
    ordered_json roots = ordered_json::array();
    for (std::size_t k = 0; k < cd.positive_roots.size(); ++k) {
      roots.push_back({{"root", to_json(cd.positive_roots[k])}, {"weight", to_json(cd.positive_root_weights[k])}});
    }
    j["positive_roots"] = roots;
    j["rho"] = to_json(cd.rho);
    j["theta"] = {{"root", to_json(cd.theta)}, {"weight", to_json(cd.theta_weight)}};
    j["comarks"] = to_json(cd.comarks);
    j["weyl_order"] = cd.weyl_order;
    j["center_order"] = cd.center_order;
    return dump(j);
  }
  std::ostringstream out;
  out << "algebra " << cd.id.name() << "\n";
  out << "cartan (row i = alpha_i in Dynkin labels)\n";
  for (int i = 0; i < r; ++i) out << "  [" << format_weight(IntVector(cd.cartan.row(i).transpose())) << "]\n";
  out << "symmetrizers " << format_weight(cd.symmetrizers) << "\n";
  out << "qform\n";
  for (int i = 0; i < r; ++i) {
    out << " ";
    for (int k = 0; k < r; ++k) out << " " << format_rational(cd.qform(i, k));
    out << "\n";
  }
  out << "rho " << format_tuple(cd.rho) << "\n";
  out << "theta " << format_tuple(cd.theta_weight) << " = root " << format_tuple(cd.theta) << "\n";
  out << "comarks " << format_weight(cd.comarks) << "\n";
  out << "weyl_order " << cd.weyl_order << "\n";
  out << "center_order " << cd.center_order << "\n";
  out << "positive_roots " << cd.positive_roots.size() << "\n";
  for (std::size_t k = 0; k < cd.positive_roots.size(); ++k) {
    out << "  root " << format_tuple(cd.positive_roots[k]) << "  weight " << format_tuple(cd.positive_root_weights[k])
        << "\n";
  }
  return out.str();
}

std::string run_orbit(const Command& cmd) {
  const CartanData& cd = algebra_of(cmd);
  const Weight& w = weight_of(cmd, cd);
  const std::vector<Weight> o = orbit(cd, w);
  if (cmd.json) {
    ordered_json j;
    j["algebra"] = cd.id.name();
    j["weight"] = to_json(w);
    j["dominant"] = to_json(dominant_weight(cd, w));
    j["size"] = o.size();
    j["orbit"] = weights_json(o);
    return dump(j);
  }
  std::ostringstream out;
  out << "orbit of " << format_tuple(w) << " in " << cd.id.name() << ": " << o.size() << " weights, dominant "
      << format_tuple(dominant_weight(cd, w)) << "\n";
  for (const Weight& mu : o) out << format_tuple(mu) << "\n";
  return out.str();
}

std::string run_mult(const Command& cmd) {
  const CartanData& cd = algebra_of(cmd);
  const Weight& lam = dominant_weight_of(cmd, cd);
  const MultMap& ch = weight_system(cd, lam);
  std::vector<Weight> ws;
  for (const auto& [mu, m] : ch) ws.push_back(mu);
  std::sort(ws.begin(), ws.end(), LevelLexLess{&cd});
  const Int d = dim(cd, lam);
  if (cmd.json) {
    ordered_json j;
    j["algebra"] = cd.id.name();
    j["lambda"] = to_json(lam);
    j["dim"] = d;
    ordered_json entries = ordered_json::array();
    for (const Weight& mu : ws) entries.push_back({{"mu", to_json(mu)}, {"mult", ch[mu]}});
    j["weights"] = entries;
    return dump(j);
  }
  std::ostringstream out;
  out << "L" << format_tuple(lam) << " of " << cd.id.name() << ": dim " << d << ", " << ws.size() << " weights\n";
  out << "weight\tmult\n";
  for (const Weight& mu : ws) out << format_tuple(mu) << "\t" << ch[mu] << "\n";
  return out.str();
}

std::string run_polytope(const Command& cmd) {
  const CartanData& cd = algebra_of(cmd);
  const Weight& lam = dominant_weight_of(cmd, cd);
  const std::vector<Weight> pts = points(cd, lam);
  std::optional<Int> closed;
  if (has_closed_form(cd.id)) closed = count_closed_form(cd, lam);
  if (cmd.json) {
    ordered_json j;
    j["algebra"] = cd.id.name();
    j["lambda"] = to_json(lam);
    j["count"] = pts.size();
    j["closed_form"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
    j["match"] = closed ? ordered_json(*closed == Int(pts.size())) : ordered_json(nullptr);
    j["points"] = weights_json(pts);
    return dump(j);
  }
  std::ostringstream out;
  out << "weight polytope of " << format_tuple(lam) << " in " << cd.id.name() << "\n";
  for (const Weight& mu : pts) out << format_tuple(mu) << "\n";
  out << "count " << pts.size() << "\n";
  if (closed) {
    out << "closed_form " << *closed << "\n";
    out << (*closed == Int(pts.size()) ? "match" : "MISMATCH") << "\n";
  } else {
    out << "closed_form unavailable\n";
  }
  return out.str();
}

std::string expansion_text(const std::vector<Weight>& order, const DenseIntMatrix& row) {
  std::string s;
  for (Eigen::Index j = Eigen::Index(order.size()) - 1; j >= 0; --j) {
    const Int v = row(0, j);
    if (v == 0) continue;
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    const Int a = v < 0 ? -v : v;
    if (a != 1) s += std::to_string(a) + " ";
    s += "B" + format_tuple(order[std::size_t(j)]);
  }
  return s;
}

std::string run_expand(const Command& cmd) {
  const CartanData& cd = algebra_of(cmd);
  const Weight& lam = dominant_weight_of(cmd, cd);
  const ExpansionMatrix row = a_row(cd, lam);
  if (cmd.json) {
    ordered_json j;
    j["algebra"] = cd.id.name();
    j["lambda"] = to_json(lam);
    j["class"] = congruence_class(cd, lam);
    j["order"] = weights_json(row.order);
    j["kind"] = "A";
    ordered_json r = ordered_json::array();
    for (Eigen::Index k = 0; k < row.rows.cols(); ++k) r.push_back(row.rows(0, k));
    j["row"] = r;
    return dump(j);
  }
  std::ostringstream out;
  out << "ch" << format_tuple(lam) << " = " << expansion_text(row.order, row.rows) << "\n";
  out << "order";
  for (const Weight& w : row.order) out << " " << format_tuple(w);
  out << "\nrow  ";
  for (Eigen::Index k = 0; k < row.rows.cols(); ++k) out << " " << row.rows(0, k);
  out << "\n";
  return out.str();
}

std::vector<Weight> read_order_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read order file '" + path + "'");
  std::vector<Weight> order;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    order.push_back(parse_weight(line));
  }
  return order;
}

std::string run_matrix(const Command& cmd) {
  const CartanData& cd = algebra_of(cmd);
  std::vector<Weight> order;
  int klass = cmd.class_index.value_or(0);
  if (cmd.order_file) {
    order = read_order_file(*cmd.order_file);
    for (const Weight& w : order) check_rank(cd, w, "order weight");
    if (!order.empty() && !cmd.class_index) klass = congruence_class(cd, order.front());
  } else {
    if (!cmd.max_level) throw InvalidArgument("--max-level is required");
    order = default_order(cd, *cmd.max_level, klass);
  }
  const ExpansionMatrix m = cmd.inverse ? a_inverse_matrix(cd, order) : a_matrix(cd, order);
  if (cmd.inverse) {
    if (const auto missing = missing_from_order(cd, order); !missing.empty()) {
      throw InvalidArgument("order is not closed downward under dominance; missing " + format_tuple(missing.front()));
    }
  }
  if (cmd.json) {
    ordered_json j;
    j["algebra"] = cd.id.name();
    j["class"] = klass;
    j["order"] = weights_json(order);
    j["kind"] = cmd.inverse ? "A_inverse" : "A";
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows.rows(); ++i) {
      ordered_json r = ordered_json::array();
      for (Eigen::Index k = 0; k < m.rows.cols(); ++k) r.push_back(m.rows(i, k));
      rows.push_back(r);
    }
    j["rows"] = rows;
    return dump(j);
  }
  std::ostringstream out;
  out << (cmd.inverse ? "A^-1" : "A") << " for " << cd.id.name() << ", class " << klass << ", " << order.size()
      << " weights\n";
  out << "order";
  for (const Weight& w : order) out << " " << format_tuple(w);
  out << "\n";
  Int width = 1;
  for (Eigen::Index i = 0; i < m.rows.size(); ++i) width = std::max<Int>(width, Int(std::to_string(m.rows(i)).size()));
  for (Eigen::Index i = 0; i < m.rows.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.rows.cols(); ++k) out << (k ? " " : "") << std::setw(int(width)) << m.rows(i, k);
    out << "  " << format_tuple(order[std::size_t(i)]) << "\n";
  }
  return out.str();
}

Result run_verify(const Command& cmd) {
  const CartanData& cd = algebra_of(cmd);
  if (!cmd.max_level) throw InvalidArgument("--max-level is required");
  const CountReport counts = verify_counts(cd, *cmd.max_level);
  const ConjectureReport conj = verify_conjectures(cd, *cmd.max_level);
  const bool failed = !counts.identities_hold() || !conj.negative_entries.empty();
  Result res;
  res.exit_code = failed ? kFailure : kOk;
  if (cmd.json) {
    ordered_json j;
    j["algebra"] = cd.id.name();
    j["max_level"] = *cmd.max_level;
    ordered_json entries = ordered_json::array();
    for (const CountEntry& e : counts.entries) {
      entries.push_back({{"lambda", to_json(e.lambda)},
                         {"dim", e.dim},
                         {"brion_total", e.brion_total},
                         {"points", e.point_count},
                         {"closed_form", e.closed_form ? ordered_json(*e.closed_form) : ordered_json(nullptr)},
                         {"dim_from_expansion", e.dim_from_expansion},
                         {"brion_from_expansion", e.brion_from_expansion},
                         {"identities_hold", e.identities_hold()},
                         {"counts_agree", e.counts_agree()}});
    }
    j["counts"] = {{"identities_hold", counts.identities_hold()}, {"entries", entries}};
    ordered_json negatives = ordered_json::array();
    for (const NegativeEntry& n : conj.negative_entries) {
      negatives.push_back({{"lambda", to_json(n.lambda)}, {"mu", to_json(n.mu)}, {"value", n.value}});
    }
    ordered_json mismatches = ordered_json::array();
    for (const PolytopeMismatch& m : conj.polytope_mismatches) {
      ordered_json diffs = ordered_json::array();
      for (const PointDiscrepancy& d : m.differences) {
        diffs.push_back({{"mu", to_json(d.mu)}, {"brion", d.brion}, {"indicator", d.indicator}});
      }
      mismatches.push_back({{"lambda", to_json(m.lambda)},
                            {"brion_total", m.brion_total},
                            {"points", m.point_count},
                            {"differences", diffs}});
    }
    j["conjectures"] = {{"weights_checked", conj.weights_checked},
                        {"negative_entries", negatives},
                        {"polytope_mismatches", mismatches}};
    j["status"] = failed ? "failure" : "ok";
    res.out = dump(j);
    return res;
  }
  std::ostringstream out;
  out << "verify " << cd.id.name() << " up to level " << *cmd.max_level << "\n\n";
  out << "counts (d = dim, b* = total of B, pts = |points|, cf = closed form)\n";
  out << "lambda\td\tb*\tpts\tcf\tsum A b*\tsum A^-1 d\n";
  for (const CountEntry& e : counts.entries) {
    out << format_tuple(e.lambda) << "\t" << e.dim << "\t" << e.brion_total << "\t" << e.point_count << "\t"
        << (e.closed_form ? std::to_string(*e.closed_form) : "-") << "\t" << e.dim_from_expansion << "\t"
        << e.brion_from_expansion << (e.identities_hold() ? "" : "\tIDENTITY FAILURE")
        << (e.counts_agree() ? "" : "\tcount mismatch") << "\n";
  }
  out << "\nnon-negativity of A: ";
  if (conj.negative_entries.empty()) {
    out << "no negative entry\n";
  } else {
    out << conj.negative_entries.size() << " negative entries\n";
    for (const NegativeEntry& n : conj.negative_entries) {
      out << "  A[" << format_tuple(n.lambda) << ", " << format_tuple(n.mu) << "] = " << n.value << "\n";
    }
  }
  out << "B equals the polytope sum: ";
  if (conj.polytope_mismatches.empty()) {
    out << "holds for all " << conj.weights_checked << " weights\n";
  } else {
    out << conj.polytope_mismatches.size() << " of " << conj.weights_checked << " weights differ\n";
    for (const PolytopeMismatch& m : conj.polytope_mismatches) {
      out << "  " << format_tuple(m.lambda) << ": B total " << m.brion_total << ", points " << m.point_count << "\n";
      for (const PointDiscrepancy& d : m.differences) {
        out << "    " << format_tuple(d.mu) << " B " << d.brion << " indicator " << d.indicator << "\n";
      }
    }
  }
  out << "status " << (failed ? "failure" : "ok") << "\n";
  res.out = out.str();
  return res;
}

std::string run_examples(const Command& cmd) {
  if (cmd.example != "section2") throw InvalidArgument("unknown example set '" + cmd.example + "' (known: section2)");
  struct Case {
    std::string name;
    GenericPolytope polytope;
    std::vector<LatticeVector> pts;
    std::vector<std::vector<double>> cs;
  };
  const std::vector<Case> cases = {
      {"interval [2,7]", interval_example(), interval_example_points(), {{0.5}, {-0.7}, {1.3}}},
      {"triangle (0,0),(1,0),(1,1)",
       triangle_example(),
       triangle_example_points(),
       {{0.4, -0.9}, {-1.1, 0.3}, {0.8, 0.6}}},
  };
  ordered_json j = ordered_json::array();
  std::ostringstream out;
  for (const Case& k : cases) {
    ordered_json evals = ordered_json::array();
    out << k.name << "\n";
    out << "  lattice points";
    for (const LatticeVector& x : k.pts) out << " " << format_tuple(x.cast<Int>());
    out << "\n  c\tlattice sum\tBrion sum\n";
    for (const std::vector<double>& cv : k.cs) {
      const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(cv.data(), Eigen::Index(cv.size()));
      const double direct = lattice_sum<double>(k.pts, c);
      const double brion = generic_brion_numeric<double>(k.polytope, c);
      std::string cs;
      for (std::size_t i = 0; i < cv.size(); ++i) cs += (i ? "," : "") + fmt_double(cv[i]);
      out << "  (" << cs << ")\t" << fmt_double(direct) << "\t" << fmt_double(brion) << "\n";
      evals.push_back({{"c", cv}, {"lattice_sum", direct}, {"brion_sum", brion}});
    }
    ordered_json pts = ordered_json::array();
    for (const LatticeVector& x : k.pts) pts.push_back(to_json(x.cast<Int>()));
    j.push_back({{"name", k.name}, {"points", pts}, {"evaluations", evals}});
  }
  return cmd.json ? dump(j) : out.str();
}

}  // namespace

Result run(const Command& cmd) {
  Result res;
  try {
    switch (cmd.verb) {
      case Verb::Roots: res.out = run_roots(cmd); break;
      case Verb::Orbit: res.out = run_orbit(cmd); break;
      case Verb::Mult: res.out = run_mult(cmd); break;
      case Verb::Polytope: res.out = run_polytope(cmd); break;
      case Verb::Expand: res.out = run_expand(cmd); break;
      case Verb::Matrix: res.out = run_matrix(cmd); break;
      case Verb::Verify: return run_verify(cmd);
      case Verb::Examples: res.out = run_examples(cmd); break;
    }
  } catch (const InvalidArgument& e) {
    return Result{kUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return Result{kFailure, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return res;
}

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Lie characters, weight polytopes and polytope expansions", "polysum"};
  app.require_subcommand(1);

  Command cmd;
  std::string algebra, weight, example;
  Int max_level = -1;
  int class_index = -1;
  std::string order_file;

  struct Spec {
    Verb verb;
    const char* name;
    const char* help;
    bool weight;
    bool level;
  };
  const Spec specs[] = {
      {Verb::Roots, "roots", "Cartan matrix, positive roots and invariants", false, false},
      {Verb::Orbit, "orbit", "Weyl orbit of a weight", true, false},
      {Verb::Mult, "mult", "weight multiplicities of an irreducible representation", true, false},
      {Verb::Polytope, "polytope", "lattice points of the weight polytope", true, false},
      {Verb::Expand, "expand", "one row of the polytope expansion ch = sum A B", true, false},
      {Verb::Matrix, "matrix", "expansion matrix A over dominant weights up to a level", false, true},
      {Verb::Verify, "verify", "count identities and conjecture scans up to a level", false, true},
  };
  std::vector<std::pair<CLI::App*, Verb>> subs;
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("algebra", algebra, "algebra, e.g. A2, C2, G2, A3")->required();
    if (s.weight) sub->add_option("weight", weight, "Dynkin labels, e.g. 1,0,1")->required();
    if (s.level) {
      auto* opt = sub->add_option("--max-level", max_level, "largest level (sum of comarks times labels)");
      if (s.verb == Verb::Verify) opt->required();
    }
    if (s.verb == Verb::Matrix) {
      sub->add_option("--class", class_index, "congruence class index (default 0)");
      sub->add_option("--order", order_file, "file with one weight per line");
      sub->add_flag("--inverse", cmd.inverse, "emit A^-1 instead of A");
    }
    sub->add_flag("--json", cmd.json, "JSON output");
    subs.emplace_back(sub, s.verb);
  }
  CLI::App* ex = app.add_subcommand("examples", "worked lattice-polytope examples with their Brion sums");
  ex->add_option("name", example, "example set: section2")->required();
  ex->add_flag("--json", cmd.json, "JSON output");
  subs.emplace_back(ex, Verb::Examples);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return Result{kOk, app.help(), ""};
  } catch (const CLI::CallForAllHelp& e) {
    return Result{kOk, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    err << "error: " << e.what() << "\n";
    return Result{kUsage, "", err.str()};
  }

  try {
    for (const auto& [sub, verb] : subs) {
      if (sub->parsed()) cmd.verb = verb;
    }
    if (cmd.verb != Verb::Examples) cmd.algebra = parse_algebra(algebra);
    if (!weight.empty()) cmd.weight = parse_weight(weight);
    if (max_level >= 0) cmd.max_level = max_level;
    if (class_index >= 0) cmd.class_index = class_index;
    if (!order_file.empty()) cmd.order_file = order_file;
    cmd.example = example;
    if (cmd.verb == Verb::Matrix && !cmd.max_level && !cmd.order_file) {
      throw InvalidArgument("matrix needs --max-level or --order");
    }
  } catch (const InvalidArgument& e) {
    return Result{kUsage, "", std::string("error: ") + e.what() + "\n"};
  }
  return run(cmd);
}

}  // namespace polysum::cli
