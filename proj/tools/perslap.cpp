// Command-line surface.  Subcommands wrap the library modules and emit one
// JSON document (or a CSV table) per invocation.  Exit codes: 0 success,
// 2 unreadable or malformed input, 3 structurally valid input outside an
// operation's domain, 4 failed internal cross-check.

#include <CLI11.hpp>
#include <json.hpp>

#include <perslap/cheeger.hpp>
#include <perslap/complex.hpp>
#include <perslap/filtration.hpp>
#include <perslap/laplacian.hpp>
#include <perslap/linalg.hpp>
#include <perslap/persistent.hpp>
#include <perslap/random.hpp>
#include <perslap/resistance.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace perslap;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json data = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    data.push_back(std::move(row));
  }
  ordered_json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void emit(const std::string& command, ordered_json inputs, ordered_json result,
          const Tolerances& tol, const std::string& method) {
  ordered_json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  doc["tolerances"] = ordered_json{{"rank_tol", tol.rank_tol}, {"pivot_tol", tol.pivot_tol}};
  doc["method"] = method;
  std::cout << doc.dump(2) << "\n";
}

std::string csv_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

// Shared option state; each subcommand binds the fields it uses.
struct Options {
  std::vector<std::string> complexes;
  std::string filtration;
  std::string graph;
  std::string network;
  int q = 0;
  int k = 1;
  int q0 = 1;
  int v = 0;
  int w = 0;
  double s = 0.0;
  double t = 0.0;
  double tol = 0.0;
  std::string method = "schur";
  std::string format = "json";
  std::uint64_t seed = 0;
  int trials = 100;
  bool betti = false;
  bool spectrum = false;
  bool check_monotonicity = false;
  std::vector<int> generator;
};

Tolerances tolerances_from(const Options& opt, bool tol_given) {
  Tolerances tol;
  if (tol_given) {
    if (opt.tol <= 0.0) throw ParseError("--tol must be positive");
    tol.rank_tol = opt.tol;
  }
  return tol;
}

// The pair behind `pers` and `cheeger`: a filtration with two values, or two
// complex files listed sub first, ambient second.
SimplicialPair load_pair(const Options& opt, bool s_given, bool t_given, ordered_json& inputs) {
  if (!opt.filtration.empty()) {
    if (!s_given || !t_given)
      throw ParseError("--filtration needs both --s and --t");
    if (!opt.complexes.empty())
      throw ParseError("give either --filtration or --complex files, not both");
    const Filtration f = parse_filtration(read_file(opt.filtration));
    inputs["filtration"] = opt.filtration;
    inputs["s"] = opt.s;
    inputs["t"] = opt.t;
    return f.pair_at(opt.s, opt.t);
  }
  if (opt.complexes.size() != 2)
    throw ParseError("need --filtration with --s/--t, or two --complex files (sub, then ambient)");
  const SimplicialComplex sub = parse_complex(read_file(opt.complexes[0]));
  const SimplicialComplex ambient = parse_complex(read_file(opt.complexes[1]));
  inputs["sub"] = opt.complexes[0];
  inputs["ambient"] = opt.complexes[1];
  return make_pair(sub, ambient);
}

int run_lap(const Options& opt, bool tol_given) {
  if (opt.complexes.size() != 1) throw ParseError("lap needs exactly one --complex file");
  const SimplicialComplex k = parse_complex(read_file(opt.complexes[0]));
  const Tolerances tol = tolerances_from(opt, tol_given);
  const LaplacianMatrices l = laplacian(k, opt.q);
  const Spectrum sp = laplacian_spectrum(k, opt.q, LaplacianPart::full, tol);

  if (opt.format == "csv") {
    std::cout << "k,lambda\n";
    for (std::size_t i = 0; i < sp.values.size(); ++i)
      std::cout << i + 1 << "," << csv_number(sp.values[i]) << "\n";
    return 0;
  }

  ordered_json inputs;
  inputs["complex"] = opt.complexes[0];
  inputs["q"] = opt.q;
  ordered_json result;
  result["up"] = matrix_json(l.up);
  result["down"] = matrix_json(l.down);
  result["full"] = matrix_json(l.full);
  result["spectrum"] = sp.values;
  emit("lap", std::move(inputs), std::move(result), tol, "direct");
  return 0;
}

int run_pers(const Options& opt, bool s_given, bool t_given, bool tol_given) {
  ordered_json inputs;
  const SimplicialPair pair = load_pair(opt, s_given, t_given, inputs);
  inputs["q"] = opt.q;
  const Tolerances tol = tolerances_from(opt, tol_given);

  const bool both = opt.method == "both";
  const Method primary = opt.method == "reduction" ? Method::reduction : Method::schur;
  const PersistentLaplacian pl = persistent_laplacian(pair, opt.q, primary, tol);
  double discrepancy = 0.0;
  if (both) {
    const PersistentLaplacian other = persistent_laplacian(pair, opt.q, Method::reduction, tol);
    discrepancy = std::max({max_abs_diff(pl.up, other.up), max_abs_diff(pl.down, other.down),
                            max_abs_diff(pl.full, other.full)});
    if (!(discrepancy <= 1e-6))
      throw SelfCheckError("reduction and schur routes disagree by " + csv_number(discrepancy));
  }

  std::optional<int> betti_value;
  if (opt.betti) betti_value = persistent_betti(pair, opt.q, tol);
  std::optional<Spectrum> spectrum_value;
  if (opt.spectrum) spectrum_value = persistent_spectrum(pair, opt.q, tol, true);

  if (opt.format == "csv") {
    if (spectrum_value) {
      std::cout << "k,lambda\n";
      for (std::size_t i = 0; i < spectrum_value->values.size(); ++i)
        std::cout << i + 1 << "," << csv_number(spectrum_value->values[i]) << "\n";
      return 0;
    }
    if (betti_value) {
      std::cout << "q,betti\n" << opt.q << "," << *betti_value << "\n";
      return 0;
    }
    throw ParseError("csv output needs --spectrum or --betti");
  }

  ordered_json result;
  result["up"] = matrix_json(pl.up);
  result["down"] = matrix_json(pl.down);
  result["full"] = matrix_json(pl.full);
  if (both) result["max_discrepancy"] = discrepancy;
  if (betti_value) result["betti"] = *betti_value;
  if (spectrum_value) result["spectrum"] = spectrum_value->values;
  emit("pers", std::move(inputs), std::move(result), tol, opt.method);
  return 0;
}

int run_filt(const Options& opt, bool t_given, bool k_given, bool tol_given) {
  if (opt.filtration.empty()) throw ParseError("filt needs --filtration");
  if (!t_given && !k_given && !opt.check_monotonicity)
    throw ParseError("filt needs --t, --k or --check-monotonicity");
  const Filtration f = parse_filtration(read_file(opt.filtration));
  const Tolerances tol = tolerances_from(opt, tol_given);

  ordered_json inputs;
  inputs["filtration"] = opt.filtration;
  inputs["q"] = opt.q;
  ordered_json result;

  if (t_given) {
    const AllPairsResult all = all_pairs_up_laplacians(f, opt.q, opt.t, tol);
    ordered_json block;
    block["t"] = all.t;
    block["s_values"] = all.s_values;
    ordered_json ups = ordered_json::array();
    for (const Matrix& m : all.up) ups.push_back(matrix_json(m));
    block["up"] = std::move(ups);
    result["all_pairs"] = std::move(block);
    inputs["t"] = opt.t;
    if (opt.format == "csv") throw ParseError("csv output covers tables, not matrix lists");
  }

  if (k_given) {
    const PersistentEigenvalueFunction fn = persistent_eigenvalue_function(f, opt.q, opt.k, true, tol);
    inputs["k"] = opt.k;
    if (opt.format == "csv") {
      std::cout << "s,t,lambda\n";
      for (std::size_t i = 0; i < fn.grid.size(); ++i)
        for (std::size_t j = i; j < fn.grid.size(); ++j)
          std::cout << csv_number(fn.grid[i]) << "," << csv_number(fn.grid[j]) << ","
                    << (fn.values[i][j] ? csv_number(*fn.values[i][j]) : "") << "\n";
      return 0;
    }
    ordered_json block;
    block["k"] = fn.k;
    block["grid"] = fn.grid;
    ordered_json table = ordered_json::array();
    for (std::size_t i = 0; i < fn.grid.size(); ++i) {
      for (std::size_t j = i; j < fn.grid.size(); ++j) {
        ordered_json entry;
        entry["s"] = fn.grid[i];
        entry["t"] = fn.grid[j];
        if (fn.values[i][j])
          entry["lambda"] = *fn.values[i][j];
        else
          entry["lambda"] = nullptr;
        table.push_back(std::move(entry));
      }
    }
    block["table"] = std::move(table);
    result["eigenvalues"] = std::move(block);
  }

  if (opt.check_monotonicity) {
    const std::vector<MonotonicityViolation> violations = check_monotonicity(f, opt.q, 1e-8, tol);
    if (opt.format == "csv") {
      std::cout << "relation,k,lhs,rhs\n";
      for (const MonotonicityViolation& v : violations)
        std::cout << v.relation << "," << v.k << "," << csv_number(v.lhs) << ","
                  << csv_number(v.rhs) << "\n";
      return 0;
    }
    ordered_json list = ordered_json::array();
    for (const MonotonicityViolation& v : violations) {
      ordered_json entry;
      entry["relation"] = v.relation;
      entry["times"] = v.times;
      entry["k"] = v.k;
      entry["lhs"] = v.lhs;
      entry["rhs"] = v.rhs;
      list.push_back(std::move(entry));
    }
    ordered_json block;
    block["count"] = violations.size();
    block["violations"] = std::move(list);
    result["monotonicity"] = std::move(block);
  }

  emit("filt", std::move(inputs), std::move(result), tol, "schur");
  return 0;
}

int run_resistance(const Options& opt, bool vw_given, bool tol_given) {
  const Tolerances tol = tolerances_from(opt, tol_given);
  ordered_json inputs;
  double resistance = 0.0;

  if (!opt.graph.empty()) {
    if (!opt.network.empty()) throw ParseError("give either --graph or --network, not both");
    if (!vw_given) throw ParseError("--graph needs both --v and --w");
    const SimplicialComplex l = parse_complex(read_file(opt.graph));
    resistance = effective_resistance_graph(l, opt.v, opt.w, tol);
    inputs["graph"] = opt.graph;
    inputs["v"] = opt.v;
    inputs["w"] = opt.w;
  } else if (!opt.network.empty()) {
    if (opt.generator.empty()) throw ParseError("--network needs --generator vertices");
    const SimplicialNetwork network(parse_complex(read_file(opt.network)), opt.q0);
    const CurrentGenerator generator(opt.q0, std::vector<VertexId>(opt.generator.begin(),
                                                                   opt.generator.end()));
    resistance = simplicial_effective_resistance(network, generator, tol);
    inputs["network"] = opt.network;
    inputs["q0"] = opt.q0;
    inputs["generator"] = opt.generator;
  } else {
    throw ParseError("resistance needs --graph with --v/--w, or --network with --generator");
  }

  if (opt.format == "csv") {
    std::cout << "resistance\n" << csv_number(resistance) << "\n";
    return 0;
  }
  ordered_json result;
  result["resistance"] = resistance;
  emit("resistance", std::move(inputs), std::move(result), tol, "pseudoinverse");
  return 0;
}

int run_cheeger(const Options& opt, bool s_given, bool t_given, bool tol_given) {
  ordered_json inputs;
  const SimplicialPair pair = load_pair(opt, s_given, t_given, inputs);
  const Tolerances tol = tolerances_from(opt, tol_given);
  const CheegerReport report = cheeger_report(pair, tol);

  if (opt.format == "csv") {
    std::cout << "lambda2,h,h_strong,inequality_holds,conjecture_holds\n"
              << csv_number(report.lambda2) << "," << csv_number(report.h) << ","
              << csv_number(report.h_strong) << "," << (report.inequality_holds ? 1 : 0) << ","
              << (report.conjecture_holds ? 1 : 0) << "\n";
    return 0;
  }
  ordered_json result;
  result["lambda2"] = report.lambda2;
  result["h"] = report.h;
  result["h_strong"] = report.h_strong;
  result["inequality_holds"] = report.inequality_holds;
  result["conjecture_holds"] = report.conjecture_holds;
  emit("cheeger", std::move(inputs), std::move(result), tol, "trail-enumeration");
  return 0;
}

// Seeded cross-checks of routes that must agree.  Any disagreement beyond
// 1e-6 raises SelfCheckError, which main maps to exit code 4.
int run_selftest(const Options& opt) {
  const Tolerances tol;
  Rng rng(opt.seed);
  double max_gap = 0.0;
  int checks = 0;

  for (int trial = 0; trial < opt.trials; ++trial) {
    const SimplicialPair pair = random_pair(rng, 4 + trial % 6, 1 + trial % 3, trial % 3 == 0);
    for (int q = 0; q <= pair.ambient().dimension(); ++q) {
      const PersistentLaplacian red = persistent_laplacian(pair, q, Method::reduction, tol);
      const PersistentLaplacian sch = persistent_laplacian(pair, q, Method::schur, tol);
      const double gap = std::max({max_abs_diff(red.up, sch.up), max_abs_diff(red.down, sch.down),
                                   max_abs_diff(red.full, sch.full)});
      max_gap = std::max(max_gap, gap);
      if (!(gap <= 1e-6))
        throw SelfCheckError("persistent routes disagree by " + csv_number(gap));

      const LaplacianMatrices direct = laplacian(pair.ambient(), q);
      const LaplacianMatrices adjacency = laplacian_via_degree_adjacency(pair.ambient(), q);
      if (!(max_abs_diff(direct.full, adjacency.full) <= 1e-6))
        throw SelfCheckError("boundary-product and adjacency Laplacians disagree");
      ++checks;
    }

    if (trial % 10 == 0) {
      const Filtration f = random_filtration(rng, 5, 2, 3, false);
      for (double t : f.grid()) {
        if (f.count_at(0, t) == 0) continue;
        const AllPairsResult sweep = all_pairs_up_laplacians(f, 0, t, tol);
        for (std::size_t i = 0; i < sweep.s_values.size(); ++i) {
          const double gap = max_abs_diff(
              sweep.up[i], persistent_laplacian(f.pair_at(sweep.s_values[i], t), 0).up);
          max_gap = std::max(max_gap, gap);
          if (!(gap <= 1e-6))
            throw SelfCheckError("sweep and pairwise operators disagree by " + csv_number(gap));
          ++checks;
        }
      }

      const SimplicialComplex graph = random_connected_graph(rng, 5, 0.3, trial % 2 == 0);
      const double r = effective_resistance_graph(graph, 0, 1, tol);
      two_point_persistent_laplacian(graph, 0, 1, tol);
      if (!(r > 0.0)) throw SelfCheckError("nonpositive effective resistance");
      ++checks;
    }
  }

  ordered_json inputs;
  inputs["seed"] = opt.seed;
  inputs["trials"] = opt.trials;
  ordered_json result;
  result["checks"] = checks;
  result["max_gap"] = max_gap;
  result["ok"] = true;
  emit("selftest", std::move(inputs), std::move(result), tol, "cross-check");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent Laplacian toolkit"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opt.tol, "relative rank tolerance (default 1e-10)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* lap = app.add_subcommand("lap", "Laplacian matrices and spectrum of one complex");
  lap->add_option("--complex,-c", opt.complexes, "complex file");
  lap->add_option("--q", opt.q, "dimension");
  add_common(lap);

  CLI::App* pers = app.add_subcommand("pers", "persistent Laplacian of a pair");
  pers->add_option("--complex,-c", opt.complexes, "complex file (sub, then ambient)");
  pers->add_option("--filtration", opt.filtration, "filtration file");
  CLI::Option* pers_s = pers->add_option("--s", opt.s, "start value");
  CLI::Option* pers_t = pers->add_option("--t", opt.t, "end value");
  pers->add_option("--q", opt.q, "dimension");
  pers->add_option("--method", opt.method, "algorithm")
      ->check(CLI::IsMember({"schur", "reduction", "both"}));
  pers->add_flag("--betti", opt.betti, "include the persistent Betti number");
  pers->add_flag("--spectrum", opt.spectrum, "include the eigenvalues");
  add_common(pers);

  CLI::App* filt = app.add_subcommand("filt", "persistent operators over a filtration grid");
  filt->add_option("--filtration", opt.filtration, "filtration file");
  filt->add_option("--q", opt.q, "dimension");
  CLI::Option* filt_t = filt->add_option("--t", opt.t, "fixed end value for the all-pairs sweep");
  CLI::Option* filt_k = filt->add_option("--k", opt.k, "eigenvalue index for the grid table");
  filt->add_flag("--check-monotonicity", opt.check_monotonicity,
                 "report eigenvalue monotonicity violations");
  add_common(filt);

  CLI::App* resistance = app.add_subcommand("resistance", "effective resistance");
  resistance->add_option("--graph", opt.graph, "graph file (edge weights are conductances)");
  CLI::Option* resistance_v = resistance->add_option("--v", opt.v, "first vertex");
  CLI::Option* resistance_w = resistance->add_option("--w", opt.w, "second vertex");
  resistance->add_option("--network", opt.network, "simplicial network file");
  resistance->add_option("--q0", opt.q0, "network dimension");
  resistance->add_option("--generator", opt.generator, "current generator vertices");
  add_common(resistance);

  CLI::App* cheeger = app.add_subcommand("cheeger", "persistent Cheeger constants of a pair");
  cheeger->add_option("--complex,-c", opt.complexes, "complex file (sub, then ambient)");
  cheeger->add_option("--filtration", opt.filtration, "filtration file");
  CLI::Option* cheeger_s = cheeger->add_option("--s", opt.s, "start value");
  CLI::Option* cheeger_t = cheeger->add_option("--t", opt.t, "end value");
  add_common(cheeger);

  CLI::App* selftest = app.add_subcommand("selftest", "seeded cross-checks of redundant routes");
  selftest->add_option("--seed", opt.seed, "random seed");
  selftest->add_option("--trials", opt.trials, "number of random trials");

  CLI::Option* lap_tol = lap->get_option("--tol");
  CLI::Option* pers_tol = pers->get_option("--tol");
  CLI::Option* filt_tol = filt->get_option("--tol");
  CLI::Option* resistance_tol = resistance->get_option("--tol");
  CLI::Option* cheeger_tol = cheeger->get_option("--tol");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lap->parsed()) return run_lap(opt, lap_tol->count() > 0);
    if (pers->parsed())
      return run_pers(opt, pers_s->count() > 0, pers_t->count() > 0, pers_tol->count() > 0);
    if (filt->parsed())
      return run_filt(opt, filt_t->count() > 0, filt_k->count() > 0, filt_tol->count() > 0);
    if (resistance->parsed())
      return run_resistance(opt, resistance_v->count() > 0 && resistance_w->count() > 0,
                            resistance_tol->count() > 0);
    if (cheeger->parsed())
      return run_cheeger(opt, cheeger_s->count() > 0, cheeger_t->count() > 0,
                         cheeger_tol->count() > 0);
    if (selftest->parsed()) return run_selftest(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const SelfCheckError& e) {
    std::cerr << "self-check error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
