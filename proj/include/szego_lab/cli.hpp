#pragma once

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "szego_lab/harness.hpp"

namespace szego_lab {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitConfig = 2, kExitNonConvergence = 3 };

namespace cli_detail {

struct Flags {
  std::string config_path;
  std::string curve;
  std::string a;
  std::string curve_a;
  std::string weight_a;
  std::string xi;
  std::string weight;
  double c = 1.0;
  std::vector<int> p;
  int n = 4;
  int n_min = 0;
  int n_max = 4;
  int M = 1024;
  int K = 256;
  int segment_nodes = 64;
  std::vector<double> radii;
  int n_r = 8;
  int n_ang = 512;
  std::uint64_t seed = 0;
  int trials = 200;
  int threads = 0;
  bool timing = false;
  std::string out_dir = ".";
  std::string csv_path;
};

inline cplx parse_complex(const std::string& s, const char* what) {
  std::stringstream ss(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(ss >> re)) throw ConfigError(std::string(what) + ": expected RE[,IM]");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im)) throw ConfigError(std::string(what) + ": expected RE[,IM]");
  }
  return {re, im};
}

struct Registered {
  CLI::Option* config = nullptr;
  CLI::Option* curve = nullptr;
  CLI::Option* a = nullptr;
  CLI::Option* curve_a = nullptr;
  CLI::Option* weight_a = nullptr;
  CLI::Option* xi = nullptr;
  CLI::Option* weight = nullptr;
  CLI::Option* c = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* n_min = nullptr;
  CLI::Option* n_max = nullptr;
  CLI::Option* M = nullptr;
  CLI::Option* K = nullptr;
  CLI::Option* seg = nullptr;
  CLI::Option* radii = nullptr;
  CLI::Option* n_r = nullptr;
  CLI::Option* n_ang = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* timing = nullptr;
};

inline Registered add_common(CLI::App* app, Flags& f) {
  Registered r;
  r.config = app->add_option("--config", f.config_path, "JSON experiment config");
  r.curve = app->add_option("--curve", f.curve, "disk | quadratic");
  r.a = app->add_option("--a", f.a, "RE,IM: weight a for szego_a, else curve a");
  r.curve_a = app->add_option("--curve-a", f.curve_a, "RE,IM coefficient of the quadratic map");
  r.weight_a = app->add_option("--weight-a", f.weight_a, "RE,IM parameter of the szego_a weight");
  r.xi = app->add_option("--xi", f.xi, "RE,IM base point");
  r.weight = app->add_option("--weight", f.weight, "const | expcos | szego_a");
  r.c = app->add_option("--c", f.c, "constant weight value");
  r.p = app->add_option("--p", f.p, "exponent(s) p >= 2")->delimiter(',');
  r.n_min = app->add_option("--n-min", f.n_min, "smallest degree");
  r.n_max = app->add_option("--n-max", f.n_max, "largest degree");
  r.M = app->add_option("--M", f.M, "boundary nodes (power of two)");
  r.K = app->add_option("--K", f.K, "Fourier truncation order");
  r.seg = app->add_option("--segment-nodes", f.segment_nodes, "Gauss-Legendre nodes per segment");
  r.radii = app->add_option("--radii", f.radii, "compact radii in (0,1)")->delimiter(',');
  r.n_r = app->add_option("--n-r", f.n_r, "radial lattice size");
  r.n_ang = app->add_option("--n-ang", f.n_ang, "angular lattice size");
  r.seed = app->add_option("--seed", f.seed, "random seed");
  r.trials = app->add_option("--trials", f.trials, "random trials");
  r.threads = app->add_option("--threads", f.threads, "worker threads (0 = SZEGO_LAB_THREADS or auto)");
  r.timing = app->add_flag("--timing", f.timing, "record wall time in the ms column");
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Config file first, then any flag given on the command line.
inline ExperimentConfig resolve_config(const Flags& f, const Registered& r) {
  ExperimentConfig cfg;
  if (r.config->count()) cfg = config_from_json(read_file(f.config_path));

  const bool weight_is_szego = f.weight == "szego_a";
  try {
    if (r.weight->count()) {
      if (f.weight == "const") {
        cfg.weights = {WeightSpec::constant(f.c)};
      } else if (f.weight == "expcos") {
        cfg.weights = {WeightSpec::expcos()};
      } else if (weight_is_szego) {
        std::string a = r.weight_a->count() ? f.weight_a : (r.a->count() ? f.a : "");
        if (a.empty()) throw ConfigError("--weight szego_a needs --weight-a or --a");
        cfg.weights = {WeightSpec::szego_a(parse_complex(a, "--weight-a"))};
      } else {
        throw ConfigError("unknown --weight '" + f.weight + "'");
      }
    }
    if (r.curve->count()) {
      const cplx xi = r.xi->count() ? parse_complex(f.xi, "--xi") : cplx{};
      if (f.curve == "disk") {
        cfg.curves = {ConformalPair::disk(xi)};
      } else if (f.curve == "quadratic") {
        std::string a = r.curve_a->count() ? f.curve_a : (r.a->count() && !weight_is_szego ? f.a : "");
        if (a.empty()) throw ConfigError("--curve quadratic needs --curve-a or --a");
        cfg.curves = {ConformalPair::quadratic(parse_complex(a, "--curve-a"), xi)};
      } else {
        throw ConfigError("unknown --curve '" + f.curve + "'");
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (r.p->count()) cfg.p = f.p;
  if (r.n_min->count()) cfg.n_min = f.n_min;
  if (r.n_max->count()) cfg.n_max = f.n_max;
  if (r.M->count()) cfg.M = f.M;
  if (r.K->count()) cfg.K = f.K;
  if (r.seg->count()) cfg.segment_nodes = f.segment_nodes;
  if (r.radii->count()) cfg.radii = f.radii;
  if (r.n_r->count()) cfg.n_r = f.n_r;
  if (r.n_ang->count()) cfg.n_ang = f.n_ang;
  if (r.seed->count()) cfg.seed = f.seed;
  if (r.trials->count()) cfg.trials = f.trials;
  if (r.threads->count()) cfg.threads = f.threads;
  if (r.timing->count()) cfg.timing = f.timing;
  validate(cfg);
  return cfg;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

inline int matrix_exit_code(const MatrixResult& res) {
  for (const auto& r : res.rows)
    if (!r.pass) return kExitViolation;
  if (!res.errors.empty()) return kExitNonConvergence;
  for (const auto& r : res.rows)
    if (!r.converged) return kExitNonConvergence;
  return kExitOk;
}

inline nlohmann::json json_complex(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

// Minimal CSV reader for the fixed report schema.
inline std::vector<ReportRow> read_report_csv(const std::string& text) {
  std::vector<ReportRow> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != kCsvHeader) throw ConfigError("line 1: unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cols.push_back(cell);
    if (cols.size() != 9) throw ConfigError("line " + std::to_string(lineno) + ": expected 9 columns");
    try {
      ReportRow r;
      r.config_digest = cols[0];
      r.n = std::stoi(cols[1]);
      r.m_n = std::stod(cols[2]);
      r.lhs = std::stod(cols[3]);
      r.rhs_proof = std::stod(cols[4]);
      r.rhs_statement = std::stod(cols[5]);
      r.slack = std::stod(cols[6]);
      if (cols[7] != "true" && cols[7] != "false") throw std::invalid_argument("pass");
      r.pass = cols[7] == "true";
      r.ms = std::stod(cols[8]);
      rows.push_back(std::move(r));
    } catch (const std::exception&) {
      throw ConfigError("line " + std::to_string(lineno) + ": malformed row");
    }
  }
  if (lineno == 0) throw ConfigError("line 1: empty report");
  return rows;
}

}  // namespace cli_detail

/**
 * Command-line entry point.
 *
 *   solve                        one extremal problem, JSON on stdout
 *   verify theorem               theorem matrix -> report.csv + summary.json
 *   verify proposition|corollary1|corollary2|fejer-riesz
 *                                seeded random trials -> summary.json
 *   sweep                        convergence study per cell, with decay rate
 *   report --csv PATH            re-summarize an existing report.csv
 *
 * Exit codes: 0 all pass, 1 inequality violation, 2 config error, 3 non-convergence.
 */
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"szego_lab: Szegő functions, extremal polynomials and inequality checks"};
  app.require_subcommand(1);

  Flags f;
  CLI::App* solve = app.add_subcommand("solve", "solve one constrained extremal problem");
  Registered r_solve = add_common(solve, f);
  solve->add_option("--n", f.n, "polynomial degree");

  CLI::App* verify = app.add_subcommand("verify", "check an inequality");
  verify->require_subcommand(1);
  struct VerifyCmd {
    const char* name;
    CLI::App* app;
    Registered reg;
  };
  std::vector<VerifyCmd> verify_cmds;
  for (const char* name : {"theorem", "proposition", "corollary1", "corollary2", "fejer-riesz"}) {
    CLI::App* sub = verify->add_subcommand(name);
    Registered reg = add_common(sub, f);
    sub->add_option("--out-dir", f.out_dir, "directory for report.csv and summary.json");
    verify_cmds.push_back({name, sub, reg});
  }

  CLI::App* sweep = app.add_subcommand("sweep", "convergence study of m_n and |J_n - Phi|");
  Registered r_sweep = add_common(sweep, f);
  sweep->add_option("--out-dir", f.out_dir, "directory for report.csv and summary.json");

  CLI::App* report = app.add_subcommand("report", "summarize an existing report.csv");
  report->add_option("--csv", f.csv_path, "report CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (solve->parsed()) {
      ExperimentConfig cfg = resolve_config(f, r_solve);
      const ConformalPair curve = cfg.curves.front();
      const BoundaryGrid grid = make_boundary_grid(curve, cfg.weights.front(), cfg.M);
      const int p = cfg.p.front();
      if (f.n < 0) throw ConfigError("--n must be >= 0");
      const OuterFunction D = build_outer(grid, p, cfg.K);
      const ExtremalSolution sol = solve_extremal(curve, grid, D, f.n, p);
      nlohmann::json coeffs = nlohmann::json::array();
      for (int k = 0; k <= f.n; ++k) coeffs.push_back(json_complex(sol.Q[k]));
      nlohmann::json j = {
          {"curve", describe(curve)},
          {"weight", describe(cfg.weights.front())},
          {"p", p},
          {"n", f.n},
          {"coefficients", coeffs},
          {"m", sol.m},
          {"iterations", sol.iterations},
          {"converged", sol.converged},
          {"orthogonalized", sol.orthogonalized},
          {"D_at_xi", D.value_at_zero()},
          {"truncation_warning", D.truncation_warning},
      };
      out << j.dump(2) << '\n';
      return sol.converged ? kExitOk : kExitNonConvergence;
    }

    for (const auto& cmd : verify_cmds) {
      if (!cmd.app->parsed()) continue;
      ExperimentConfig cfg = resolve_config(f, cmd.reg);
      const std::filesystem::path dir(f.out_dir);
      if (std::string(cmd.name) == "theorem") {
        const MatrixResult res = run_theorem_matrix(cfg);
        nlohmann::json summary = matrix_summary(res, cfg.seed);
        write_text(dir / "report.csv", to_csv(res.rows));
        write_text(dir / "summary.json", summary.dump(2) + "\n");
        out << summary.dump(2) << '\n';
        return matrix_exit_code(res);
      }
      const std::string name = cmd.name;
      const InequalityKind kind = name == "proposition"  ? InequalityKind::Proposition
                                  : name == "corollary1" ? InequalityKind::Corollary1
                                  : name == "corollary2" ? InequalityKind::Corollary2
                                                         : InequalityKind::FejerRiesz;
      const RandomCheckSummary s = run_random_checks(cfg, kind);
      nlohmann::json summary = random_summary_json(s);
      write_text(dir / "summary.json", summary.dump(2) + "\n");
      out << summary.dump(2) << '\n';
      bool ok = s.failed == 0;
      for (const auto& p : s.probes) ok = ok && p.pass;
      return ok ? kExitOk : kExitViolation;
    }

    if (sweep->parsed()) {
      ExperimentConfig cfg = resolve_config(f, r_sweep);
      MatrixResult all;
      nlohmann::json rates = nlohmann::json::object();
      for (const Cell& cell : matrix_cells(cfg)) {
        ExperimentConfig one = cfg;
        one.curves = {cell.curve};
        one.weights = {cell.weight};
        one.p = {cell.p};
        const ConvergenceResult res = run_convergence(one);
        all.rows.insert(all.rows.end(), res.matrix.rows.begin(), res.matrix.rows.end());
        all.errors.insert(all.errors.end(), res.matrix.errors.begin(), res.matrix.errors.end());
        rates[config_digest(cell.curve, cell.weight, cell.p)] =
            res.rate ? nlohmann::json(*res.rate) : nlohmann::json(nullptr);
      }
      nlohmann::json summary = matrix_summary(all, cfg.seed);
      summary["decay_rate"] = rates;
      write_text(std::filesystem::path(f.out_dir) / "report.csv", to_csv(all.rows));
      write_text(std::filesystem::path(f.out_dir) / "summary.json", summary.dump(2) + "\n");
      out << summary.dump(2) << '\n';
      return matrix_exit_code(all);
    }

    if (report->parsed()) {
      MatrixResult res;
      res.rows = read_report_csv(read_file(f.csv_path));
      nlohmann::json summary = matrix_summary(res, 0);
      summary.erase("errors");
      summary["other_readings"].erase("double_normalized_violations");  // not stored in the CSV
      for (auto& fl : summary["failures"]) fl.erase("seed");
      out << summary.dump(2) << '\n';
      return matrix_exit_code(res);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NonConvergence& e) {
    err << "numerical non-convergence: " << e.what() << '\n';
    return kExitNonConvergence;
  }
  return kExitConfig;
}

}  // namespace szego_lab
