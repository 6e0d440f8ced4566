#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "szego_lab/bounds.hpp"
#include "szego_lab/curve.hpp"
#include "szego_lab/errors.hpp"
#include "szego_lab/extremal.hpp"
#include "szego_lab/grid.hpp"
#include "szego_lab/random.hpp"
#include "szego_lab/szego.hpp"
#include "szego_lab/transport.hpp"
#include "szego_lab/weight.hpp"

namespace szego_lab {

struct ExperimentConfig {
  std::vector<ConformalPair> curves{ConformalPair::disk()};
  std::vector<WeightSpec> weights{WeightSpec::constant(1.0)};
  std::vector<int> p{2};
  int n_min = 0;
  int n_max = 4;
  int M = 1024;
  int K = 256;
  int segment_nodes = 64;
  std::vector<double> radii{0.5, 0.9, 0.95};
  int n_r = 8;
  int n_ang = 512;
  std::uint64_t seed = 20240601;
  int trials = 200;
  int threads = 0;      // 0: SZEGO_LAB_THREADS, then hardware concurrency
  bool timing = false;  // wall time in the ms column (breaks byte-identical output)
};

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.curves.empty()) throw ConfigError("at least one curve is required");
  if (cfg.weights.empty()) throw ConfigError("at least one weight is required");
  if (cfg.p.empty()) throw ConfigError("at least one exponent p is required");
  for (int p : cfg.p)
    if (p < 2) throw ConfigError("every p must be an integer >= 2");
  if (cfg.n_min < 0 || cfg.n_max < cfg.n_min) throw ConfigError("n range must satisfy 0 <= n_min <= n_max");
  if (!is_power_of_two(cfg.M) || cfg.M < 64) throw ConfigError("M must be a power of two >= 64");
  if (cfg.K < 1 || cfg.K > cfg.M / 2) throw ConfigError("K must satisfy 1 <= K <= M/2");
  if (cfg.segment_nodes < 16) throw ConfigError("segment_nodes must be >= 16");
  if (cfg.radii.empty()) throw ConfigError("at least one compact radius is required");
  for (double r : cfg.radii)
    if (!(r > 0.0 && r < 1.0)) throw ConfigError("compact radii must lie in (0, 1)");
  if (cfg.n_r < 1 || cfg.n_ang < 1) throw ConfigError("n_r and n_ang must be positive");
  if (cfg.trials < 0) throw ConfigError("trials must be non-negative");
}

// ---------------------------------------------------------------------------
// JSON config

namespace detail {

inline int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline int line_of_key(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 1 : line_of_offset(text, pos);
}

struct JsonCtx {
  const std::string& text;
  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw ConfigError("line " + std::to_string(line_of_key(text, key)) + ": " + key + ": " + msg);
  }
};

inline cplx complex_from_json(const nlohmann::json& j, const JsonCtx& ctx, const std::string& key) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    ctx.fail(key, "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline ConformalPair curve_from_json(const nlohmann::json& j, const JsonCtx& ctx) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) ctx.fail("kind", "curve needs a string kind");
  for (const auto& [k, v] : j.items()) {
    if (k != "kind" && k != "a" && k != "xi") ctx.fail(k, "unknown curve field");
  }
  const std::string kind = j["kind"];
  const cplx xi = j.contains("xi") ? complex_from_json(j["xi"], ctx, "xi") : cplx{};
  try {
    if (kind == "disk") return ConformalPair::disk(xi);
    if (kind == "quadratic") {
      if (!j.contains("a")) ctx.fail("kind", "quadratic curve needs a");
      return ConformalPair::quadratic(complex_from_json(j["a"], ctx, "a"), xi);
    }
  } catch (const std::invalid_argument& e) {
    ctx.fail("a", e.what());
  }
  ctx.fail("kind", "unknown curve kind '" + kind + "'");
}

inline WeightSpec weight_from_json(const nlohmann::json& j, const JsonCtx& ctx) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) ctx.fail("kind", "weight needs a string kind");
  for (const auto& [k, v] : j.items()) {
    if (k != "kind" && k != "a" && k != "c") ctx.fail(k, "unknown weight field");
  }
  const std::string kind = j["kind"];
  try {
    if (kind == "const") {
      double c = 1.0;
      if (j.contains("c")) {
        if (!j["c"].is_number()) ctx.fail("c", "expected a number");
        c = j["c"].get<double>();
      }
      return WeightSpec::constant(c);
    }
    if (kind == "expcos") return WeightSpec::expcos();
    if (kind == "szego_a") {
      if (!j.contains("a")) ctx.fail("kind", "szego_a weight needs a");
      return WeightSpec::szego_a(complex_from_json(j["a"], ctx, "a"));
    }
  } catch (const std::invalid_argument& e) {
    ctx.fail(j.contains("c") ? "c" : "a", e.what());
  }
  ctx.fail("kind", "unknown weight kind '" + kind + "'");
}

inline int int_from_json(const nlohmann::json& j, const JsonCtx& ctx, const std::string& key) {
  if (!j.is_number_integer()) ctx.fail(key, "expected an integer");
  return j.get<int>();
}

}  // namespace detail

/// Parse a JSON experiment config. Errors carry the line of the offending key.
inline ExperimentConfig config_from_json(const std::string& text, ExperimentConfig cfg = {}) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("line " + std::to_string(detail::line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)) +
                      ": malformed JSON: " + e.what());
  }
  const detail::JsonCtx ctx{text};
  if (!j.is_object()) throw ConfigError("line 1: config must be a JSON object");

  auto read_int = [&](const nlohmann::json& obj, const char* key, int& dst) {
    if (obj.contains(key)) dst = detail::int_from_json(obj[key], ctx, key);
  };

  for (const auto& [key, v] : j.items()) {
    if (key == "curve") {
      cfg.curves = {detail::curve_from_json(v, ctx)};
    } else if (key == "curves") {
      if (!v.is_array()) ctx.fail(key, "expected an array");
      cfg.curves.clear();
      for (const auto& c : v) cfg.curves.push_back(detail::curve_from_json(c, ctx));
    } else if (key == "weight") {
      cfg.weights = {detail::weight_from_json(v, ctx)};
    } else if (key == "weights") {
      if (!v.is_array()) ctx.fail(key, "expected an array");
      cfg.weights.clear();
      for (const auto& w : v) cfg.weights.push_back(detail::weight_from_json(w, ctx));
    } else if (key == "p") {
      cfg.p.clear();
      if (v.is_array()) {
        for (const auto& e : v) cfg.p.push_back(detail::int_from_json(e, ctx, key));
      } else {
        cfg.p.push_back(detail::int_from_json(v, ctx, key));
      }
    } else if (key == "n") {
      if (!v.is_array() || v.size() != 2) ctx.fail(key, "expected [n_min, n_max]");
      cfg.n_min = detail::int_from_json(v[0], ctx, key);
      cfg.n_max = detail::int_from_json(v[1], ctx, key);
    } else if (key == "n_min" || key == "n_max" || key == "M" || key == "K" || key == "segment_nodes" ||
               key == "n_r" || key == "n_ang" || key == "trials" || key == "threads") {
      const int val = detail::int_from_json(v, ctx, key);
      if (key == "n_min") cfg.n_min = val;
      if (key == "n_max") cfg.n_max = val;
      if (key == "M") cfg.M = val;
      if (key == "K") cfg.K = val;
      if (key == "segment_nodes") cfg.segment_nodes = val;
      if (key == "n_r") cfg.n_r = val;
      if (key == "n_ang") cfg.n_ang = val;
      if (key == "trials") cfg.trials = val;
      if (key == "threads") cfg.threads = val;
    } else if (key == "discretization") {
      if (!v.is_object()) ctx.fail(key, "expected an object");
      for (const auto& [dk, dv] : v.items()) {
        if (dk != "M" && dk != "K" && dk != "segment_nodes") ctx.fail(dk, "unknown discretization field");
      }
      read_int(v, "M", cfg.M);
      read_int(v, "K", cfg.K);
      read_int(v, "segment_nodes", cfg.segment_nodes);
    } else if (key == "radii") {
      if (!v.is_array()) ctx.fail(key, "expected an array of radii");
      cfg.radii.clear();
      for (const auto& r : v) {
        if (!r.is_number()) ctx.fail(key, "expected numbers");
        cfg.radii.push_back(r.get<double>());
      }
    } else if (key == "seed") {
      if (!v.is_number_unsigned() && !v.is_number_integer()) ctx.fail(key, "expected a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "timing") {
      if (!v.is_boolean()) ctx.fail(key, "expected true/false");
      cfg.timing = v.get<bool>();
    } else {
      ctx.fail(key, "unknown config field");
    }
  }
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("line 1: ") + e.what());
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Parallel map with deterministic output order

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SZEGO_LAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs task(i) for i in [0, count) on up to `threads` workers. Each result
/// lands in its own slot, so the output does not depend on scheduling.
template <typename R>
std::vector<R> parallel_map(std::size_t count, int threads, const std::function<R(std::size_t)>& task) {
  std::vector<R> out(count);
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = task(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            out[i] = task(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// ---------------------------------------------------------------------------
// Theorem matrix

struct ReportRow {
  std::string config_digest;
  int n = 0;
  double m_n = 0.0;
  double lhs = 0.0;  // lattice sup of |J_n - Phi| over the largest compact radius
  double rhs_proof = 0.0;
  double rhs_statement = 0.0;
  double rhs_double_normalized = 0.0;  // not in the CSV; summarized in JSON
  double slack = 0.0;  // rhs_proof - lhs
  bool pass = false;
  double ms = 0.0;
  bool converged = true;
  std::vector<double> lhs_by_radius;
};

struct CellError {
  std::string config_digest;
  std::string message;
};

struct MatrixResult {
  std::vector<ReportRow> rows;
  std::vector<CellError> errors;
};

struct Cell {
  ConformalPair curve;
  WeightSpec weight;
  int p;
};

inline std::vector<Cell> matrix_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (const auto& c : cfg.curves)
    for (const auto& w : cfg.weights)
      for (int p : cfg.p) cells.push_back({c, w, p});
  return cells;
}

inline std::string config_digest(const ConformalPair& c, const WeightSpec& w, int p) {
  return describe(c) + "/" + describe(w) + "/p=" + std::to_string(p);
}

namespace detail {

struct CellResult {
  std::vector<ReportRow> rows;
  std::optional<CellError> error;
};

inline CellResult run_cell(const Cell& cell, const ExperimentConfig& cfg) {
  CellResult out;
  const std::string digest = config_digest(cell.curve, cell.weight, cell.p);
  try {
    const BoundaryGrid grid = make_boundary_grid(cell.curve, cell.weight, cfg.M);
    const OuterFunction D = build_outer(grid, cell.p, cfg.K);
    std::vector<CompactLattice> lattices;
    for (double r : cfg.radii)
      lattices.push_back(make_compact_lattice(cell.curve, D, r, cfg.n_r, cfg.n_ang, cfg.segment_nodes));

    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const auto t0 = std::chrono::steady_clock::now();
      const ExtremalSolution sol = solve_extremal(cell.curve, grid, D, n, cell.p);
      const ComplexPoly Jn = compute_Jn(sol.Q, cell.p, cell.curve.xi());
      ReportRow row;
      row.config_digest = digest;
      row.n = n;
      row.m_n = sol.m;
      row.converged = sol.converged;
      for (const auto& L : lattices) row.lhs_by_radius.push_back(sup_diff_on_lattice(L, Jn));
      row.lhs = *std::max_element(row.lhs_by_radius.begin(), row.lhs_by_radius.end());
      row.rhs_proof = theorem_rhs(sol, grid, D, RhsForm::ProofForm);
      row.rhs_statement = theorem_rhs(sol, grid, D, RhsForm::StatementForm);
      row.rhs_double_normalized = theorem_rhs(sol, grid, D, RhsForm::DoubleNormalized);
      row.slack = row.rhs_proof - row.lhs;
      row.pass = inequality_holds(row.lhs, row.rhs_proof);
      if (cfg.timing) {
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      }
      out.rows.push_back(std::move(row));
    }
  } catch (const NonConvergence& e) {
    out.error = CellError{digest, e.what()};
  }
  return out;
}

}  // namespace detail

/// One row per (curve, weight, p, n), in config order regardless of scheduling.
inline MatrixResult run_theorem_matrix(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::vector<Cell> cells = matrix_cells(cfg);
  const auto results = parallel_map<detail::CellResult>(
      cells.size(), resolve_threads(cfg.threads), [&](std::size_t i) { return detail::run_cell(cells[i], cfg); });
  MatrixResult out;
  for (const auto& r : results) {
    out.rows.insert(out.rows.end(), r.rows.begin(), r.rows.end());
    if (r.error) out.errors.push_back(*r.error);
  }
  return out;
}

struct ConvergenceResult {
  MatrixResult matrix;
  std::optional<double> rate;  // slope of log m_n against n
};

/// Least-squares slope of log m_n vs n over rows with m_n > 1e-13; needs three such rows.
inline std::optional<double> fit_decay_rate(const std::vector<ReportRow>& rows) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.m_n > 1e-13) {
      xs.push_back(r.n);
      ys.push_back(std::log(r.m_n));
    }
  }
  if (xs.size() < 3) return std::nullopt;
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

inline ConvergenceResult run_convergence(const ExperimentConfig& cfg) {
  if (cfg.curves.size() != 1 || cfg.weights.size() != 1 || cfg.p.size() != 1) {
    throw ConfigError("run_convergence needs exactly one curve, one weight and one p");
  }
  ConvergenceResult out{run_theorem_matrix(cfg), std::nullopt};
  out.rate = fit_decay_rate(out.matrix.rows);
  return out;
}

/// True when m_n is nonincreasing (within slack) inside every config group.
inline bool monotone_in_n(const std::vector<ReportRow>& rows, double slack = 1e-10) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].config_digest == rows[i - 1].config_digest && rows[i].m_n > rows[i - 1].m_n + slack) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Randomized inequality trials

struct TrialFailure {
  std::uint64_t seed;
  std::string config;
};

struct RandomCheckSummary {
  InequalityKind kind;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  double worst_slack = INFINITY;
  std::vector<TrialFailure> failures;
  std::vector<InequalityReport> probes;  // closed-form equality cases
};

inline std::uint64_t trial_seed(std::uint64_t base, InequalityKind kind, int trial) {
  return splitmix64(splitmix64(base + static_cast<std::uint64_t>(kind)) + static_cast<std::uint64_t>(trial));
}

struct ExponentTriple {
  double p, q, r;
};

/// Exponents drawn by the trial generator; each satisfies the relation its check requires.
inline ExponentTriple draw_exponents(InequalityKind kind, Xorshift64Star& rng) {
  switch (kind) {
    case InequalityKind::Corollary1: {
      static constexpr double ps[] = {2.0, 3.0, 4.0, 1.5};
      const double p = ps[rng.uniform_int(0, 3)];
      return {p, conjugate_exponent(p), 1.0};
    }
    case InequalityKind::Corollary2: {
      static constexpr ExponentTriple ts[] = {{2, 2, 1}, {4, 4, 2}, {3, 6, 2}, {3, 1.5, 1}, {6, 3, 2}};
      return ts[rng.uniform_int(0, 4)];
    }
    default:
      return {2.0, 2.0, 1.0};
  }
}

/// Equality cases of the Cauchy–Schwarz/Hölder step: Q = 1 and Q = z on the unit circle with rho = 1.
inline std::vector<InequalityReport> equality_probes(int M = 1024) {
  const ConformalPair disk = ConformalPair::disk();
  const BoundaryGrid g = make_boundary_grid(disk, WeightSpec::constant(1.0), M);
  std::vector<InequalityReport> out;
  for (const ComplexPoly& Q : {ComplexPoly{1.0}, ComplexPoly{0.0, 1.0}}) {
    out.push_back(check_embedding_inequality(InequalityKind::Proposition, Q, disk, g, 2, 2));
    out.push_back(check_embedding_inequality(InequalityKind::Corollary1, Q, disk, g, 2, 2));
    out.push_back(check_embedding_inequality(InequalityKind::Corollary2, Q, disk, g, 2, 2, 1));
  }
  return out;
}

/**
 * Seeded trials of one inequality kind (Proposition, Corollary1, Corollary2 or
 * FejerRiesz). Embedding trials cycle through every (curve, weight) pair of the
 * config by trial index; everything else about a trial is derived from its seed.
 */
inline RandomCheckSummary run_random_checks(const ExperimentConfig& cfg, InequalityKind kind) {
  validate(cfg);
  RandomCheckSummary summary;
  summary.kind = kind;
  summary.trials = cfg.trials;

  struct Combo {
    BoundaryGrid grid;
    std::string digest;
  };
  std::vector<Combo> combos;
  if (kind != InequalityKind::FejerRiesz) {
    for (const auto& c : cfg.curves)
      for (const auto& w : cfg.weights) combos.push_back({make_boundary_grid(c, w, cfg.M), describe(c) + "/" + describe(w)});
  }

  const auto reports = parallel_map<InequalityReport>(
      static_cast<std::size_t>(cfg.trials), resolve_threads(cfg.threads), [&](std::size_t t) {
        Xorshift64Star rng(trial_seed(cfg.seed, kind, static_cast<int>(t)));
        const ComplexPoly Q = random_poly(rng);
        if (kind == InequalityKind::FejerRiesz) return fejer_riesz_check(Q, random_disk_point(rng));
        const Combo& combo = combos[t % combos.size()];
        const ExponentTriple e = draw_exponents(kind, rng);
        return check_embedding_inequality(kind, Q, combo.grid.pair, combo.grid, e.p, e.q, e.r);
      });

  for (int t = 0; t < cfg.trials; ++t) {
    const InequalityReport& r = reports[t];
    summary.worst_slack = std::min(summary.worst_slack, r.slack);
    if (r.pass) {
      ++summary.passed;
    } else {
      ++summary.failed;
      summary.failures.push_back({trial_seed(cfg.seed, kind, t), r.inputs_digest});
    }
  }
  if (kind != InequalityKind::FejerRiesz) summary.probes = equality_probes(cfg.M);
  return summary;
}

// ---------------------------------------------------------------------------
// Output

inline constexpr const char* kCsvHeader = "config_digest,n,m_n,lhs,rhs_proof,rhs_statement,slack,pass,ms";

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

inline void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.config_digest << ',' << r.n << ',' << format_double(r.m_n) << ',' << format_double(r.lhs) << ','
       << format_double(r.rhs_proof) << ',' << format_double(r.rhs_statement) << ',' << format_double(r.slack)
       << ',' << (r.pass ? "true" : "false") << ',' << format_double(r.ms) << '\n';
  }
}

inline std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

inline nlohmann::json matrix_summary(const MatrixResult& res, std::uint64_t seed) {
  int pass = 0, fail = 0, nonconv = 0, stmt_fail = 0, dn_fail = 0;
  double worst = INFINITY;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& r : res.rows) {
    r.pass ? ++pass : ++fail;
    if (!r.converged) ++nonconv;
    if (!inequality_holds(r.lhs, r.rhs_statement)) ++stmt_fail;
    if (!inequality_holds(r.lhs, r.rhs_double_normalized)) ++dn_fail;
    worst = std::min(worst, r.slack);
    if (!r.pass) failures.push_back({{"seed", seed}, {"config", r.config_digest}, {"n", r.n}});
  }
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : res.errors) errors.push_back({{"config", e.config_digest}, {"message", e.message}});
  return {
      {"totals", {{"rows", res.rows.size()}, {"pass", pass}, {"fail", fail}, {"nonconverged", nonconv},
                  {"errors", res.errors.size()}}},
      {"failures", failures},
      {"errors", errors},
      {"worst_slack", res.rows.empty() ? nlohmann::json(nullptr) : nlohmann::json(worst)},
      {"monotone", monotone_in_n(res.rows)},
      {"other_readings", {{"statement_form_violations", stmt_fail}, {"double_normalized_violations", dn_fail}}},
  };
}

inline nlohmann::json random_summary_json(const RandomCheckSummary& s) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : s.failures) failures.push_back({{"seed", f.seed}, {"config", f.config}});
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& p : s.probes) {
    probes.push_back({{"kind", to_string(p.kind)}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"slack", p.slack},
                      {"pass", p.pass}, {"inputs", p.inputs_digest}});
  }
  return {
      {"kind", to_string(s.kind)},
      {"totals", {{"trials", s.trials}, {"pass", s.passed}, {"fail", s.failed}}},
      {"failures", failures},
      {"worst_slack", s.trials > 0 ? nlohmann::json(s.worst_slack) : nlohmann::json(nullptr)},
      {"probes", probes},
  };
}

}  // namespace szego_lab
