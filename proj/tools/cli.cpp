#include "cli.hpp"

#include "svg.hpp"

#include <groupprox/apg_solver.hpp>
#include <groupprox/block_prox.hpp>
#include <groupprox/io.hpp>
#include <groupprox/parallel.hpp>
#include <groupprox/recovery_bench.hpp>
#include <groupprox/region.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace groupprox::cli {

namespace {

// Thrown for flag values that parse as text but make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_flag_double(const std::string& token, const std::string& flag) {
  try {
    return parse_double(token);
  } catch (const IoError&) {
    throw UsageError(flag + ": not a number: '" + token + "'");
  }
}

Vector parse_list(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ',');
  if (parts.empty()) throw UsageError(flag + ": empty list");
  Vector v(static_cast<Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    v[static_cast<Index>(i)] = parse_flag_double(parts[i], flag);
  return v;
}

BlockNorm parse_p(int p) {
  if (p != 1 && p != 2) throw UsageError("--p must be 1 or 2");
  return block_norm_from_int(p);
}

std::vector<Variant> parse_variants(const std::string& text) {
  std::vector<Variant> out;
  for (const std::string& item : split(text, ',')) {
    const auto f = split(item, ':');
    if (f.size() < 2 || f.size() > 3)
      throw UsageError("--variants: expected p:q or p:q:scale, got '" + item + "'");
    Variant v;
    const double p = parse_flag_double(f[0], "--variants");
    if (p != 1.0 && p != 2.0) throw UsageError("--variants: p must be 1 or 2");
    v.p = p == 1.0 ? BlockNorm::l1 : BlockNorm::l2;
    v.q = parse_flag_double(f[1], "--variants");
    if (f.size() == 3) v.lambda_scale = parse_flag_double(f[2], "--variants");
    out.push_back(v);
  }
  return out;
}

std::string variant_name(BlockNorm p, double q) {
  std::ostringstream s;
  s << "p=" << static_cast<int>(p) << ", q=" << std::setprecision(3) << q;
  return s.str();
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s + ")";
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

// ---- prox ---------------------------------------------------------------

struct ProxArgs {
  int p = 1;
  double q = 0.5;
  double nu = 1.0;
  std::string y;
  bool json = false;
  bool table = false;
};

std::string short_num(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

void print_table(std::ostream& out, const std::vector<SupportDiagnostic>& rows) {
  auto cell = [](const std::optional<double>& v) { return v ? short_num(*v) : std::string("-"); };
  out << std::left << std::setw(5) << "s" << std::setw(15) << "kyfan" << std::setw(15)
      << "t_tilde" << std::setw(15) << "a" << std::setw(15) << "c_s" << std::setw(10)
      << "feasible" << "J\n";
  for (const auto& r : rows)
    out << std::setw(5) << r.s << std::setw(15) << short_num(r.kyfan) << std::setw(15)
        << short_num(r.t_tilde) << std::setw(15) << cell(r.a) << std::setw(15) << cell(r.c)
        << std::setw(10) << (r.feasible ? "yes" : "no") << cell(r.objective) << '\n';
  out << std::right;
}

int cmd_prox(const ProxArgs& a, std::ostream& out) {
  const BlockNorm p = parse_p(a.p);
  const Vector y = parse_list(a.y, "--y");
  const ScalarPenalty pen(a.nu, a.q);
  const ProxSet result = prox_block(y, pen, p);
  std::vector<SupportDiagnostic> rows;
  if (p == BlockNorm::l1 && pen.fractional()) rows = support_diagnostics(sort_signed(y), pen);

  if (a.json) {
    nlohmann::json doc;
    doc["y"] = std::vector<double>(y.data(), y.data() + y.size());
    doc["p"] = a.p;
    doc["q"] = a.q;
    doc["nu"] = a.nu;
    doc["objective"] = result.objective;
    doc["minimizers"] = nlohmann::json::array();
    for (const Vector& m : result.minimizers)
      doc["minimizers"].push_back(std::vector<double>(m.data(), m.data() + m.size()));
    doc["candidates"] = nlohmann::json::array();
    for (const auto& r : rows)
      doc["candidates"].push_back({{"s", r.s},
                                   {"kyfan", r.kyfan},
                                   {"t_tilde", r.t_tilde},
                                   {"a", optional_json(r.a)},
                                   {"c", optional_json(r.c)},
                                   {"feasible", r.feasible},
                                   {"objective", optional_json(r.objective)}});
    out << doc.dump(2) << '\n';
    return kOk;
  }
  if (!a.table) {
    out << "y = " << vector_text(y) << ", p = " << a.p << ", q = " << format_double(a.q)
        << ", nu = " << format_double(a.nu) << '\n';
    out << (result.size() == 1 ? "minimizer:\n" : "minimizers:\n");
    for (const Vector& m : result.minimizers) out << "  " << vector_text(m) << '\n';
    out << "objective: " << format_double(result.objective) << '\n';
  }
  if (!rows.empty()) {
    if (!a.table) out << "support candidates:\n";
    print_table(out, rows);
  }
  return kOk;
}

// ---- region -------------------------------------------------------------

struct RegionArgs {
  int p = 1;
  double q = 0.5;
  double nu = 1.0;
  double min = 0.0;
  double max = 2.0;
  double step = 0.005;
  std::string out;
  std::string svg;
};

int cmd_region(const RegionArgs& a, std::ostream& out) {
  const BlockNorm p = parse_p(a.p);
  if (!(a.max > a.min)) throw UsageError("--max must exceed --min");
  if (!(a.step > 0.0)) throw UsageError("--step must be positive");
  const ScalarPenalty pen(a.nu, a.q);
  const RegionGrid grid = zero_region_scan({a.min, a.max, a.min, a.max}, a.step, pen, p,
                                           worker_limit());
  auto file = open_output(a.out);
  write_region_csv(file, grid);
  if (!file) throw IoError("failed writing '" + a.out + "'");
  if (!a.svg.empty())
    svg::write_region_heatmap(a.svg, grid,
                              "zero region, " + variant_name(p, a.q) + ", nu=" +
                                  format_double(a.nu));
  std::size_t zeros = 0;
  for (auto z : grid.zero) zeros += z;
  out << "scanned " << grid.nx << " x " << grid.ny << " points, " << zeros
      << " with prox = {0}; wrote " << a.out << '\n';
  return kOk;
}

// ---- solve --------------------------------------------------------------

struct SolveArgs {
  std::string matrix;
  std::string rhs;
  std::string groups;
  double lambda = 0.0;
  int p = 2;
  double q = 1.0;
  std::optional<double> step;
  int max_iter = 1000;
  double tol = 1e-8;
  std::string out;
  std::string trace;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const BlockNorm p = parse_p(a.p);
  if (!(a.lambda > 0.0)) throw UsageError("--lambda must be positive");
  if (!(a.q >= 0.0 && a.q <= 1.0)) throw UsageError("--q must lie in [0, 1]");
  if (a.step && !(*a.step > 0.0)) throw UsageError("--step must be positive");
  if (a.max_iter < 0) throw UsageError("--max-iter must be nonnegative");

  ProblemInstance problem;
  problem.A = read_matrix_csv(a.matrix);
  problem.b = read_vector_csv(a.rhs);
  problem.partition = read_groups_json(a.groups);
  problem.lambda = a.lambda;
  problem.p = p;
  problem.q = a.q;
  if (problem.A.rows() != problem.b.size())
    throw DimensionMismatch("matrix has " + std::to_string(problem.A.rows()) +
                            " rows but rhs has " + std::to_string(problem.b.size()) +
                            " entries");
  // A partition of {0, ..., n-1} for its own n is well formed; anything else is
  // a broken file. A well-formed partition of the wrong size is a mismatch.
  try {
    problem.partition.validate(problem.partition.dimension());
  } catch (const InvalidArgument& e) {
    throw IoError("'" + a.groups + "': " + e.what());
  }
  if (problem.partition.dimension() != problem.A.cols())
    throw DimensionMismatch("groups cover " + std::to_string(problem.partition.dimension()) +
                            " indices but the matrix has " + std::to_string(problem.A.cols()) +
                            " columns");

  SolverConfig config;
  config.step = a.step;
  config.max_iter = a.max_iter;
  config.rel_tol = a.tol;
  config.record_trace = !a.trace.empty();
  const SolveResult res = apg_solve(problem, config);

  write_vector_csv(a.out, res.x);
  if (!a.trace.empty()) {
    auto file = open_output(a.trace);
    file << "iter,objective\n";
    for (const TraceRecord& r : res.trace.records)
      file << r.iter << ',' << format_double(r.objective) << '\n';
  }
  out << (res.converged ? "converged" : "stopped") << " after " << res.iterations
      << " iterations, objective " << format_double(objective(problem, res.x)) << ", step "
      << format_double(res.step) << "; wrote " << a.out << '\n';
  return kOk;
}

// ---- bench --------------------------------------------------------------

struct BenchArgs {
  Index m = 256;
  Index l = 1024;
  Index r = 128;
  double sigma = 0.001;
  std::optional<double> lambda;
  double lambda_rel = 0.001;
  int trials = 100;
  std::optional<std::uint64_t> seed;
  std::string levels;
  std::string variants;
  int max_iter = 1000;
  double tol = 1e-8;
  std::size_t workers = 0;
  std::string out;
  std::string svg;
};

ExperimentConfig bench_config(const BenchArgs& a) {
  if (!a.seed) throw UsageError("--seed is required");
  ExperimentConfig c;
  c.m = a.m;
  c.l = a.l;
  c.r = a.r;
  c.sigma = a.sigma;
  c.lambda = a.lambda;
  c.lambda_rel = a.lambda_rel;
  c.trials = a.trials;
  c.seed = *a.seed;
  if (!a.variants.empty()) c.variants = parse_variants(a.variants);
  c.solver.max_iter = a.max_iter;
  c.solver.rel_tol = a.tol;
  c.workers = a.workers ? std::min(a.workers, worker_limit()) : worker_limit();
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  if (c.solver.max_iter < 0) throw UsageError("--max-iter must be nonnegative");
  return c;
}

std::vector<double> parse_levels(const std::string& text, std::vector<double> fallback) {
  if (text.empty()) return fallback;
  const Vector v = parse_list(text, "--levels");
  for (double x : v)
    if (!(x >= 0.0 && x <= 1.0)) throw UsageError("--levels must lie in [0, 1]");
  return {v.data(), v.data() + v.size()};
}

int cmd_sweep(const BenchArgs& a, std::ostream& out) {
  const ExperimentConfig c = bench_config(a);
  const auto levels = parse_levels(a.levels, {0.01, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30});
  const SweepResult result = run_sweep(c, levels);
  auto file = open_output(a.out);
  write_sweep_csv(file, result);
  if (!a.svg.empty()) {
    std::vector<svg::Series> series;
    for (const Variant& v : c.variants) {
      svg::Series s{variant_name(v.p, v.q), {}};
      for (const SweepRow& row : result.rows)
        if (row.p == v.p && row.q == v.q) s.points.emplace_back(row.sparsity_level, row.success_rate);
      series.push_back(std::move(s));
    }
    svg::write_line_plot(a.svg, series, {"success rate", "sparsity level k/r", "success rate", false});
  }
  out << "ran " << levels.size() << " levels x " << c.variants.size() << " variants x "
      << c.trials << " trials; wrote " << a.out << '\n';
  return kOk;
}

int cmd_convergence(const BenchArgs& a, std::ostream& out) {
  const ExperimentConfig c = bench_config(a);
  const auto levels = parse_levels(a.levels, {0.01});
  if (levels.size() != 1) throw UsageError("convergence takes exactly one --levels value");
  const auto rows = run_convergence(c, levels.front(), c.solver.max_iter);
  auto file = open_output(a.out);
  write_convergence_csv(file, rows);
  if (!a.svg.empty()) {
    std::vector<svg::Series> series;
    for (const Variant& v : c.variants) {
      svg::Series s{variant_name(v.p, v.q), {}};
      for (const ConvergenceRow& row : rows)
        if (row.p == v.p && row.q == v.q) s.points.emplace_back(row.iter, row.rel_error);
      series.push_back(std::move(s));
    }
    svg::write_line_plot(a.svg, series,
                         {"relative error", "iteration", "||x - x_true|| / ||x_true||", true});
  }
  out << "traced " << c.variants.size() << " variants at level " << format_double(levels.front())
      << "; wrote " << a.out << '\n';
  return kOk;
}

void add_bench_flags(CLI::App* cmd, BenchArgs& a) {
  cmd->add_option("--m", a.m, "rows of A")->capture_default_str();
  cmd->add_option("--l", a.l, "columns of A")->capture_default_str();
  cmd->add_option("--r", a.r, "number of equal-size groups")->capture_default_str();
  cmd->add_option("--sigma", a.sigma, "noise level")->capture_default_str();
  cmd->add_option("--lambda", a.lambda, "fixed lambda (overrides --lambda-rel)");
  cmd->add_option("--lambda-rel", a.lambda_rel, "lambda = lambda_rel * ||A^T b||_inf")
      ->capture_default_str();
  cmd->add_option("--trials", a.trials, "instances per level")->capture_default_str();
  cmd->add_option("--seed", a.seed, "RNG seed (required)");
  cmd->add_option("--levels", a.levels, "comma-separated sparsity levels k/r");
  cmd->add_option("--variants", a.variants, "comma-separated p:q[:lambda_scale]");
  cmd->add_option("--max-iter", a.max_iter, "solver iteration cap")->capture_default_str();
  cmd->add_option("--tol", a.tol, "solver relative-change tolerance")->capture_default_str();
  cmd->add_option("--workers", a.workers, "worker threads (default: all, see GROUPPROX_THREADS)");
  cmd->add_option("--out", a.out, "CSV output")->required();
  cmd->add_option("--svg", a.svg, "optional SVG plot");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proximal operators of group lq penalties and a sparse recovery solver",
               "groupprox"};
  app.require_subcommand(1);

  ProxArgs prox;
  auto* c_prox = app.add_subcommand("prox", "evaluate the prox of nu * ||.||_p^q at y");
  c_prox->add_option("--p", prox.p, "block norm, 1 or 2")->capture_default_str();
  c_prox->add_option("--q", prox.q, "exponent in [0, 1]")->required();
  c_prox->add_option("--nu", prox.nu, "penalty weight")->capture_default_str();
  c_prox->add_option("--y", prox.y, "comma-separated point")->required();
  auto* json_flag = c_prox->add_flag("--json", prox.json, "JSON report");
  c_prox->add_flag("--table", prox.table, "candidate table only")->excludes(json_flag);

  RegionArgs region;
  auto* c_region = app.add_subcommand("region", "scan the zero region of the prox in R^2");
  c_region->add_option("--p", region.p, "block norm, 1 or 2")->capture_default_str();
  c_region->add_option("--q", region.q, "exponent in [0, 1]")->required();
  c_region->add_option("--nu", region.nu, "penalty weight")->capture_default_str();
  c_region->add_option("--min", region.min, "lower bound of both axes")->capture_default_str();
  c_region->add_option("--max", region.max, "upper bound of both axes")->capture_default_str();
  c_region->add_option("--step", region.step, "grid spacing")->capture_default_str();
  c_region->add_option("--out", region.out, "CSV output")->required();
  c_region->add_option("--svg", region.svg, "optional SVG heatmap");

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "minimize ||Ax - b||^2 / 2 + lambda ||x||_{p,q}^q");
  c_solve->add_option("--matrix", solve.matrix, "A as row-major CSV")->required();
  c_solve->add_option("--rhs", solve.rhs, "b, one value per line")->required();
  c_solve->add_option("--groups", solve.groups, "JSON array of index arrays")->required();
  c_solve->add_option("--lambda", solve.lambda, "regularization weight")->required();
  c_solve->add_option("--p", solve.p, "block norm, 1 or 2")->capture_default_str();
  c_solve->add_option("--q", solve.q, "exponent in [0, 1]")->capture_default_str();
  c_solve->add_option("--step", solve.step, "gradient step (default 0.99 / ||A||^2)");
  c_solve->add_option("--max-iter", solve.max_iter, "iteration cap")->capture_default_str();
  c_solve->add_option("--tol", solve.tol, "relative-change tolerance")->capture_default_str();
  c_solve->add_option("--out", solve.out, "solution CSV")->required();
  c_solve->add_option("--trace", solve.trace, "optional per-iteration objective CSV");

  BenchArgs sweep, conv;
  auto* c_bench = app.add_subcommand("bench", "synthetic recovery experiments");
  c_bench->require_subcommand(1);
  auto* c_sweep = c_bench->add_subcommand("sweep", "success rate against sparsity level");
  add_bench_flags(c_sweep, sweep);
  auto* c_conv = c_bench->add_subcommand("convergence", "relative error per iteration");
  add_bench_flags(c_conv, conv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (c_prox->parsed()) return cmd_prox(prox, out);
    if (c_region->parsed()) return cmd_region(region, out);
    if (c_solve->parsed()) return cmd_solve(solve, out);
    if (c_sweep->parsed()) return cmd_sweep(sweep, out);
    if (c_conv->parsed()) return cmd_convergence(conv, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kFileError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kDimension;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace groupprox::cli
