// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Pass criterion numbers as arguments to run a subset.

#include <groupprox/block_prox.hpp>
#include <groupprox/io.hpp>
#include <groupprox/parallel.hpp>
#include <groupprox/oracle.hpp>
#include <groupprox/recovery_bench.hpp>
#include <groupprox/region.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace groupprox;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed checks with a short reason each.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 5) reasons_ += (reasons_.empty() ? "" : "; ") + what;
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(10);
    s << what << " = " << got << " (want " << want << " +- " << tol << ")";
    expect(std::abs(got - want) <= tol, s.str());
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) +
                       " checks failed: " + reasons_};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string reasons_;
};

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome example_one() {
  Checker c;
  const ScalarPenalty pen(1.0, 0.5);
  const Vector y = vec({5.0 / 3, 1.0 / 3});
  const auto p = prox_l1q(y, pen);
  c.expect(p.size() == 1, "single minimizer");
  if (p.size() == 1) {
    c.near(p.minimizers[0][0], 1.2126, 1e-3, "u1");
    c.near(p.minimizers[0][1], 0.0, 1e-3, "u2");
  }
  c.near(p.objective, 1.2598, 1e-3, "J*");
  const double rival = l1q_objective(y, vec({7.0 / 6, -1.0 / 6}), pen);
  c.near(rival, 1.405, 1e-3, "J(7/6,-1/6)");
  c.expect(rival > p.objective, "rival is worse");
  c.near(l1q_objective(y, Vector::Zero(2), pen), 13.0 / 9, 1e-12, "J(0)");

  // Median wall time of repeated evaluations.
  std::vector<double> times;
  for (int i = 0; i < 101; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto again = prox_l1q(y, pen);
    times.push_back(seconds_since(t0));
    c.expect(again.objective == p.objective, "repeatable");
  }
  std::nth_element(times.begin(), times.begin() + 50, times.end());
  c.expect(times[50] < 1e-3, "runtime under 1 ms");
  return c.outcome("u* = (" + fmt(p.minimizers[0][0]) + ", 0), J* = " + fmt(p.objective) +
                   ", median " + fmt(times[50] * 1e6, 3) + " us");
}

Outcome example_two() {
  Checker c;
  const ScalarPenalty pen(1.0, 2.0 / 3);
  const Vector y = vec({1.5, 0.7});
  const auto p = prox_l1q(y, pen);
  c.expect(p.size() == 1, "single minimizer");
  if (p.size() == 1) {
    c.near(p.minimizers[0][0], 0.774, 1e-3, "u1");
    c.near(p.minimizers[0][1], 0.0, 1e-3, "u2");
  }
  const auto rows = support_diagnostics(sort_signed(y), pen);
  c.expect(rows.size() == 2 && rows[0].c && rows[1].c, "both support sizes have c_s");
  if (rows.size() == 2 && rows[0].c && rows[1].c) {
    c.near(*rows[0].c, 0.726, 1e-3, "c1");
    c.near(*rows[1].c, 0.753, 1e-3, "c2");
    c.expect(!rows[1].feasible, "s = 2 infeasible");
  }
  const double j0 = l1q_objective(y, Vector::Zero(2), pen);
  c.near(p.objective, 1.3515, 1e-3, "J*");
  c.near(j0, 1.37, 1e-3, "J(0)");
  c.expect(p.objective < j0, "J* < J(0)");
  return c.outcome("u* = (" + fmt(p.minimizers[0][0]) + ", 0), J* = " + fmt(p.objective) +
                   " < J(0) = " + fmt(j0));
}

Outcome boundary_ties() {
  Checker c;
  const ScalarPenalty pen(1.0, 0.5);
  auto two_valued = [&](const Vector& y, const Vector& nonzero, const std::string& name) {
    const auto p = prox_l1q(y, pen);
    c.expect(p.size() == 2, name + ": two minimizers");
    if (p.size() != 2) return;
    c.expect(p.minimizers[0].isZero(0.0), name + ": first is 0");
    c.expect((p.minimizers[1] - nonzero).lpNorm<Eigen::Infinity>() <= 1e-9,
             name + ": second minimizer");
    const double dj = std::abs(l1q_objective(y, p.minimizers[0], pen) -
                               l1q_objective(y, p.minimizers[1], pen));
    c.expect(dj <= 1e-9, name + ": |dJ| = " + fmt(dj));
  };
  two_valued(vec({1.5, 0.2}), vec({1.0, 0.0}), "(1.5, 0.2)");
  two_valued(vec({1.5, 0.5}), vec({1.0, 0.0}), "(3/2, 1/2)");
  const double tau = 3.0 / std::pow(2.0, 4.0 / 3.0);
  two_valued(vec({tau, tau}), Vector::Constant(2, std::pow(2.0, -1.0 / 3)), "tau (1, 1)");
  return c.outcome("three boundary points are two-valued {0, u}");
}

Outcome scalar_thresholds() {
  Checker c;
  c.near(threshold_c({1.0, 0.5}), 1.5, 1e-12, "c(1, 1/2)");
  c.near(jump_rho({1.0, 0.5}), 1.0, 1e-12, "rho(1, 1/2)");
  c.near(threshold_c({1.0, 2.0 / 3}), 2.0 * std::pow(2.0 / 3, 0.75), 1e-12, "c(1, 2/3)");
  c.near(t_tilde({1.0, 0.5}, 1), 1.1906, 1e-3, "t~(1/2, s=1)");
  c.near(t_tilde({1.0, 0.5}, 2), 1.8899, 1e-3, "t~(1/2, s=2)");
  c.near(t_tilde({1.0, 2.0 / 3}, 1), 1.2946, 1e-3, "t~(2/3, s=1)");
  c.near(t_tilde({1.0, 2.0 / 3}, 2), 2.1773, 1e-3, "t~(2/3, s=2)");
  return c.outcome("c = 1.5, rho = 1, c(2/3) = " + fmt(threshold_c({1.0, 2.0 / 3})) +
                   ", t~ = 1.1906 / 1.8899 / 1.2946 / 2.1773");
}

Outcome oracle_equivalence() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> nu_dist(0.25, 4.0), y_dist(0.0, 3.0);
  std::uniform_int_distribution<int> n_dist(1, 3), q_pick(0, 3), p_pick(1, 2);
  const double qs[] = {0.3, 0.5, 2.0 / 3, 0.8};
  double worst_gap = -1e300, worst_coord = 0.0;
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = n_dist(rng);
    const ScalarPenalty pen(nu_dist(rng), qs[q_pick(rng)]);
    const BlockNorm p = block_norm_from_int(p_pick(rng));
    Vector y(n);
    for (Index i = 0; i < n; ++i) y[i] = y_dist(rng);

    const ProxSet exact = prox_block(y, pen, p);
    const OracleResult grid = grid_min(y, pen, p, 3);
    const double gap = exact.objective - grid.objective;
    worst_gap = std::max(worst_gap, gap);
    c.expect(gap <= 1e-4, "J* - oracle = " + fmt(gap) + " at trial " + std::to_string(trial));

    auto support = [](const Vector& v) {
      std::vector<bool> s(static_cast<std::size_t>(v.size()));
      for (Index i = 0; i < v.size(); ++i) s[static_cast<std::size_t>(i)] = v[i] != 0.0;
      return s;
    };
    for (const Vector& m : exact.minimizers) {
      if (support(m) != support(grid.minimizer)) continue;
      ++compared;
      const double d = (m - grid.minimizer).lpNorm<Eigen::Infinity>();
      worst_coord = std::max(worst_coord, d / grid.grid_resolution);
      c.expect(d <= 2.0 * grid.grid_resolution,
               "coordinate gap " + fmt(d) + " at trial " + std::to_string(trial));
      break;
    }
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 60.0, "runtime " + fmt(elapsed) + " s");
  return c.outcome("1000 instances, max(J* - oracle) = " + fmt(worst_gap) + ", " +
                   std::to_string(compared) + " support matches, worst coord gap " +
                   fmt(worst_coord, 3) + " x resolution, " + fmt(elapsed, 3) + " s");
}

Outcome property_suite() {
  Checker c;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> nu_dist(0.2, 3.0), q_dist(0.05, 0.95), val(-3.0, 3.0),
      alpha_dist(0.25, 4.0);
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::bernoulli_distribution flip(0.5);
  int cases = 0;

  for (int trial = 0; trial < 4000; ++trial) {
    const ScalarPenalty pen(nu_dist(rng), q_dist(rng));
    const BlockNorm p = trial % 2 ? BlockNorm::l1 : BlockNorm::l2;
    const Index n = n_dist(rng);
    Vector y(n);
    for (Index i = 0; i < n; ++i) y[i] = val(rng);
    const ProxSet base = prox_block(y, pen, p);
    ++cases;

    // Stationarity on the support.
    for (const Vector& m : base.minimizers) {
      if (m.isZero(0.0)) continue;
      const double norm = block_norm(m, p);
      const double q = pen.q();
      for (Index i = 0; i < n; ++i) {
        if (m[i] == 0.0) continue;
        const double dnorm = p == BlockNorm::l1 ? (m[i] > 0 ? 1.0 : -1.0) : m[i] / norm;
        const double resid = m[i] - y[i] + pen.nu() * q * std::pow(norm, q - 1.0) * dnorm;
        c.expect(std::abs(resid) <= 1e-8, "stationarity residual " + fmt(resid));
      }
    }

    // Signed-permutation equivariance.
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> signs(static_cast<std::size_t>(n));
    for (double& s : signs) s = flip(rng) ? -1.0 : 1.0;
    const SignedPermutation P(order, signs);
    const ProxSet moved = prox_block(P.apply(y), pen, p);
    c.expect(moved.size() == base.size(), "equivariance: set size");
    if (moved.size() == base.size())
      for (std::size_t k = 0; k < base.size(); ++k)
        c.expect((moved.minimizers[k] - P.apply(base.minimizers[k])).lpNorm<Eigen::Infinity>() <=
                     1e-12,
                 "equivariance");

    // Odd symmetry.
    const ProxSet neg = prox_block(-y, pen, p);
    c.expect(neg.size() == base.size(), "odd symmetry: set size");
    if (neg.size() == base.size())
      for (std::size_t k = 0; k < base.size(); ++k)
        c.expect((neg.minimizers[k] + base.minimizers[k]).lpNorm<Eigen::Infinity>() <= 1e-12,
                 "odd symmetry");

    // Scaling: prox_nu(alpha y) = alpha prox_{nu alpha^{q-2}}(y).
    const double alpha = alpha_dist(rng);
    const ProxSet lhs = prox_block(alpha * y, pen, p);
    const ProxSet rhs = prox_block(y, pen.scaled(std::pow(alpha, pen.q() - 2.0)), p);
    if (lhs.size() == rhs.size()) {
      for (std::size_t k = 0; k < lhs.size(); ++k)
        c.expect((lhs.minimizers[k] - alpha * rhs.minimizers[k]).lpNorm<Eigen::Infinity>() <=
                     1e-9 * (1.0 + alpha * y.lpNorm<Eigen::Infinity>()),
                 "scaling identity");
    } else {
      // Only a rounding-level tie may flip the set size.
      const double gap = std::abs(lhs.objective - alpha * alpha * rhs.objective);
      c.expect(gap <= 1e-9 * (1.0 + lhs.objective), "scaling identity: set size");
    }

    // Max-support consistency for p = 1.
    if (p == BlockNorm::l1 && !base.is_zero()) {
      const SortedAbsView view = sort_signed(y);
      for (int s = static_cast<int>(n); s >= 1; --s) {
        if (auto cand = candidate_for_support(view, s, pen)) {
          c.expect(std::abs(cand->objective - base.objective) <= 1e-10 * (1.0 + base.objective),
                   "max-support candidate attains J*");
          break;
        }
      }
    }
  }

  // Downward closure of the zero region on a 0.02 grid of [0, 2]^2.
  for (double q : {0.2, 0.5, 2.0 / 3, 0.9}) {
    for (BlockNorm p : {BlockNorm::l1, BlockNorm::l2}) {
      const RegionGrid g = zero_region_scan({}, 0.02, {1.0, q}, p);
      for (Index i = 0; i < g.nx; ++i)
        for (Index j = 0; j < g.ny; ++j) {
          if (!g.is_zero(i, j)) continue;
          if (i > 0) c.expect(g.is_zero(i - 1, j), "downward closure");
          if (j > 0) c.expect(g.is_zero(i, j - 1), "downward closure");
        }
    }
  }
  return c.outcome(std::to_string(cases) + " random blocks and 8 region scans, 0 failures");
}

Outcome region_geometry() {
  Checker c;
  const double step = 0.005;
  auto check = [&](const RegionGrid& g, const std::function<double(double, double)>& norm,
                   double radius, const std::string& name) {
    int mismatches = 0;
    for (Index i = 0; i < g.nx; ++i)
      for (Index j = 0; j < g.ny; ++j) {
        const double d = norm(g.x(i), g.y(j)) - radius;
        // Within one grid step of the boundary either answer is allowed.
        if (std::abs(d) <= step) continue;
        if (g.is_zero(i, j) != (d < 0.0)) ++mismatches;
      }
    c.expect(mismatches == 0, name + ": " + std::to_string(mismatches) + " mismatches");
  };
  auto l2 = [](double a, double b) { return std::hypot(a, b); };
  auto linf = [](double a, double b) { return std::max(std::abs(a), std::abs(b)); };
  check(zero_region_scan({}, step, {1.0, 0.0}, BlockNorm::l1), l2, std::sqrt(2.0), "q=0, p=1");
  check(zero_region_scan({}, step, {1.0, 0.0}, BlockNorm::l2), l2, std::sqrt(2.0), "q=0, p=2");
  check(zero_region_scan({}, step, {1.0, 1.0}, BlockNorm::l1), linf, 1.0, "q=1, p=1");
  return c.outcome("q=0 boundary ||y||_2 = sqrt(2), q=1 boundary ||y||_inf = 1 at step 0.005");
}

ExperimentConfig desk_config() {
  ExperimentConfig c;
  c.m = 64;
  c.l = 256;
  c.r = 32;
  c.sigma = 0.001;
  c.trials = 20;
  c.seed = 42;
  c.workers = 1;
  return c;
}

Outcome recovery_experiment() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig cfg = desk_config();
  // The five default variants plus plain l1 as the p = 1, q = 1 comparator.
  cfg.variants = default_variants();
  cfg.variants.push_back({BlockNorm::l1, 1.0, 1.0});
  std::vector<double> levels;
  for (int k = 1; k <= 8; ++k) levels.push_back(k / 32.0);
  const SweepResult res = run_sweep(cfg, levels);
  const double elapsed = seconds_since(t0);

  auto rate = [&](double level, BlockNorm p, double q) {
    for (const SweepRow& row : res.rows)
      if (row.sparsity_level == level && row.p == p && row.q == q) return row.success_rate;
    return -1.0;
  };
  for (const Variant& v : default_variants())
    c.expect(rate(levels.front(), v.p, v.q) == 1.0,
             "k=1 rate " + fmt(rate(levels.front(), v.p, v.q)) + " for p=" +
                 std::to_string(static_cast<int>(v.p)) + " q=" + fmt(v.q, 3));

  std::string witness;
  for (std::size_t i = 1; i + 1 < levels.size() && witness.empty(); ++i) {
    const double lv = levels[i];
    const bool p1 = rate(lv, BlockNorm::l1, 0.5) >= rate(lv, BlockNorm::l1, 1.0);
    const bool p2 = rate(lv, BlockNorm::l2, 0.5) >= rate(lv, BlockNorm::l2, 1.0);
    const bool informative = rate(lv, BlockNorm::l1, 1.0) < 1.0 || rate(lv, BlockNorm::l2, 1.0) < 1.0;
    if (p1 && p2 && informative)
      witness = "k/r = " + fmt(lv) + ": (1,1/2) " + fmt(rate(lv, BlockNorm::l1, 0.5)) +
                " >= (1,1) " + fmt(rate(lv, BlockNorm::l1, 1.0)) + ", (2,1/2) " +
                fmt(rate(lv, BlockNorm::l2, 0.5)) + " >= (2,1) " +
                fmt(rate(lv, BlockNorm::l2, 1.0));
  }
  c.expect(!witness.empty(), "no mid-range level where q=1/2 matches or beats q=1 for both p");
  c.expect(elapsed < 600.0, "runtime " + fmt(elapsed) + " s");
  return c.outcome("all five variants 1.0 at k=1; " + witness + "; " + fmt(elapsed, 3) + " s");
}

Outcome convergence_order() {
  Checker c;
  ExperimentConfig cfg;  // m = 256, l = 1024, r = 128
  cfg.seed = 42;
  cfg.variants = {{BlockNorm::l1, 0.5, 1.0}, {BlockNorm::l2, 0.5, 1.0}};
  cfg.solver.rel_tol = 0.0;
  const auto rows = run_convergence(cfg, 0.01, 50);
  std::vector<double> e1, e2;
  for (const ConvergenceRow& row : rows) (row.p == BlockNorm::l1 ? e1 : e2).push_back(row.rel_error);
  int first = -1;
  for (std::size_t k = 1; k < std::min(e1.size(), e2.size()); ++k)
    if (e1[k] < e2[k]) {
      first = static_cast<int>(k);
      break;
    }
  if (first < 0)
    return {false, "documented deviation: on seed 42 the p=1 trace never drops below the p=2 "
                   "trace within 50 iterations"};
  return c.outcome("p=1,q=1/2 below p=2,q=1/2 from iteration " + std::to_string(first) +
                   " (" + fmt(e1[static_cast<std::size_t>(first)]) + " < " +
                   fmt(e2[static_cast<std::size_t>(first)]) + "); at 50: " + fmt(e1.back()) +
                   " vs " + fmt(e2.back()));
}

Outcome full_scale_smoke() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig cfg;  // m = 256, l = 1024, r = 128, 100 trials
  cfg.seed = 2024;
  cfg.workers = worker_limit();
  const std::vector<double> levels{0.01, 0.10};
  const std::string path = "acceptance_full_sweep.csv";
  {
    auto out = open_output(path);
    write_sweep_csv(out, run_sweep(cfg, levels));
  }
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  c.expect(line == "sparsity_level,p,q,success_rate,trials", "header: " + line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> fields;
    try {
      while (std::getline(ss, cell, ',')) fields.push_back(parse_double(cell));
    } catch (const IoError&) {
      c.expect(false, "unparsable row: " + line);
      continue;
    }
    c.expect(fields.size() == 5, "five fields: " + line);
    if (fields.size() == 5) {
      c.expect(fields[3] >= 0.0 && fields[3] <= 1.0, "rate in [0, 1]: " + line);
      c.expect(fields[4] == 100.0, "100 trials: " + line);
    }
  }
  c.expect(rows == levels.size() * cfg.variants.size(), "row count " + std::to_string(rows));
  return c.outcome(std::to_string(rows) + " rows at m=256, l=1024, 100 trials in " +
                   fmt(seconds_since(t0), 3) + " s; wrote " + path);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"first counterexample", example_one},
      {"second counterexample", example_two},
      {"boundary multi-valuedness", boundary_ties},
      {"scalar closed-form thresholds", scalar_thresholds},
      {"oracle equivalence", oracle_equivalence},
      {"property suite", property_suite},
      {"region geometry", region_geometry},
      {"recovery experiment", recovery_experiment},
      {"convergence order", convergence_order},
      {"full-scale smoke run", full_scale_smoke},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << id << " (" << criteria[i].first << "): "
              << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
