#pragma once

#include <groupprox/common.hpp>
#include <groupprox/partition.hpp>

#include <optional>
#include <vector>

namespace groupprox {

/// min_x  ||A x - b||^2 / 2 + lambda * sum_g ||x_g||_p^q
struct ProblemInstance {
  Matrix A;
  Vector b;
  double lambda = 1.0;
  GroupPartition partition;
  BlockNorm p = BlockNorm::l2;
  double q = 1.0;

  /// Throws DimensionMismatch or InvalidArgument on inconsistent data.
  void validate() const;
};

struct SolverConfig {
  std::optional<double> step;  ///< gradient step nu; empty selects default_step(A)
  int max_iter = 1000;
  double rel_tol = 1e-8;
  bool record_trace = true;
};

struct TraceRecord {
  int iter = 0;
  double objective = 0.0;
  std::optional<double> rel_error;
};

struct SolverTrace {
  std::vector<TraceRecord> records;
};

struct SolveResult {
  Vector x;
  SolverTrace trace;
  int iterations = 0;
  bool converged = false;
  double step = 0.0;
};

/// lambda * sum_g ||x_g||_p^q.
double group_penalty(const Vector& x, const GroupPartition& partition, double lambda,
                     BlockNorm p, double q);

/// F(x) of the problem.
double objective(const ProblemInstance& problem, const Vector& x);

/// Applies the prox of weight * ||.||_p^q to every block independently, taking
/// ProxSet::select_for_solver() where the prox is multivalued.
Vector blockwise_prox(const Vector& v, const GroupPartition& partition, double weight,
                      BlockNorm p, double q);

/// 0.99 / L with L = ||A||_2^2 from power iteration on A^T A.
double default_step(const Matrix& A);

/// t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2.
double next_momentum(double t);

/// Accelerated proximal gradient from x0:
///   x^k     = prox(y^k - nu A^T (A y^k - b))
///   t_{k+1} = next_momentum(t_k)
///   y^{k+1} = x^k + (t_k - 1) / t_{k+1} (x^k - x^{k-1})
/// with t_1 = 1, y^1 = x^0. Stops after max_iter iterations or once
/// ||x^k - x^{k-1}|| / max(1, ||x^k||) < rel_tol. When `truth` is given, the
/// trace also carries ||x^k - truth|| / ||truth||.
SolveResult apg_solve(const ProblemInstance& problem, const SolverConfig& config,
                      const Vector& x0, const Vector* truth = nullptr);

/// Overload starting from x0 = 0.
SolveResult apg_solve(const ProblemInstance& problem, const SolverConfig& config);

/// ||x - blockwise_prox(x - step * A^T (A x - b))||_2; zero at fixed points.
double fixed_point_residual(const ProblemInstance& problem, const Vector& x, double step);

}  // namespace groupprox
