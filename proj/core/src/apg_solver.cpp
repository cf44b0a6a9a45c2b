#include <groupprox/apg_solver.hpp>

#include <groupprox/block_prox.hpp>

#include <cmath>

namespace groupprox {

namespace {

constexpr int kPowerIterations = 50;
constexpr double kPowerRelTol = 1e-8;
constexpr double kStepSafety = 0.99;

}  // namespace

void ProblemInstance::validate() const {
  if (A.rows() != b.size())
    throw DimensionMismatch("A has " + std::to_string(A.rows()) + " rows but b has " +
                            std::to_string(b.size()) + " entries");
  if (!(lambda > 0.0)) throw InvalidArgument("lambda must be positive");
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidArgument("q must lie in [0, 1]");
  if (partition.dimension() != A.cols())
    throw DimensionMismatch("partition covers " + std::to_string(partition.dimension()) +
                            " indices but A has " + std::to_string(A.cols()) + " columns");
  partition.validate(A.cols());
}

double group_penalty(const Vector& x, const GroupPartition& partition, double lambda,
                     BlockNorm p, double q) {
  double total = 0.0;
  for (Index g = 0; g < partition.group_count(); ++g)
    total += pow_q(block_norm(partition.gather(x, g), p), q);
  return lambda * total;
}

double objective(const ProblemInstance& problem, const Vector& x) {
  return 0.5 * (problem.A * x - problem.b).squaredNorm() +
         group_penalty(x, problem.partition, problem.lambda, problem.p, problem.q);
}

Vector blockwise_prox(const Vector& v, const GroupPartition& partition, double weight,
                      BlockNorm p, double q) {
  if (partition.dimension() != v.size())
    throw DimensionMismatch("blockwise_prox: partition does not match vector size");
  const ScalarPenalty pen(weight, q);
  Vector out(v.size());
  for (Index g = 0; g < partition.group_count(); ++g) {
    const Vector block = partition.gather(v, g);
    partition.scatter(prox_block(block, pen, p).select_for_solver(), g, out);
  }
  return out;
}

double default_step(const Matrix& A) {
  if (A.size() == 0 || A.isZero(0.0)) throw InvalidArgument("default_step: A is zero");
  Vector v = Vector::Ones(A.cols()).normalized();
  double lipschitz = 0.0;
  for (int it = 0; it < kPowerIterations; ++it) {
    const Vector w = A.transpose() * (A * v);
    const double estimate = v.dot(w);
    const double norm = w.norm();
    if (norm == 0.0) break;
    v = w / norm;
    const bool settled = it > 0 && std::abs(estimate - lipschitz) <= kPowerRelTol * estimate;
    lipschitz = estimate;
    if (settled) break;
  }
  if (!(lipschitz > 0.0)) throw InvalidArgument("default_step: power iteration failed");
  return kStepSafety / lipschitz;
}

double next_momentum(double t) { return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t)); }

SolveResult apg_solve(const ProblemInstance& problem, const SolverConfig& config,
                      const Vector& x0, const Vector* truth) {
  problem.validate();
  const Index l = problem.A.cols();
  if (x0.size() != l) throw DimensionMismatch("x0 does not match the number of columns");
  if (truth && truth->size() != l) throw DimensionMismatch("truth does not match dimension");
  if (config.max_iter < 0) throw InvalidArgument("max_iter must be nonnegative");

  SolveResult result;
  result.step = config.step ? *config.step : default_step(problem.A);
  if (!(result.step > 0.0)) throw InvalidArgument("step size must be positive");
  const double weight = problem.lambda * result.step;
  const double truth_norm = truth ? truth->norm() : 0.0;

  const Vector atb = problem.A.transpose() * problem.b;
  Vector x_prev = x0;
  Vector x = x0;
  Vector y = x0;
  double t = 1.0;

  for (int k = 1; k <= config.max_iter; ++k) {
    const Vector grad = problem.A.transpose() * (problem.A * y) - atb;
    x = blockwise_prox(y - result.step * grad, problem.partition, weight, problem.p,
                       problem.q);
    const double t_next = next_momentum(t);
    y = x + ((t - 1.0) / t_next) * (x - x_prev);
    t = t_next;
    result.iterations = k;

    if (config.record_trace) {
      TraceRecord rec{k, objective(problem, x), std::nullopt};
      if (truth && truth_norm > 0.0) rec.rel_error = (x - *truth).norm() / truth_norm;
      result.trace.records.push_back(rec);
    }
    const double change = (x - x_prev).norm() / std::max(1.0, x.norm());
    x_prev = x;
    if (change < config.rel_tol) {
      result.converged = true;
      break;
    }
  }
  result.x = std::move(x);
  return result;
}

SolveResult apg_solve(const ProblemInstance& problem, const SolverConfig& config) {
  return apg_solve(problem, config, Vector::Zero(problem.A.cols()));
}

double fixed_point_residual(const ProblemInstance& problem, const Vector& x, double step) {
  const Vector grad = problem.A.transpose() * (problem.A * x - problem.b);
  const Vector next = blockwise_prox(x - step * grad, problem.partition,
                                     problem.lambda * step, problem.p, problem.q);
  return (x - next).norm();
}

}  // namespace groupprox
