#include <groupprox/l2q_prox.hpp>

#include <cmath>

namespace groupprox {

double l2q_objective(const Vector& y, const Vector& u, const ScalarPenalty& pen) {
  if (y.size() != u.size()) throw DimensionMismatch("l2q_objective: size mismatch");
  return pen.value(u.norm()) + 0.5 * (u - y).squaredNorm();
}

ProxSet prox_l2q(const Vector& y, const ScalarPenalty& pen) {
  const double norm = y.norm();
  if (norm == 0.0) return {{Vector::Zero(y.size())}, 0.0};

  // Rescaling by ||y|| reduces the block problem to a scalar prox at tau = 1.
  const ScalarPenalty radial(pen.nu() * std::pow(norm, pen.q() - 2.0), pen.q());
  const ScalarProxResult scale = prox_scalar(radial, 1.0);

  ProxSet out;
  for (double f : scale.values) out.minimizers.push_back(f * y);
  out.objective = l2q_objective(y, out.minimizers.front(), pen);
  for (const Vector& m : out.minimizers)
    out.objective = std::min(out.objective, l2q_objective(y, m, pen));
  return out;
}

}  // namespace groupprox
