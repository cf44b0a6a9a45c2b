#pragma once

#include <groupprox/l1q_prox.hpp>

namespace groupprox {

/// nu ||u||_2^q + ||u - y||^2 / 2.
double l2q_objective(const Vector& y, const Vector& u, const ScalarPenalty& pen);

/// Proximal set of nu ||.||_2^q. The result is radial: each minimizer is
/// prox_{nu ||y||^{q-2} |.|^q}(1) * y.
ProxSet prox_l2q(const Vector& y, const ScalarPenalty& pen);

}  // namespace groupprox
