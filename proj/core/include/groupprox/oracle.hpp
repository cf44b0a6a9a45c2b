#pragma once

#include <groupprox/common.hpp>
#include <groupprox/scalar_prox.hpp>

namespace groupprox {

struct OracleOptions {
  int points_per_axis = 201;
  /// Search only sign(y_i) * [0, |y_i|]. Off: the full box [-|y_i|, |y_i|].
  bool restrict_orthant = true;
};

struct OracleResult {
  Vector minimizer;
  double objective = 0.0;
  double grid_resolution = 0.0;  ///< largest axis step of the final level
};

/// Brute-force minimizer of nu ||u||_p^q + ||u - y||^2 / 2 for n <= 3 by
/// multi-level grid refinement (each level shrinks the step tenfold around
/// the incumbent). Ties go to the lexicographically smallest grid point.
OracleResult grid_min(const Vector& y, const ScalarPenalty& pen, BlockNorm p, int levels,
                      const OracleOptions& options = {});

}  // namespace groupprox
