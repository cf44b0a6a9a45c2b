#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace groupprox {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Relative tolerance under which two objective values are treated as equal
/// and both minimizers are reported.
inline constexpr double kTieRelTol = 1e-10;

/// Slack used when comparing an entry against a support threshold c_s.
inline constexpr double kThresholdRelTol = 1e-12;

inline bool objectives_tie(double lhs, double rhs, double reference) {
  return std::abs(lhs - rhs) <= kTieRelTol * (1.0 + std::abs(reference));
}

/// x^q for x >= 0 with the convention 0^0 = 0, so that the q = 0 penalty
/// counts nonzero blocks.
inline double pow_q(double x, double q) {
  if (q == 0.0) return x > 0.0 ? 1.0 : 0.0;
  if (x == 0.0) return 0.0;
  return std::pow(x, q);
}

/// Inner norm of the group penalty ||x_G||_p^q.
enum class BlockNorm { l1 = 1, l2 = 2 };

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace groupprox
