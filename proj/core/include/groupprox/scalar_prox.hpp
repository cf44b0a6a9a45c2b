#pragma once

#include <groupprox/common.hpp>

#include <vector>

namespace groupprox {

/// Penalty nu * |t|^q with nu > 0 and q in [0, 1].
class ScalarPenalty {
 public:
  ScalarPenalty(double nu, double q);

  double nu() const { return nu_; }
  double q() const { return q_; }

  /// q strictly inside (0, 1), where the nonconvex thresholding rules apply.
  bool fractional() const { return q_ > 0.0 && q_ < 1.0; }

  /// Same exponent, weight multiplied by `factor`.
  ScalarPenalty scaled(double factor) const { return {nu_ * factor, q_}; }

  /// nu * t^q for t >= 0.
  double value(double t) const { return nu_ * pow_q(t, q_); }

 private:
  double nu_;
  double q_;
};

/// All global minimizers of nu|t|^q + (t - tau)^2 / 2. Zero comes first when
/// present; the second entry (if any) is the nonzero minimizer.
struct ScalarProxResult {
  std::vector<double> values;
  double objective = 0.0;

  bool multivalued() const { return values.size() > 1; }
};

enum class RootMethod {
  automatic,  ///< closed forms for q = 1/2 and q = 2/3, iteration otherwise
  iterative,  ///< always safeguarded Newton
};

/// Zero threshold c_{nu,q} of the scalar prox; requires 0 < q < 1.
double threshold_c(const ScalarPenalty& pen);

/// Magnitude rho_{nu,q} of the nonzero minimizer at |tau| = c_{nu,q}.
double jump_rho(const ScalarPenalty& pen);

/// Minimizer abscissa of g(t) = t + nu s q t^{q-1} - b.
double t_hat(const ScalarPenalty& pen, int s);

/// Minimal value of g plus b; g has a root iff b >= t_tilde(s).
double t_tilde(const ScalarPenalty& pen, int s);

/// Largest root of t + nu s q t^{q-1} = b on [t_hat(s), b].
///
/// Throws InvalidArgument when b < t_tilde(s), i.e. when no root exists.
/// Inputs that fall short of t_tilde(s) by rounding only return t_hat(s).
double largest_stationary_root(const ScalarPenalty& pen, int s, double b,
                               RootMethod method = RootMethod::automatic);

/// nu|t|^q + (t - tau)^2 / 2.
double scalar_objective(const ScalarPenalty& pen, double tau, double t);

ScalarProxResult prox_scalar(const ScalarPenalty& pen, double tau);

}  // namespace groupprox
