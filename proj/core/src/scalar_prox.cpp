#include <groupprox/scalar_prox.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace groupprox {

namespace {

constexpr double kBoundaryRelTol = 1e-14;
constexpr double kNewtonResidualTol = 1e-12;
constexpr int kNewtonMaxIter = 200;

void require_fractional(const ScalarPenalty& pen, const char* what) {
  if (!pen.fractional())
    throw InvalidArgument(std::string(what) + " requires 0 < q < 1");
}

void require_support_size(int s) {
  if (s < 1) throw InvalidArgument("support size must be >= 1");
}

// Largest root of w^3 - b w + kappa/2 = 0 (w = sqrt(t)) by the trigonometric
// form; b >= t_tilde guarantees three real roots.
double root_half(double kappa, double b) {
  double arg = -3.0 * std::sqrt(3.0) / 4.0 * kappa * std::pow(b, -1.5);
  if (arg < -1.0 && arg > -1.0 - kBoundaryRelTol) arg = -1.0;
  arg = std::clamp(arg, -1.0, 1.0);
  const double c = std::cos(std::acos(arg) / 3.0);
  return 4.0 * b / 3.0 * c * c;
}

// Radical form for q = 2/3. The second cube root is taken as C^{1/3} / u so
// that large b does not cancel.
double root_two_thirds(double kappa, double b) {
  const double a = b * b / 16.0;
  const double c = 8.0 * kappa * kappa * kappa / 729.0;
  double disc = a * a - c;
  if (disc < 0.0) {
    if (-disc <= kBoundaryRelTol * a * a) disc = 0.0;
    else throw InvalidArgument("stationary equation has no root");
  }
  const double u = std::cbrt(a + std::sqrt(disc));
  const double t = u + std::cbrt(c) / u;
  const double sq = std::sqrt(2.0 * t);
  const double inner = std::max(0.0, 2.0 * b / sq - 2.0 * t);
  const double w = sq + std::sqrt(inner);
  return w * w * w / 8.0;
}

// Newton from the right end with a bisection fallback; g is increasing and
// convex on [lo, hi], so the plain Newton iterates stay in the bracket.
double root_newton(double kappa, double q, double lo, double b) {
  auto g = [&](double t) { return t + kappa * q * std::pow(t, q - 1.0) - b; };
  auto dg = [&](double t) {
    return 1.0 - kappa * q * (1.0 - q) * std::pow(t, q - 2.0);
  };
  const double tol = kNewtonResidualTol * (1.0 + b);
  double hi = b;
  double t = b;
  double gt = g(t);
  for (int it = 0; it < kNewtonMaxIter && std::abs(gt) > tol; ++it) {
    const double slope = dg(t);
    double next = slope > 0.0 ? t - gt / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
    gt = g(t);
    if (gt > 0.0) hi = t;
    else lo = t;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  return t;
}

}  // namespace

ScalarPenalty::ScalarPenalty(double nu, double q) : nu_(nu), q_(q) {
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw InvalidArgument("penalty weight nu must be positive and finite");
  if (!(q >= 0.0 && q <= 1.0))
    throw InvalidArgument("exponent q must lie in [0, 1]");
}

double threshold_c(const ScalarPenalty& pen) {
  require_fractional(pen, "threshold_c");
  const double q = pen.q();
  return (2.0 - q) / (2.0 * (1.0 - q)) * jump_rho(pen);
}

double jump_rho(const ScalarPenalty& pen) {
  require_fractional(pen, "jump_rho");
  const double q = pen.q();
  return std::pow(2.0 * pen.nu() * (1.0 - q), 1.0 / (2.0 - q));
}

double t_hat(const ScalarPenalty& pen, int s) {
  require_fractional(pen, "t_hat");
  require_support_size(s);
  const double q = pen.q();
  return std::pow(pen.nu() * s * q * (1.0 - q), 1.0 / (2.0 - q));
}

double t_tilde(const ScalarPenalty& pen, int s) {
  require_fractional(pen, "t_tilde");
  require_support_size(s);
  const double q = pen.q();
  return (2.0 - q) *
         std::pow(pen.nu() * s * q / std::pow(1.0 - q, 1.0 - q), 1.0 / (2.0 - q));
}

double largest_stationary_root(const ScalarPenalty& pen, int s, double b,
                               RootMethod method) {
  require_fractional(pen, "largest_stationary_root");
  require_support_size(s);
  const double floor = t_tilde(pen, s);
  if (!(b >= floor * (1.0 - kThresholdRelTol)))
    throw InvalidArgument("no stationary root: b is below t_tilde(s)");
  const double lo = t_hat(pen, s);
  if (b <= floor) return lo;

  const double kappa = pen.nu() * s;
  if (method == RootMethod::automatic) {
    if (pen.q() == 0.5) return root_half(kappa, b);
    if (pen.q() == 2.0 / 3.0) return root_two_thirds(kappa, b);
  }
  return root_newton(kappa, pen.q(), lo, b);
}

double scalar_objective(const ScalarPenalty& pen, double tau, double t) {
  const double d = t - tau;
  return pen.value(std::abs(t)) + 0.5 * d * d;
}

ScalarProxResult prox_scalar(const ScalarPenalty& pen, double tau) {
  const double mag = std::abs(tau);
  const double sign = tau < 0.0 ? -1.0 : 1.0;
  const double zero_obj = 0.5 * tau * tau;
  if (mag == 0.0) return {{0.0}, 0.0};

  if (pen.q() == 1.0) {
    const double r = std::max(mag - pen.nu(), 0.0);
    return {{sign * r}, scalar_objective(pen, mag, r)};
  }

  double r = 0.0;
  if (pen.q() == 0.0) {
    r = mag;
  } else {
    if (mag < t_tilde(pen, 1)) return {{0.0}, zero_obj};
    r = largest_stationary_root(pen, 1, mag);
  }

  const double r_obj = scalar_objective(pen, mag, r);
  if (objectives_tie(zero_obj, r_obj, zero_obj))
    return {{0.0, sign * r}, std::min(zero_obj, r_obj)};
  if (r_obj < zero_obj) return {{sign * r}, r_obj};
  return {{0.0}, zero_obj};
}

}  // namespace groupprox
