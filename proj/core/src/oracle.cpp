#include <groupprox/oracle.hpp>

#include <groupprox/block_prox.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace groupprox {

namespace {

constexpr int kMaxDim = 3;
constexpr int kRefineHalfWidth = 10;

struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  double target = 0.0;  // y_i in the search frame
  double step = 0.0;
  std::vector<double> points;
};

struct Best {
  std::array<double, kMaxDim> u{};
  double value = std::numeric_limits<double>::infinity();
};

Best scan(const std::array<Axis, kMaxDim>& axes, const ScalarPenalty& pen, BlockNorm p) {
  std::array<std::vector<double>, kMaxDim> half_sq;
  for (int d = 0; d < kMaxDim; ++d) {
    for (double v : axes[d].points) {
      const double diff = v - axes[d].target;
      half_sq[d].push_back(0.5 * diff * diff);
    }
  }
  const double min_tail = *std::min_element(half_sq[2].begin(), half_sq[2].end());
  auto penalty = [&](double a, double b, double c) {
    const double norm = p == BlockNorm::l1 ? std::abs(a) + std::abs(b) + std::abs(c)
                                           : std::sqrt(a * a + b * b + c * c);
    return pen.value(norm);
  };

  Best best;
  const auto& p0 = axes[0].points;
  const auto& p1 = axes[1].points;
  const auto& p2 = axes[2].points;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    for (std::size_t j = 0; j < p1.size(); ++j) {
      const double base = half_sq[0][i] + half_sq[1][j];
      // The penalty is monotone in |u_2|, so u_2 = 0 bounds the inner loop.
      const double floor = penalty(p0[i], p1[j], 0.0);
      if (floor + base + min_tail > best.value) continue;
      for (std::size_t k = 0; k < p2.size(); ++k) {
        const double smooth = base + half_sq[2][k];
        if (floor + smooth > best.value) continue;
        const double value = penalty(p0[i], p1[j], p2[k]) + smooth;
        if (value < best.value) best = {{p0[i], p1[j], p2[k]}, value};
      }
    }
  }
  return best;
}

}  // namespace

OracleResult grid_min(const Vector& y, const ScalarPenalty& pen, BlockNorm p, int levels,
                      const OracleOptions& options) {
  const Index n = y.size();
  if (n > kMaxDim) throw InvalidArgument("grid_min supports n <= 3 only");
  if (levels < 1) throw InvalidArgument("grid_min needs levels >= 1");
  if (options.points_per_axis < 2) throw InvalidArgument("grid_min needs >= 2 points per axis");

  std::array<Axis, kMaxDim> axes;
  std::array<double, kMaxDim> signs{1.0, 1.0, 1.0};
  for (Index d = 0; d < n; ++d) {
    Axis& a = axes[static_cast<std::size_t>(d)];
    if (options.restrict_orthant) {
      signs[static_cast<std::size_t>(d)] = y[d] < 0.0 ? -1.0 : 1.0;
      a.target = std::abs(y[d]);
      a.lo = 0.0;
    } else {
      a.target = y[d];
      a.lo = -std::abs(y[d]);
    }
    a.hi = std::abs(y[d]);
    const int count = a.hi > a.lo ? options.points_per_axis : 1;
    a.step = count > 1 ? (a.hi - a.lo) / (count - 1) : 0.0;
    for (int k = 0; k < count; ++k) a.points.push_back(k + 1 == count ? a.hi : a.lo + k * a.step);
  }
  for (Index d = n; d < kMaxDim; ++d) axes[static_cast<std::size_t>(d)].points = {0.0};
  // Exact zero must be a grid point in the unrestricted box as well.
  for (Axis& a : axes)
    if (!std::binary_search(a.points.begin(), a.points.end(), 0.0) && a.lo < 0.0) {
      a.points.insert(std::upper_bound(a.points.begin(), a.points.end(), 0.0), 0.0);
    }

  auto to_original = [&](const std::array<double, kMaxDim>& u) {
    Vector out(n);
    for (Index d = 0; d < n; ++d)
      out[d] = signs[static_cast<std::size_t>(d)] * u[static_cast<std::size_t>(d)];
    return out;
  };

  OracleResult result;
  Best best = scan(axes, pen, p);
  result.minimizer = to_original(best.u);
  result.objective = block_objective(y, result.minimizer, pen, p);

  for (int level = 1; level < levels; ++level) {
    for (int d = 0; d < kMaxDim; ++d) {
      Axis& a = axes[static_cast<std::size_t>(d)];
      a.step /= 10.0;
      a.points.clear();
      const double center = best.u[static_cast<std::size_t>(d)];
      if (a.step == 0.0) {
        a.points.push_back(center);
        continue;
      }
      for (int k = -kRefineHalfWidth; k <= kRefineHalfWidth; ++k) {
        const double v = k == 0 ? center : center + k * a.step;
        if (v >= a.lo && v <= a.hi) a.points.push_back(v);
      }
    }
    const Best refined = scan(axes, pen, p);
    const Vector candidate = to_original(refined.u);
    const double value = block_objective(y, candidate, pen, p);
    if (value <= result.objective) {
      best = refined;
      result.minimizer = candidate;
      result.objective = value;
    }
  }
  for (const Axis& a : axes) result.grid_resolution = std::max(result.grid_resolution, a.step);
  return result;
}

}  // namespace groupprox
