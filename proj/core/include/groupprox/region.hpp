#pragma once

#include <groupprox/common.hpp>
#include <groupprox/scalar_prox.hpp>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace groupprox {

struct Rect {
  double x_min = 0.0;
  double x_max = 2.0;
  double y_min = 0.0;
  double y_max = 2.0;
};

/// Boolean grid over a rectangle in R^2; cell (i, j) sits at
/// (x_min + i * step, y_min + j * step).
struct RegionGrid {
  Rect bounds;
  double step = 0.0;
  Index nx = 0;
  Index ny = 0;
  std::vector<std::uint8_t> zero;  ///< row-major in i, then j

  double x(Index i) const { return bounds.x_min + static_cast<double>(i) * step; }
  double y(Index j) const { return bounds.y_min + static_cast<double>(j) * step; }
  bool is_zero(Index i, Index j) const {
    return zero[static_cast<std::size_t>(i * ny + j)] != 0;
  }
};

/// Marks every grid point y whose prox set is exactly {0}.
RegionGrid zero_region_scan(const Rect& bounds, double step, const ScalarPenalty& pen,
                            BlockNorm p = BlockNorm::l1, std::size_t workers = 1);

/// CSV with header y1,y2,is_zero.
void write_region_csv(std::ostream& out, const RegionGrid& grid);

}  // namespace groupprox
