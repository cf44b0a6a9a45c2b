#include <groupprox/region.hpp>

#include <groupprox/block_prox.hpp>
#include <groupprox/io.hpp>
#include <groupprox/parallel.hpp>

#include <cmath>
#include <ostream>

namespace groupprox {

namespace {

Index axis_points(double lo, double hi, double step) {
  if (hi < lo) throw InvalidArgument("region bounds: max below min");
  // Tolerate rounding in (hi - lo) / step so the upper edge is included.
  return static_cast<Index>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

RegionGrid zero_region_scan(const Rect& bounds, double step, const ScalarPenalty& pen,
                            BlockNorm p, std::size_t workers) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw InvalidArgument("region step must be positive");
  RegionGrid grid;
  grid.bounds = bounds;
  grid.step = step;
  grid.nx = axis_points(bounds.x_min, bounds.x_max, step);
  grid.ny = axis_points(bounds.y_min, bounds.y_max, step);
  grid.zero.assign(static_cast<std::size_t>(grid.nx * grid.ny), 0);

  parallel_for(static_cast<std::size_t>(grid.nx), workers, [&](std::size_t row) {
    const auto i = static_cast<Index>(row);
    Vector y(2);
    for (Index j = 0; j < grid.ny; ++j) {
      y << grid.x(i), grid.y(j);
      grid.zero[static_cast<std::size_t>(i * grid.ny + j)] =
          prox_block(y, pen, p).is_zero() ? 1 : 0;
    }
  });
  return grid;
}

void write_region_csv(std::ostream& out, const RegionGrid& grid) {
  out << "y1,y2,is_zero\n";
  for (Index i = 0; i < grid.nx; ++i)
    for (Index j = 0; j < grid.ny; ++j)
      out << format_double(grid.x(i)) << ',' << format_double(grid.y(j)) << ','
          << (grid.is_zero(i, j) ? 1 : 0) << '\n';
}

}  // namespace groupprox
