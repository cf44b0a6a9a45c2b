#pragma once

#include <groupprox/region.hpp>

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace groupprox::svg {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
};

/// Line plot with axes, ticks and a legend.
void write_line_plot(const std::filesystem::path& path, const std::vector<Series>& series,
                     const PlotOptions& options);

/// Zero cells of the grid drawn as filled squares over the scanned rectangle.
void write_region_heatmap(const std::filesystem::path& path, const RegionGrid& grid,
                          const std::string& title);

}  // namespace groupprox::svg
