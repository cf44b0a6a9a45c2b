#include "svg.hpp"

#include <groupprox/io.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace groupprox::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double frac(double v) const {
    if (log) return (std::log10(v) - lo) / (hi - lo);
    return (v - lo) / (hi - lo);
  }
};

Axis make_axis(double lo, double hi, bool log) {
  Axis a;
  a.log = log;
  if (log) {
    a.lo = std::floor(std::log10(lo));
    a.hi = std::ceil(std::log10(hi));
  } else {
    a.lo = lo;
    a.hi = hi;
  }
  if (!(a.hi > a.lo)) a.hi = a.lo + 1.0;
  return a;
}

std::vector<double> ticks(const Axis& a) {
  std::vector<double> out;
  if (a.log) {
    for (double e = a.lo; e <= a.hi + 1e-9; e += 1.0) out.push_back(std::pow(10.0, e));
    return out;
  }
  for (int i = 0; i <= 5; ++i) out.push_back(a.lo + (a.hi - a.lo) * i / 5.0);
  return out;
}

void header(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(title) << "</text>\n";
}

void frame(std::ostream& out, const Axis& x, const Axis& y, const std::string& x_label,
           const std::string& y_label) {
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\""
      << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ticks(x)) {
    const double px = kLeft + x.frac(t) * pw;
    out << "<line x1=\"" << px << "\" y1=\"" << kTop + ph << "\" x2=\"" << px << "\" y2=\""
        << kTop + ph + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << kTop + ph + 18
        << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
  }
  for (double t : ticks(y)) {
    const double py = kTop + (1.0 - y.frac(t)) * ph;
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kLeft << "\" y2=\""
        << py << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">"
        << num(t) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
      << "<text transform=\"translate(18," << kTop + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";
}

std::ofstream open_svg(const std::filesystem::path& path) { return open_output(path); }

}  // namespace

void write_line_plot(const std::filesystem::path& path, const std::vector<Series>& series,
                     const PlotOptions& options) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      if (options.log_y && !(y > 0.0)) continue;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  if (!std::isfinite(x_lo)) x_lo = 0.0, x_hi = 1.0, y_lo = options.log_y ? 1.0 : 0.0, y_hi = 10.0;
  if (!options.log_y) y_lo = std::min(y_lo, 0.0);

  const Axis xa = make_axis(x_lo, x_hi, false);
  const Axis ya = make_axis(y_lo, y_hi, options.log_y);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;

  auto out = open_svg(path);
  header(out, options.title);
  frame(out, xa, ya, options.x_label, options.y_label);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[i].points) {
      if (options.log_y && !(y > 0.0)) continue;
      out << kLeft + xa.frac(x) * pw << ',' << kTop + (1.0 - ya.frac(y)) * ph << ' ';
    }
    out << "\"/>\n";
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << kWidth - kRight + 12 << "\" y1=\"" << ly << "\" x2=\""
        << kWidth - kRight + 36 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kWidth - kRight + 42 << "\" y=\"" << ly + 4 << "\">"
        << escape(series[i].name) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_region_heatmap(const std::filesystem::path& path, const RegionGrid& grid,
                          const std::string& title) {
  const Axis xa = make_axis(grid.bounds.x_min, grid.bounds.x_max, false);
  const Axis ya = make_axis(grid.bounds.y_min, grid.bounds.y_max, false);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const double cw = grid.step / (xa.hi - xa.lo) * pw;
  const double ch = grid.step / (ya.hi - ya.lo) * ph;

  auto out = open_svg(path);
  header(out, title);
  out << "<g fill=\"#4a6fa5\" shape-rendering=\"crispEdges\">\n";
  // One rectangle per vertical run of zero cells keeps the file small.
  for (Index i = 0; i < grid.nx; ++i) {
    Index j = 0;
    while (j < grid.ny) {
      if (!grid.is_zero(i, j)) {
        ++j;
        continue;
      }
      const Index start = j;
      while (j < grid.ny && grid.is_zero(i, j)) ++j;
      const double x0 = kLeft + xa.frac(grid.x(i)) * pw - cw / 2;
      const double y_top = kTop + (1.0 - ya.frac(grid.y(j - 1))) * ph - ch / 2;
      out << "<rect x=\"" << x0 << "\" y=\"" << y_top << "\" width=\"" << cw << "\" height=\""
          << ch * static_cast<double>(j - start) << "\"/>\n";
    }
  }
  out << "</g>\n";
  frame(out, xa, ya, "y1", "y2");
  out << "<rect x=\"" << kWidth - kRight + 12 << "\" y=\"" << kTop + 2
      << "\" width=\"16\" height=\"12\" fill=\"#4a6fa5\"/>\n"
      << "<text x=\"" << kWidth - kRight + 34 << "\" y=\"" << kTop + 12
      << "\">prox = {0}</text>\n</svg>\n";
}

}  // namespace groupprox::svg
