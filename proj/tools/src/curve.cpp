#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pairbij/cli.hpp"

namespace pairbij::cli {

CurvePath curve_path(const charpair::PairingFamily& family, std::uint64_t count) {
  CurvePath path;
  path.reserve(count + 1);
  for (std::uint64_t n = 0; n <= count; ++n) {
    try {
      path.push_back(family.unpair(n));
    } catch (const Error& e) {
      throw CurveError(n, e.what());
    }
  }
  return path;
}

void write_csv(const CurvePath& path, std::ostream& out) {
  out << "n,x,y\n";
  for (std::size_t n = 0; n < path.size(); ++n) {
    out << n << ',' << path[n].first << ',' << path[n].second << '\n';
  }
}

void write_svg(const CurvePath& path, std::ostream& out) {
  constexpr double kSize = 1000.0;
  constexpr double kMargin = 10.0;
  double extent = 1.0;
  for (const auto& p : path) {
    extent = std::max({extent, p.first.to_double(), p.second.to_double()});
  }
  const double scale = (kSize - 2 * kMargin) / extent;

  std::ostringstream points;
  points << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) points << ' ';
    points << kMargin + path[i].first.to_double() * scale << ','
           << kSize - kMargin - path[i].second.to_double() * scale;
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" "
         "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
      << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\""
      << points.str() << "\"/>\n"
      << "</svg>\n";
}

}  // namespace pairbij::cli
