#include "sphconv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sphconv {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  // Avoid "-0.000", which would make output depend on rounding direction.
  return std::string(buf) == "-0.000" ? "0.000" : buf;
}

struct View {
  Vec3d d, u, v;
  double scale, mid;

  std::pair<double, double> screen(const Vec3d& p) const { return {mid + scale * p.dot(u), mid - scale * p.dot(v)}; }
  bool front(const Vec3d& p) const { return p.dot(d) >= 0; }
};

std::string header(int size) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n"
     << "<style>.sphere{fill:none;stroke:#888;stroke-width:1}"
        ".boundary{fill:none;stroke:#1f4e9c;stroke-width:2}"
        ".boundary-hidden{fill:none;stroke:#1f4e9c;stroke-width:1;stroke-dasharray:4 3}"
        ".overlay{fill:none;stroke:#c0392b;stroke-width:1.5}"
        ".overlay-hidden{fill:none;stroke:#c0392b;stroke-width:1;stroke-dasharray:4 3}"
        ".marker{fill:#c0392b}</style>\n";
  return os.str();
}

/// Polyline through the points, split into front and back runs.
void emit_runs(std::ostringstream& os, const View& view, const std::vector<Vec3d>& pts, const std::string& cls) {
  std::size_t i = 0;
  while (i < pts.size()) {
    const bool front = view.front(pts[i]);
    std::size_t j = i;
    while (j + 1 < pts.size() && view.front(pts[j + 1]) == front) ++j;
    // Runs share their boundary point so the drawn curve has no gaps.
    const std::size_t last = std::min(j + 1, pts.size() - 1);
    os << "<path class=\"" << (front ? cls : cls + "-hidden") << "\" d=\"";
    for (std::size_t k = i; k <= last; ++k) {
      const auto [x, y] = view.screen(pts[k]);
      os << (k == i ? "M" : " L") << fmt(x) << " " << fmt(y);
    }
    os << "\"/>\n";
    i = j + 1;
  }
}

}  // namespace

std::string render_svg(const SphericalBody& body, const SvgOptions& opt) {
  const UnitVec d = opt.view.value_or(body.enclosing_center());
  const auto [u, v] = tangent_basis(d.vec());
  const double mid = opt.size / 2.0;
  const View view{d.vec(), u, v, 0.45 * opt.size, mid};

  std::ostringstream os;
  os << header(opt.size);
  os << "<circle class=\"sphere\" cx=\"" << fmt(mid) << "\" cy=\"" << fmt(mid) << "\" r=\"" << fmt(view.scale)
     << "\"/>\n";
  for (const auto& seg : body.segments()) {
    const int k = std::max(8, static_cast<int>(std::ceil(seg.sweep() * std::sin(seg.radius()) / 0.01)));
    std::vector<Vec3d> pts;
    for (int i = 0; i <= k; ++i) pts.push_back(i == 0 ? seg.start().vec() : seg.point(seg.sweep() * i / k));
    emit_runs(os, view, pts, "boundary");
  }
  for (const auto& [p, q] : opt.chords) {
    std::vector<Vec3d> pts;
    const int k = 64;
    const Vec3d t = tangent_toward<double>(p.vec(), q.vec());
    const double len = dist(p, q);
    for (int i = 0; i <= k; ++i) pts.push_back(walk<double>(p.vec(), t, len * i / k).vec());
    emit_runs(os, view, pts, "overlay");
  }
  for (const auto& m : opt.markers) {
    const auto [x, y] = view.screen(m.vec());
    os << "<circle class=\"marker\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const WulffShape& shape, int size) {
  double extent = 0;
  for (const auto& p : shape.boundary) extent = std::max(extent, p.cwiseAbs().maxCoeff());
  const double scale = 0.45 * size / std::max(extent, 1e-12);
  const double mid = size / 2.0;
  std::ostringstream os;
  os << header(size);
  os << "<path class=\"boundary\" d=\"";
  for (std::size_t i = 0; i < shape.boundary.size(); ++i) {
    const auto& p = shape.boundary[i];
    os << (i == 0 ? "M" : " L") << fmt(mid + scale * p.x()) << " " << fmt(mid - scale * p.y());
  }
  os << " Z\"/>\n";
  os << "<circle class=\"marker\" cx=\"" << fmt(mid) << "\" cy=\"" << fmt(mid) << "\" r=\"3\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace sphconv
