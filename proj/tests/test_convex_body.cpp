#include <doctest.h>

#include "sphconv/constructors.hpp"
#include "sphconv/convex_body.hpp"
#include "sphconv/metrics.hpp"
#include "support.hpp"

using namespace sphconv;
using sphconv::testing::kPi;

namespace {

const UnitVec e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);

SphericalBody octant() {
  const std::vector<UnitVec> v{e1, e2, e3};
  return SphericalBody::polygon(v);
}

double nearest(const std::vector<UnitVec>& set, const UnitVec& p) {
  double best = kPi;
  for (const auto& q : set) best = std::min(best, dist(p, q));
  return best;
}

}  // namespace

TEST_CASE("hull of the coordinate vectors is the octant") {
  const std::vector<UnitVec> pts{e1, e2, e3};
  const auto h = hull_from_points(pts);
  REQUIRE(h.segments().size() == 3);
  for (const auto& v : h.vertices()) CHECK(nearest(pts, v) < 1e-15);
  CHECK(h.is_polygon());
}

TEST_CASE("interior points are absorbed by the hull") {
  const std::vector<UnitVec> pts{e1, e2, UnitVec(1, 1, 1), e3};
  const auto h = hull_from_points(pts);
  CHECK(h.segments().size() == 3);
  CHECK(h.contains(UnitVec(1, 1, 1)));
}

TEST_CASE("hull errors") {
  const UnitVec p(0.2, 0.3, 0.9), q(0.5, -0.1, 0.4);
  try {
    const std::vector<UnitVec> pts{p, -p, q};
    hull_from_points(pts);
    FAIL("antipodal input accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoEnclosingHemisphere);
  }
  try {
    const std::vector<UnitVec> pts{e1, UnitVec(1, 1, 0), e2};
    hull_from_points(pts);
    FAIL("co-circular input accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateHull);
  }
  const std::vector<UnitVec> two{e1, e2, e1};
  CHECK_THROWS_AS(hull_from_points(two), Error);
}

TEST_CASE("membership") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto body = random_convex_polygon(100 + i, 12, 1.5);
    CHECK(body.contains(body.enclosing_center()));
    CHECK_FALSE(body.contains(-body.enclosing_center()));
    for (const auto& p : boundary_sample(body, 97)) CHECK(body.contains(p));
  }
  const auto c = cap(e3, 0.5);
  CHECK(c.contains(UnitVec(std::sin(0.499), 0, std::cos(0.499))));
  CHECK_FALSE(c.contains(UnitVec(std::sin(0.501), 0, std::cos(0.501))));
}

TEST_CASE("boundary sampling") {
  const auto o = octant();
  const auto three = boundary_sample(o, 3);
  REQUIRE(three.size() == 3);
  for (const auto& p : three) CHECK(nearest({e1, e2, e3}, p) < 1e-15);

  const double rho = 0.6;
  const auto c = cap(e3, rho);
  const auto s = boundary_sample(c, 360);
  REQUIRE(s.size() == 360);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(dist(s[i], e3) == doctest::Approx(rho).epsilon(1e-12));
    const auto& a = s[i].vec();
    const auto& b = s[(i + 1) % s.size()].vec();
    double step = std::atan2(a.x() * b.y() - a.y() * b.x(), a.x() * b.x() + a.y() * b.y());
    CHECK(std::abs(step - 2 * kPi / 360) < 1e-9);
  }
  const auto weighted = boundary_sample(c, 100, SampleWeight::arc_and_normal);
  CHECK(weighted.size() == 100);
}

TEST_CASE("extreme points") {
  const auto ex = extreme_points(octant());
  CHECK(ex.isolated.size() == 3);
  CHECK(ex.strict_arcs.empty());

  const auto c = extreme_points(cap(e3, kPi / 4));
  CHECK(c.isolated.empty());
  CHECK(c.strict_arcs.size() == 1);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 5; ++i) {
    const auto v = testing::random_valid_triangle(rng);
    const auto body = constant_diameter_triangle(v[0], v[1], v[2]);
    const auto spec = triangle_spec(v[0], v[1], v[2]);
    if (std::min({spec.sigma1, spec.sigma2, spec.sigma3}) < 1e-6) continue;
    const auto e = extreme_points(body);
    CHECK(e.strict_arcs.size() == 6);
    CHECK(e.isolated.empty());
    // smooth junctions: incoming and outgoing normals coincide
    const auto& segs = body.segments();
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const auto& a = segs[k];
      const auto& b = segs[(k + 1) % segs.size()];
      CHECK((a.normal(a.sweep()) - b.normal(0)).norm() < 1e-8);
    }
  }
}

TEST_CASE("supporting hemisphere centers") {
  const double rho = 0.7;
  for (const auto& c : supporting_hemisphere_centers(cap(e3, rho), 90)) {
    CHECK(dist(c, e3) == doctest::Approx(kHalfPi - rho).epsilon(1e-12));
  }
  const auto o = octant();
  const auto centers = supporting_hemisphere_centers(o, 90);
  for (const auto& e : {e1, e2, e3}) CHECK(nearest(centers, e) < 1e-12);

  for (int i = 0; i < 10; ++i) {
    const auto body = random_convex_polygon(200 + i, 10, 2.0);
    for (const auto& c : supporting_hemisphere_centers(body, 64)) {
      CHECK(std::abs(body.support(c.vec()).value) < 1e-10);
    }
  }
}

TEST_CASE("polar dual") {
  const auto d = polar_dual(cap(e3, 0.4));
  CHECK(boundary_hausdorff(d, cap(e3, kHalfPi - 0.4)) < 1e-12);
  CHECK(boundary_hausdorff(polar_dual(octant()), octant()) < 1e-12);
  for (int i = 0; i < 50; ++i) {
    const auto body = random_convex_polygon(300 + i, 9, 1.8);
    CHECK(boundary_hausdorff(polar_dual(polar_dual(body)), body, 512) < 1e-9);
  }
}

TEST_CASE("bodies are convex: arcs between members stay inside") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit;
  for (int b = 0; b < 10; ++b) {
    const auto body = random_convex_polygon(400 + b, 15, 2.2);
    const auto pts = boundary_sample(body, 100);
    for (int i = 0; i < 100; ++i) {
      const auto& p = pts[rng() % pts.size()];
      const auto& q = pts[rng() % pts.size()];
      if (dist(p, q) < 1e-6) continue;
      REQUIRE(body.contains(geodesic_point(p, q, unit(rng))));
    }
  }
}

TEST_CASE("a body inside a lune that touches a corner has an extreme point there") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::random_unit(rng);
    auto h = testing::random_unit(rng);
    if (dist(g, h) < 0.3 || dist(g, h) > kPi - 0.3) continue;
    const auto lune = lune_make(Hemi{g}, Hemi{h});
    const auto& corner = lune.corners()[0];
    std::vector<UnitVec> pts{corner};
    // stay within a hemisphere so the hull is defined
    while (pts.size() < 8) {
      const auto p = testing::random_in_cap(rng, corner, kHalfPi - 0.1);
      if (lune.contains(p)) pts.push_back(p);
    }
    SphericalBody body = [&] {
      try {
        return hull_from_points(pts);
      } catch (const Error&) {
        return octant();
      }
    }();
    if (!lune_contains(lune, body)) continue;
    const auto ex = extreme_points(body);
    CHECK(nearest(ex.isolated, corner) < 1e-9);
  }
}

TEST_CASE("diameter pairs consist of extreme points") {
  int checked = 0;
  for (int i = 0; checked < 100; ++i) {
    const auto body = random_convex_polygon(500 + i, 10, 1.4);
    const auto d = diameter(body);
    if (d.value >= kHalfPi - 0.05) continue;
    ++checked;
    const auto iso = extreme_points(body).isolated;
    CHECK(nearest(iso, d.p) < 1e-6);
    CHECK(nearest(iso, d.q) < 1e-6);
  }
}

TEST_CASE("hull of boundary samples recovers a polygon") {
  for (int i = 0; i < 20; ++i) {
    const auto body = random_convex_polygon(600 + i, 12, 2.0);
    const auto h = hull_from_points(boundary_sample(body, 200));
    const auto a = body.vertices(), b = h.vertices();
    REQUIRE(a.size() == b.size());
    for (const auto& v : a) CHECK(nearest(b, v) < 1e-9);
  }
}

TEST_CASE("construction rejects a boundary with a gap") {
  const auto o = octant();
  auto segs = o.segments();
  segs[1] = BoundarySegment::great_edge(UnitVec(0, 1, 0.01), segs[1].end());
  try {
    SphericalBody bad(segs);
    FAIL("gap accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvariantViolation);
    CHECK(std::string(e.what()).find("closed boundary") != std::string::npos);
  }
}

TEST_CASE("clip removes a cap around a corner") {
  const auto o = octant();
  const auto cut = clip(o, UnitVec(Vec3d(-1, 0.2, 0.2)));
  CHECK_FALSE(cut.contains(e1, 1e-12));
  CHECK(cut.contains(e2));
  CHECK(cut.contains(e3));
}
