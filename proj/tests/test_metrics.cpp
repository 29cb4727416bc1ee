#include <doctest.h>

#include "sphconv/constructors.hpp"
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

SphericalBody square(double r) {
  std::vector<UnitVec> v;
  for (int k = 0; k < 4; ++k) {
    const double a = kPi / 2 * k;
    v.emplace_back(std::sin(r) * std::cos(a), std::sin(r) * std::sin(a), std::cos(r));
  }
  return SphericalBody::polygon(v);
}

// Width by brute force: smallest lune thickness over a dense ring of
// supporting centers, independent of the refinement code.
double brute_width(const SphericalBody& body, const UnitVec& k, std::size_t n) {
  double best = kPi;
  for (const auto& c : supporting_hemisphere_centers(body, n)) {
    const double a = dist(k, c);
    if (a < 1e-6 || a > kPi - 1e-6) continue;
    best = std::min(best, lune_thickness(k, c));
  }
  return best;
}

}  // namespace

TEST_CASE("width of a cap is twice its radius") {
  const double rho = 0.45;
  const auto c = cap(e3, rho);
  for (const auto& k : supporting_hemisphere_centers(c, 12)) {
    const auto w = width_at(c, k);
    CHECK(w.width == doctest::Approx(2 * rho).epsilon(1e-10));
    CHECK(brute_width(c, k, 4000) == doctest::Approx(2 * rho).epsilon(1e-6));
  }
}

TEST_CASE("width of the octant") {
  const auto w = width_at(octant(), e1);
  CHECK(w.width == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(brute_width(octant(), e1, 4000) == doctest::Approx(kPi / 2).epsilon(1e-9));
}

TEST_CASE("width_at rejects a non-supporting center") {
  try {
    width_at(octant(), UnitVec(1, 1, 1));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSupporting);
  }
}

TEST_CASE("definition and dual form of the width agree") {
  for (int i = 0; i < 10; ++i) {
    const auto body = random_convex_polygon(700 + i, 9, 2.0);
    const auto profile = width_profile(body, 240);
    for (const auto& k : supporting_hemisphere_centers(body, 24)) {
      const auto w = width_at(body, k, 240);
      CHECK(std::abs(w.width - w.dual_form_width) < 1e-8);
      CHECK(w.width >= profile.min.width - 1e-10);
      CHECK(w.width <= brute_width(body, k, 2000) + 1e-12);
    }
  }
}

TEST_CASE("thickness") {
  CHECK(thickness(cap(e3, 0.3)).value == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(thickness(octant()).value == doctest::Approx(kPi / 2).epsilon(1e-12));
  const auto t = thickness(square(0.8));
  // The witness lune contains the body and has the reported thickness.
  const auto lune = lune_make(Hemi{t.witness.support_center}, Hemi{t.witness.opposing_center});
  CHECK(lune_contains(lune, square(0.8), 1e-9));
  CHECK(lune.thickness() == doctest::Approx(t.value).epsilon(1e-9));
}

TEST_CASE("diameter") {
  CHECK(diameter(cap(e3, 0.3)).value == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(diameter(cap(e3, 1.2)).value == doctest::Approx(2.4).epsilon(1e-12));
  CHECK(diameter(octant()).value == doctest::Approx(kPi / 2).epsilon(1e-14));
  // vertex pairs realize the diameter only up to pi/2; beyond it an edge
  // point can be farther from a vertex than any other vertex
  for (int i = 0; i < 30; ++i) {
    const auto body = random_convex_polygon(800 + i, 10, 2.5);
    const auto d = diameter(body);
    if (d.value <= kHalfPi) {
      CHECK(std::abs(d.value - vertex_diameter(body)) < 1e-9);
    } else {
      CHECK(d.value >= vertex_diameter(body) - 1e-12);
    }
    CHECK(dist(d.p, d.q) == doctest::Approx(d.value).epsilon(1e-12));
  }
}

TEST_CASE("constant width verdicts") {
  const auto v = is_constant_width(cap(e3, kPi / 4));
  CHECK(v.pass);
  CHECK(v.value == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(is_constant_width(octant()).pass);

  const auto body = random_convex_polygon(17, 9, 1.6);
  REQUIRE(thickness(body).value < diameter(body).value - 1e-3);
  const auto f = is_constant_width(body);
  CHECK_FALSE(f.pass);
  CHECK(f.deviation > 0);
  CHECK_FALSE(f.witness.points.empty());
}

TEST_CASE("constant diameter verdicts") {
  const auto v = is_constant_diameter(cap(e3, kPi / 4));
  CHECK(v.pass);
  CHECK(v.value == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(is_constant_diameter(octant()).pass);
  const auto f = is_constant_diameter(square(0.6));
  CHECK_FALSE(f.pass);
  CHECK_FALSE(f.witness.points.empty());
}

TEST_CASE("reduced check") {
  CHECK(reduced_check(regular_odd_gon(5, 1.2)).verdict.pass);
  CHECK(reduced_check(cap(e3, 0.5)).verdict.pass);
  CHECK(reduced_check(octant()).verdict.pass);
  const auto sq = reduced_check(square(0.6));
  CHECK_FALSE(sq.verdict.pass);
  CHECK(sq.min_drop <= 1e-6);
  CHECK_FALSE(sq.verdict.witness.points.empty());
}

TEST_CASE("classification of regular pentagons") {
  const auto half = classify(regular_odd_gon(5, kPi / 2));
  CHECK(half.diameter == doctest::Approx(kPi / 2).epsilon(1e-6));
  CHECK(half.constant_width.pass);
  CHECK(half.constant_diameter.pass);
  for (const auto& [name, chk] : half.checks) CHECK_MESSAGE(chk.holds, name);

  const auto one = classify(regular_odd_gon(5, 1.0));
  CHECK(one.diameter < kPi / 2);
  CHECK(one.checks.at("thm3_sign_agreement").applicable);
  CHECK(one.checks.at("thm3_sign_agreement").holds);
  CHECK(one.checks.at("thm1_diameter_bound").holds);
}

TEST_CASE("thick cap: thickness equals diameter") {
  const auto c = classify(cap(e3, 1.0));
  CHECK(c.diameter == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c.checks.at("prop1_equality").applicable);
  CHECK(c.checks.at("prop1_equality").holds);
}

TEST_CASE("verdict tolerance is recorded") {
  const auto v = is_constant_width(cap(e3, 0.4), 1e-3);
  CHECK(v.tolerance == 1e-3);
  CHECK(v.pass == (v.deviation <= v.tolerance));
}
