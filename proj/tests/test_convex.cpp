#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "projconvex/convex.hpp"
#include "support/oracles.hpp"

using namespace projconvex;

namespace {

Eigen::VectorXd vec3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

ConvexBody standard_simplex_body() {
  std::vector<Eigen::VectorXd> hs{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
  std::vector<Eigen::VectorXd> samples;
  // Vertices and edge midpoints of the chart triangle.
  samples.push_back(vec3(1, 0, 0));
  samples.push_back(vec3(0, 1, 0));
  samples.push_back(vec3(0, 0, 1));
  samples.push_back(vec3(1, 1, 0).normalized());
  samples.push_back(vec3(1, 0, 1).normalized());
  samples.push_back(vec3(0, 1, 1).normalized());
  return ConvexBody::from_halfspaces(2, hs, vec3(1, 1, 1), samples);
}

}  // namespace

TEST_CASE("dual cone: positive orthant is self-dual") {
  std::vector<Eigen::VectorXd> gens{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
  Cone v = Cone::from_generators(gens);
  Cone d = dual_cone(v);
  d.ensure_generators();
  CHECK(cone_section_hausdorff(v, d) < 1e-9);
  Cone dd = dual_cone(d);
  dd.ensure_generators();
  CHECK(cone_section_hausdorff(v, dd) < 1e-9);
}

TEST_CASE("dual cone rejects a half-space cone") {
  std::vector<Eigen::VectorXd> gens{vec3(1, 0, 0),  vec3(0, 1, 0), vec3(0, -1, 0),
                                    vec3(0, 0, 1),  vec3(0, 0, -1)};
  Cone v = Cone::from_generators(gens);
  CHECK_THROWS_AS(dual_cone(v), NotProperlyConvex);
}

TEST_CASE("sampled Lorentz cone is self-dual to sampling tolerance") {
  std::vector<Eigen::VectorXd> gens;
  const int n = 360;
  for (int i = 0; i < n; ++i) {
    double th = 2 * M_PI * i / n;
    gens.push_back(vec3(1, std::cos(th), std::sin(th)).normalized());
  }
  Cone v = Cone::from_generators(gens);
  Cone d = dual_cone(v);
  // Every dual functional (== a generator) is nonnegative on all generators
  // and vanishes somewhere on the rim: self-duality at sampling resolution.
  for (const auto& phi : d.halfspaces) {
    double mn = 1e300;
    for (const auto& g : v.generators) mn = std::min(mn, phi.dot(g));
    CHECK(mn > -1e-6);
    CHECK(mn < 1e-6);
  }
}

TEST_CASE("duality involution on random polytopal cones") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    int ambient = 2 + (it % 3) + 1;  // 3..5 ambient (projective dims 2..4)
    Cone v = oracles::random_polytopal_cone(rng, ambient, ambient + 2 + (it % 3));
    Cone d = dual_cone(v);
    d.ensure_generators();
    Cone dd = dual_cone(d);
    dd.ensure_generators();
    CHECK(cone_section_hausdorff(v, dd) < 1e-6);
  }
}

TEST_CASE("duality antitonicity") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 10; ++it) {
    Cone v = oracles::random_polytopal_cone(rng, 3, 4);
    auto gens = v.generators;
    // W: widened cone containing V.
    std::vector<Eigen::VectorXd> wg = gens;
    Eigen::VectorXd axis = Eigen::VectorXd::Zero(3);
    for (const auto& g : gens) axis += g;
    axis.normalize();
    for (const auto& g : gens) wg.push_back((g + 0.3 * (g - axis.dot(g) * axis)).normalized());
    Cone w = Cone::from_generators(wg);
    Cone vd = dual_cone(v), wd = dual_cone(w);
    wd.ensure_generators();
    // W* subset of V*: every extreme ray of W* satisfies V*'s half-spaces.
    for (const auto& r : wd.generators)
      for (const auto& h : vd.halfspaces) CHECK(h.dot(r) > -1e-9);
  }
}

TEST_CASE("hausdorff distance basics") {
  ConvexBody k = ConvexBody::elliptic_ball(vec3(1, 0, 0), 0.25);
  CHECK(hausdorff_distance(k, k) == doctest::Approx(0.0).epsilon(1e-12));

  ConvexBody inner = ConvexBody::elliptic_ball(vec3(1, 0, 0), 0.2, 1440);
  ConvexBody outer = ConvexBody::elliptic_ball(vec3(1, 0, 0), 0.3, 1440);
  double d = hausdorff_distance(inner, outer);
  CHECK(d == doctest::Approx(0.1).epsilon(0.06));  // 2x sample resolution

  // Disjoint small balls, equal radii, centers distance apart: d_H = center
  // distance (brute-force max-min over dense samples).
  double dist = 0.3, r = 0.05;
  Eigen::VectorXd c1 = vec3(1, 0, 0);
  Eigen::VectorXd c2 = vec3(std::cos(dist), std::sin(dist), 0);
  ConvexBody b1 = ConvexBody::elliptic_ball(c1, r, 2000);
  ConvexBody b2 = ConvexBody::elliptic_ball(c2, r, 2000);
  CHECK(hausdorff_distance(b1, b2) == doctest::Approx(dist).epsilon(0.05));

  ConvexBody k4 = ConvexBody::elliptic_ball(Eigen::VectorXd::Ones(4).normalized(), 0.2);
  CHECK_THROWS_AS(hausdorff_distance(k, k4), DimensionMismatch);
}

TEST_CASE("hausdorff metric properties on random bodies") {
  std::mt19937_64 rng(17);
  auto a = oracles::random_polygon_body(rng, 9);
  auto b = oracles::random_polygon_body(rng, 9);
  auto c = oracles::random_polygon_body(rng, 9);
  double ab = hausdorff_distance(a, b);
  double ba = hausdorff_distance(b, a);
  CHECK(ab == doctest::Approx(ba).epsilon(1e-12));  // symmetric exactly
  double ac = hausdorff_distance(a, c), cb = hausdorff_distance(c, b);
  CHECK(ab <= ac + cb + 2e-2);  // triangle inequality within resolution
}

TEST_CASE("properly_convex_check verdicts") {
  CHECK(properly_convex_check(standard_simplex_body()) ==
        ConvexVerdict::ProperlyConvex);

  // Full affine patch: boundary equator directions admit no positive
  // functional.
  ConvexBody patch;
  patch.dim = 2;
  patch.interior = vec3(1, 0, 0);
  for (int i = 0; i < 64; ++i) {
    double th = 2 * M_PI * i / 64;
    patch.samples.push_back(vec3(0, std::cos(th), std::sin(th)));
  }
  CHECK(properly_convex_check(patch) == ConvexVerdict::ConvexNotProper);

  // L-shaped sample cloud with its naive wall half-spaces.
  ConvexBody ell;
  ell.dim = 2;
  ell.interior = vec3(1, 0.5, 0.5).normalized();
  auto hs = [&](double a, double b, double c) {
    ell.halfspaces.push_back(vec3(a, b, c).normalized());
  };
  // Chart (x, y): walls of the L = [0,2]x[0,1] union [0,1]x[0,2].
  hs(0, 1, 0);    // x >= 0
  hs(0, 0, 1);    // y >= 0
  hs(2, -1, 0);   // x <= 2
  hs(2, 0, -1);   // y <= 2
  hs(1, -1, 0);   // x <= 1 (reentrant wall)
  hs(1, 0, -1);   // y <= 1 (reentrant wall)
  auto smp = [&](double x, double y) {
    ell.samples.push_back(vec3(1, x, y).normalized());
  };
  smp(0, 0); smp(2, 0); smp(2, 1); smp(1, 1); smp(1, 2); smp(0, 2);
  smp(2, 0.5); smp(0.5, 2); smp(1.5, 1); smp(1, 1.5);
  CHECK(properly_convex_check(ell) == ConvexVerdict::NotConvex);
}

TEST_CASE("max_chord_length") {
  ConvexBody ball = ConvexBody::elliptic_ball(vec3(1, 0, 0), 0.3, 1440);
  CHECK(max_chord_length(ball) == doctest::Approx(0.6).epsilon(0.01));

  ConvexBody patch;
  patch.dim = 2;
  patch.interior = vec3(1, 0, 0);
  for (int i = 0; i < 256; ++i) {
    double th = 2 * M_PI * i / 256;
    patch.samples.push_back(vec3(1e-7, std::cos(th), std::sin(th)).normalized());
  }
  CHECK(max_chord_length(patch) == doctest::Approx(M_PI).epsilon(0.02));

  // Simplex: maximum realized over vertex pairs (brute force over vertices).
  ConvexBody simplex = standard_simplex_body();
  double expected = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double c = simplex.samples[i].normalized().dot(simplex.samples[j].normalized());
      expected = std::max(expected, std::acos(std::clamp(c, -1.0, 1.0)));
    }
  CHECK(max_chord_length(simplex) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("supporting halfspaces") {
  // Unit disk at chart point (1, 0): expect the tangent {x <= 1}.
  ConvexBody disk = ConvexBody::elliptic_ball(vec3(1, 0, 0), M_PI / 4, 720);
  ProjPoint touch(vec3(1, 1, 0));
  auto hs = supporting_halfspaces(disk, {touch});
  REQUIRE(hs.size() == 1);
  Eigen::VectorXd expect = vec3(1, -1, 0).normalized();
  CHECK(std::min((hs[0] - expect).norm(), (hs[0] + expect).norm()) < 1e-6);

  // Simplex vertex: functional vanishing there, nonnegative on the body.
  ConvexBody simplex = standard_simplex_body();
  auto vs = supporting_halfspaces(simplex, {ProjPoint(vec3(1, 0, 0))});
  REQUIRE(vs.size() == 1);
  CHECK(std::abs(vs[0].dot(vec3(1, 0, 0))) < 1e-8);
  for (const auto& s : simplex.samples) CHECK(vs[0].dot(s) > -1e-8);

  CHECK_THROWS_AS(supporting_halfspaces(simplex, {ProjPoint(vec3(1, 1, 1))}),
                  PointNotOnBoundary);
}

TEST_CASE("dual neighborhood containments") {
  // For polytopal bodies the dual's half-space functionals are the primal
  // vertex lifts, so the containment statements are exact polytope algebra.
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int it = 0; it < 20; ++it) {
    ConvexBody d1 = oracles::random_polygon_body(rng, 8, 0.7);
    // Perturb the cloud slightly for the second body.
    std::vector<Eigen::VectorXd> cloud2;
    for (const auto& s : d1.samples) {
      Eigen::VectorXd w = s;
      for (int i = 0; i < 3; ++i) w(i) += 2e-3 * g(rng);
      cloud2.push_back(w.normalized());
    }
    ConvexBody d2 = ConvexBody::hull_of_points(2, cloud2, d1.interior);

    double eps = hausdorff_distance(d1, d2) + 2e-3;
    double inj = std::min(inradius(d1), inradius(d2));
    if (eps >= inj) continue;  // statement applies below the injectivity radius

    // Vertex lifts of d1/d2: the extreme samples (hull construction keeps the
    // full cloud; use every sample as a functional certificate).
    // phi interior to d1* with boundary margin > eps must lie in d2*.
    for (int trial = 0; trial < 60; ++trial) {
      // Random positive combination of d1's half-space functionals = point of
      // the dual body d1*.
      Eigen::VectorXd phi = Eigen::VectorXd::Zero(3);
      std::uniform_real_distribution<double> u(0.05, 1.0);
      for (const auto& h : d1.halfspaces) phi += u(rng) * h;
      phi.normalize();
      // Elliptic distance from phi to the boundary of d1*: min over the
      // dual's half-spaces, i.e. over d1's vertex lifts.
      double margin = 1e300;
      for (const auto& v : d1.samples)
        margin = std::min(margin, std::asin(std::clamp(v.normalized().dot(phi), -1.0, 1.0)));
      if (margin <= eps) continue;
      // Membership in d2*: nonnegative on every point of d2.
      for (const auto& v : d2.samples) CHECK(v.dot(phi) > -1e-9);
    }
  }
}

TEST_CASE("hull_of_points produces a consistent body") {
  std::mt19937_64 rng(29);
  ConvexBody b = oracles::random_polygon_body(rng, 12);
  CHECK(properly_convex_check(b) == ConvexVerdict::ProperlyConvex);
  for (const auto& s : b.samples)
    CHECK(b.violation(s) < 1e-9);  // cloud inside its own hull

  // 3D hull: random points around the patch center.
  std::vector<Eigen::VectorXd> cloud;
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Eigen::VectorXd c(4);
  c << 1, 0, 0, 0;
  for (int i = 0; i < 40; ++i) {
    Eigen::VectorXd v(4);
    v << 1, u(rng), u(rng), u(rng);
    cloud.push_back(v.normalized());
  }
  ConvexBody b3 = ConvexBody::hull_of_points(3, cloud, c);
  CHECK(properly_convex_check(b3) == ConvexVerdict::ProperlyConvex);
  for (const auto& s : b3.samples) CHECK(b3.violation(s) < 1e-9);
}
