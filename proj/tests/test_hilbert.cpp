#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "projconvex/hilbert.hpp"
#include "support/oracles.hpp"

using namespace projconvex;

namespace {

Eigen::VectorXd vec3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

ConvexBody unit_disk_body() {
  return ConvexBody::elliptic_ball(vec3(1, 0, 0), M_PI / 4, 720);
}

ProjPoint chart(double x, double y) { return ProjPoint(vec3(1, x, y)); }

ConvexBody transform_body(const ProjMap& g, const ConvexBody& b) {
  ConvexBody out;
  out.dim = b.dim;
  Eigen::MatrixXd ginv = g.matrix().inverse();
  for (const auto& h : b.halfspaces)
    out.halfspaces.push_back((ginv.transpose() * h).normalized());
  for (const auto& q : b.quadrics) {
    Eigen::MatrixXd qq = ginv.transpose() * q * ginv;
    out.quadrics.push_back(qq / qq.norm());
  }
  for (const auto& s : b.samples)
    out.samples.push_back((g.matrix() * s).normalized());
  out.interior = (g.matrix() * b.interior).normalized();
  return out;
}

}  // namespace

TEST_CASE("disk distances match the interval closed form") {
  HilbertContext ctx(unit_disk_body());
  double d = ctx.distance(chart(0, 0), chart(0.5, 0));
  CHECK(d == doctest::Approx(std::log(3.0)).epsilon(1e-9));
  CHECK(ctx.distance(chart(0.3, -0.2), chart(0.3, -0.2)) == 0.0);
}

TEST_CASE("disk Hilbert metric doubles the Klein metric") {
  HilbertContext ctx(unit_disk_body());
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-0.85, 0.85);
  int done = 0;
  while (done < 200) {
    Eigen::Vector2d p(u(rng), u(rng)), q(u(rng), u(rng));
    if (p.norm() > 0.9 || q.norm() > 0.9) continue;
    ++done;
    double dh = ctx.distance(chart(p.x(), p.y()), chart(q.x(), q.y()));
    double dk = oracles::klein_distance(p, q);
    CHECK(dh == doctest::Approx(2.0 * dk).epsilon(1e-9));
  }
}

TEST_CASE("strictly interior precondition") {
  HilbertContext ctx(unit_disk_body());
  CHECK_THROWS_AS(ctx.distance(chart(0, 0), chart(1.5, 0)), PointOutsideDomain);
  CHECK_THROWS_AS(ctx.distance(chart(0, 0), chart(1.0, 0)), PointOutsideDomain);
}

TEST_CASE("triangle inequality and chord additivity on random polytopal bodies") {
  std::mt19937_64 rng(202);
  for (int body_i = 0; body_i < 5; ++body_i) {
    ConvexBody b = oracles::random_polygon_body(rng, 7 + body_i);
    HilbertContext ctx(b);
    // Interior points: convex combos of samples pulled toward the interior.
    auto interior_pt = [&](double w) {
      std::uniform_int_distribution<int> pick(0, (int)b.samples.size() - 1);
      Eigen::VectorXd x = (1 - w) * b.interior + w * b.samples[pick(rng)];
      return ProjPoint(x);
    };
    std::uniform_real_distribution<double> u(0.0, 0.8);
    for (int it = 0; it < 100; ++it) {
      ProjPoint p = interior_pt(u(rng)), q = interior_pt(u(rng)), m = interior_pt(u(rng));
      double pq = ctx.distance(p, q), pm = ctx.distance(p, m), mq = ctx.distance(m, q);
      CHECK(pq <= pm + mq + 1e-9);
    }
    // Additivity along chords.
    for (int it = 0; it < 50; ++it) {
      ProjPoint p = interior_pt(u(rng)), q = interior_pt(u(rng));
      Eigen::VectorXd a = ctx.to_chart(p), c = ctx.to_chart(q);
      for (double t : {0.25, 0.5, 0.75}) {
        ProjPoint mid((1 - t) * a + t * c);
        double lhs = ctx.distance(p, q);
        double rhs = ctx.distance(p, mid) + ctx.distance(mid, q);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("projective invariance of the distance") {
  std::mt19937_64 rng(303);
  ConvexBody b = oracles::random_polygon_body(rng, 8);
  HilbertContext ctx(b);
  std::normal_distribution<double> g;
  for (int it = 0; it < 10; ++it) {
    Eigen::MatrixXd m(3, 3);
    do {
      for (int i = 0; i < 9; ++i) m.data()[i] = g(rng);
    } while (std::abs(m.determinant()) < 0.3);
    ProjMap gm(m);
    ConvexBody tb = transform_body(gm, b);
    HilbertContext tctx(tb);
    ProjPoint p(0.7 * b.interior + 0.3 * b.samples[0]);
    ProjPoint q(0.6 * b.interior + 0.4 * b.samples[3]);
    double d1 = ctx.distance(p, q);
    double d2 = tctx.distance(apply(gm, p), apply(gm, q));
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-9));
  }
}

TEST_CASE("foot of the perpendicular on the disk") {
  HilbertContext ctx(unit_disk_body());
  // Line {x = 0.5} through chart points (0.5, -0.5) and (0.5, 0.5).
  ProjLine line(chart(0.5, -0.5), chart(0.5, 0.5));
  ProjPoint foot = ctx.foot_of_perpendicular(chart(0, 0), line);
  CHECK(foot.approx_equal(chart(0.5, 0.0), 1e-6));

  // A base point on the line is its own foot.
  ProjPoint on_line = chart(0.5, 0.2);
  ProjPoint f2 = ctx.foot_of_perpendicular(on_line, line);
  CHECK(f2.approx_equal(on_line, 1e-7));
  CHECK(ctx.distance(on_line, f2) < 1e-9);

  ProjLine missing(chart(2.0, -1.0), chart(2.0, 1.0));
  CHECK_THROWS_AS(ctx.foot_of_perpendicular(chart(0, 0), missing),
                  LineMissesDomain);
}

TEST_CASE("foot beats dense sampling on a simplex domain") {
  std::vector<Eigen::VectorXd> hs{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
  std::vector<Eigen::VectorXd> samples{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1),
                                       vec3(1, 1, 0).normalized(),
                                       vec3(1, 0, 1).normalized(),
                                       vec3(0, 1, 1).normalized()};
  ConvexBody simplex =
      ConvexBody::from_halfspaces(2, hs, vec3(1, 1, 1), samples);
  HilbertContext ctx(simplex);
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int it = 0; it < 5; ++it) {
    Eigen::VectorXd xv(3);
    xv << u(rng), u(rng), u(rng);
    ProjPoint x(xv);
    Eigen::VectorXd a(3), b(3);
    a << u(rng), u(rng), u(rng);
    b << u(rng), u(rng), u(rng);
    ProjLine line((ProjPoint(a)), ProjPoint(b));
    ProjPoint foot = ctx.foot_of_perpendicular(x, line);
    double fd = ctx.distance(x, foot);
    // Brute force over the chord of the line.
    Eigen::VectorXd ca = ctx.to_chart(ProjPoint(a)), cb = ctx.to_chart(ProjPoint(b));
    auto [lo, hi] = ctx.chord_endpoints(ca, cb);
    double best = 1e300;
    for (int k = 1; k < 1000; ++k) {
      double t = lo + (hi - lo) * k / 1000.0;
      Eigen::VectorXd y = (1 - t) * ca + t * cb;
      if (simplex.violation(y) >= -1e-9) continue;
      best = std::min(best, ctx.distance(x, ProjPoint(y)));
    }
    CHECK(fd <= best + 1e-6);
  }
}

TEST_CASE("minimizing set is a single interval") {
  std::vector<Eigen::VectorXd> hs{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
  std::vector<Eigen::VectorXd> samples{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
  ConvexBody simplex = ConvexBody::from_halfspaces(2, hs, vec3(1, 1, 1), samples);
  HilbertContext ctx(simplex);
  ProjPoint x(vec3(1, 1, 2));
  ProjLine line((ProjPoint(vec3(2, 1, 1))), ProjPoint(vec3(1, 2, 1)));
  Eigen::VectorXd ca = ctx.to_chart(line.a()), cb = ctx.to_chart(line.b());
  auto [lo, hi] = ctx.chord_endpoints(ca, cb);
  // Scan the distance profile; the near-minimal set must be contiguous.
  const int n = 400;
  std::vector<double> f(n + 1);
  double fmin = 1e300;
  for (int k = 0; k <= n; ++k) {
    double t = lo + (hi - lo) * (0.001 + 0.998 * k / n);
    f[k] = ctx.distance(x, ProjPoint((1 - t) * ca + t * cb));
    fmin = std::min(fmin, f[k]);
  }
  int first = -1, last = -1;
  for (int k = 0; k <= n; ++k)
    if (f[k] <= fmin + 1e-8) {
      if (first < 0) first = k;
      last = k;
    }
  for (int k = first; k <= last; ++k) CHECK(f[k] <= fmin + 1e-6);
}
