#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projconvex/smalllp.hpp"

using namespace projconvex;

TEST_CASE("simplex solves a box LP") {
  Eigen::VectorXd c(2);
  c << 1, 1;
  Eigen::MatrixXd a(1, 2);
  a << 1, 1;
  Eigen::VectorXd b(1);
  b << 1;
  LpResult r = lp_maximize_boxed(c, a, b, 5.0);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("simplex detects infeasibility") {
  Eigen::VectorXd c(1);
  c << 1;
  Eigen::MatrixXd a(2, 1);
  a << 1, -1;
  Eigen::VectorXd b(2);
  b << -2, 1;  // x <= -2 and x >= -1
  LpResult r = lp_maximize_boxed(c, a, b, 10.0);
  CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("simplex honors negative right-hand sides") {
  // max x st x <= 5, -x <= -2 (x >= 2), box [-10, 10]
  Eigen::VectorXd c(1);
  c << 1;
  Eigen::MatrixXd a(2, 1);
  a << 1, -1;
  Eigen::VectorXd b(2);
  b << 5, -2;
  LpResult r = lp_maximize_boxed(c, a, b, 10.0);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == doctest::Approx(5.0));
}

TEST_CASE("min_norm_point finds the hull projection") {
  Eigen::MatrixXd p(2, 3);
  p << 1, 2, 1.5, 1, 1, 2;  // all above y >= 1ish, min-norm on segment
  Eigen::VectorXd x = min_norm_point(p);
  // Minimum over the hull of |(x,y)|: attained at (1,1).
  CHECK((x - Eigen::Vector2d(1, 1)).norm() < 1e-6);

  Eigen::MatrixXd q(2, 3);
  q << 1, -1, 0, 1, 1, -1;  // triangle containing the origin
  CHECK(min_norm_point(q).norm() < 1e-7);
}

TEST_CASE("best_margin on coordinate directions") {
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(3, 3);
  MarginResult m = best_margin(p);
  CHECK(m.margin == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-6));
  // Antipodal pair: no positive margin.
  Eigen::MatrixXd q(2, 2);
  q << 1, -1, 0, 0;
  CHECK(best_margin(q).margin <= 1e-9);
}
