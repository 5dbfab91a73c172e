#ifndef PROJCONVEX_TEST_ORACLES_HPP
#define PROJCONVEX_TEST_ORACLES_HPP

// Test-side oracles, independent of the library paths they check.

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "projconvex/convex.hpp"
#include "projconvex/projcore.hpp"

namespace oracles {

// Klein-model hyperbolic distance in the unit ball.
inline double klein_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  double num = 1.0 - p.dot(q);
  double den = std::sqrt((1.0 - p.squaredNorm()) * (1.0 - q.squaredNorm()));
  return std::acosh(num / den);
}

// Random properly convex polygonal body in RP^2: hull of points in a disk of
// the given chart radius around the patch center.
inline projconvex::ConvexBody random_polygon_body(std::mt19937_64& rng,
                                                  int n_pts = 8,
                                                  double radius = 0.8) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Eigen::VectorXd> cloud;
  Eigen::VectorXd centroid = Eigen::VectorXd::Zero(3);
  while (static_cast<int>(cloud.size()) < n_pts) {
    double x = u(rng), y = u(rng);
    if (x * x + y * y > radius * radius) continue;
    Eigen::VectorXd v(3);
    v << 1, x, y;
    cloud.push_back(v.normalized());
    centroid += cloud.back();
  }
  centroid.normalize();
  return projconvex::ConvexBody::hull_of_points(2, cloud, centroid);
}

// Random polytopal cone: generators in a cap around a random axis (salient by
// construction).
inline projconvex::Cone random_polytopal_cone(std::mt19937_64& rng, int ambient,
                                              int n_gens, double cap = 0.6) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXd axis(ambient);
  for (int i = 0; i < ambient; ++i) axis(i) = g(rng);
  axis.normalize();
  std::vector<Eigen::VectorXd> gens;
  while (static_cast<int>(gens.size()) < n_gens) {
    Eigen::VectorXd v(ambient);
    for (int i = 0; i < ambient; ++i) v(i) = g(rng);
    v.normalize();
    Eigen::VectorXd w = (axis + cap * (v - axis.dot(v) * axis)).normalized();
    gens.push_back(w);
  }
  return projconvex::Cone::from_generators(gens);
}

// Exact word-enumeration of a Coxeter group ball through an integer-matrix
// representation (valid when the Cartan realization is integral).
inline std::vector<long long> integer_ball_sizes(
    const std::vector<Eigen::Matrix3i>& gens, int depth_max) {
  struct Key {
    std::array<int, 9> a;
    bool operator<(const Key& o) const { return a < o.a; }
  };
  auto key_of = [](const Eigen::Matrix3i& m) {
    Key k;
    int idx = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) k.a[idx++] = m(i, j);
    return k;
  };
  std::set<Key> seen;
  std::vector<Eigen::Matrix3i> frontier{Eigen::Matrix3i::Identity()};
  seen.insert(key_of(frontier[0]));
  std::vector<long long> sizes{1};
  for (int d = 1; d <= depth_max; ++d) {
    std::vector<Eigen::Matrix3i> next;
    for (const auto& m : frontier) {
      for (const auto& r : gens) {
        Eigen::Matrix3i candidate = m * r;
        if (seen.insert(key_of(candidate)).second) next.push_back(candidate);
      }
    }
    sizes.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }
  return sizes;  // new elements per word length
}

// Algebraic least-squares conic fit a x^2 + b xy + c y^2 + d x + e y + f = 0,
// normalized |coeffs| = 1 (smallest singular vector).
inline Eigen::VectorXd fit_conic(const std::vector<Eigen::Vector2d>& pts) {
  Eigen::MatrixXd m(pts.size(), 6);
  for (size_t i = 0; i < pts.size(); ++i) {
    double x = pts[i].x(), y = pts[i].y();
    m.row(static_cast<int>(i)) << x * x, x * y, y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(5);
}

inline bool conic_is_ellipse(const Eigen::VectorXd& k) {
  return 4.0 * k(0) * k(2) - k(1) * k(1) > 0;
}

// The regular ideal hyperbolic tetrahedron reflection group built directly in
// the Minkowski model (form diag(-1,1,1,1)); independent of the gluing-data
// machinery.
struct IdealTetrahedronModel {
  Eigen::Matrix4d vertices;                 // columns: ideal vertex lifts
  std::vector<Eigen::Matrix4d> reflections;  // Lorentz reflections in faces
};

inline IdealTetrahedronModel ideal_regular_tetrahedron() {
  IdealTetrahedronModel m;
  Eigen::Matrix4d j = Eigen::Matrix4d::Identity();
  j(0, 0) = -1.0;
  const double s = 1.0 / std::sqrt(3.0);
  double dirs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d v;
    v << 1.0, s * dirs[k][0], s * dirs[k][1], s * dirs[k][2];
    m.vertices.col(k) = v;
  }
  for (int f = 0; f < 4; ++f) {
    // Face f: the plane through the three vertices other than f. Its
    // Minkowski normal n solves v_i^T J n = 0 for the three vertices.
    Eigen::MatrixXd rows(3, 4);
    int r = 0;
    for (int k = 0; k < 4; ++k)
      if (k != f) rows.row(r++) = (j * m.vertices.col(k)).transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
    Eigen::Vector4d n = lu.kernel().col(0);
    double nn = n.dot(j * n);
    Eigen::Matrix4d refl =
        Eigen::Matrix4d::Identity() - 2.0 * (n * (j * n).transpose()) / nn;
    m.reflections.push_back(refl);
  }
  return m;
}

}  // namespace oracles

#endif
