#include "projconvex/coxeter.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <unordered_set>

namespace projconvex {

namespace {

// Extreme rays of the polytope cone {x : alpha_i . x >= 0}.
std::vector<Eigen::VectorXd> polytope_vertices(const ConvexBody& polytope) {
  Cone c = Cone::from_halfspaces(polytope.dim + 1, polytope.halfspaces);
  c.ensure_generators();
  // Fix signs toward the interior point.
  std::vector<Eigen::VectorXd> out;
  for (auto v : c.generators) {
    if (v.dot(polytope.interior) < 0) v = -v;
    out.push_back(v);
  }
  return out;
}

std::string matrix_key(const Eigen::MatrixXd& m) {
  // det-normalize to +-1, sign-canonicalize, snap to a 1e-8 grid.
  Eigen::MatrixXd g = m;
  double det = g.determinant();
  double scale = std::pow(std::abs(det), -1.0 / g.rows());
  g *= scale;
  for (int i = 0; i < g.size(); ++i) {
    if (std::abs(g.data()[i]) > 1e-4) {
      if (g.data()[i] < 0) g = -g;
      break;
    }
  }
  std::string key;
  key.reserve(g.size() * 9);
  for (int i = 0; i < g.size(); ++i) {
    auto q = static_cast<long long>(std::llround(g.data()[i] * 1e8));
    key.append(reinterpret_cast<const char*>(&q), sizeof(q));
  }
  return key;
}

}  // namespace

CoxeterSystem cartan_from_orders(const ConvexBody& polytope,
                                 const Eigen::MatrixXi& orders,
                                 const DeformationParams& params) {
  const int m = static_cast<int>(polytope.halfspaces.size());
  const int d = polytope.dim + 1;
  if (orders.rows() != m || orders.cols() != m)
    throw InconsistentOrders("coxeter: order matrix size does not match facets");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (orders(i, j) != orders(j, i))
        throw InconsistentOrders("coxeter: order matrix not symmetric");
      if (orders(i, j) == 1 || orders(i, j) < -1)
        throw InconsistentOrders("coxeter: invalid order entry");
    }

  CoxeterSystem sys;
  sys.polytope = polytope;
  sys.orders = orders;
  sys.vertices = polytope_vertices(polytope);

  // Adjacency: facets meeting along a face of the polytope cone.
  auto adjacent = [&](int i, int j) {
    for (const auto& v : sys.vertices)
      if (std::abs(polytope.halfspaces[i].dot(v)) < 1e-9 &&
          std::abs(polytope.halfspaces[j].dot(v)) < 1e-9)
        return true;
    return false;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (orders(i, j) >= 2 && !adjacent(i, j))
        throw InconsistentOrders("coxeter: finite order on non-adjacent facets");

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) a(i, i) = 2.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      int n = orders(i, j);
      if (n == 0) continue;
      double c = (n < 0) ? 2.0 : 2.0 * std::cos(M_PI / n);
      if (c == 0.0 && n == 2) {
        a(i, j) = 0.0;  // order 2: orthogonal pair
        continue;
      }
      a(i, j) = -params.get(i, j) * c;
    }
  sys.cartan = a;

  // Reflection vectors from alpha_j(v_i) = a_ji.
  Eigen::MatrixXd alphas(m, d);
  for (int i = 0; i < m; ++i) alphas.row(i) = polytope.halfspaces[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(alphas, Eigen::ComputeThinU |
                                                    Eigen::ComputeThinV);
  if (svd.rank() < d)
    throw NonRealizableCartan("coxeter: facet normals do not span");
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd rhs = a.col(i);
    Eigen::VectorXd v = svd.solve(rhs);
    if ((alphas * v - rhs).norm() > 1e-8)
      throw NonRealizableCartan("coxeter: pairing system inconsistent");
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(d, d) -
                        v * polytope.halfspaces[i].transpose();
    if ((r * r - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12)
      throw NonRealizableCartan("coxeter: reflection not involutive");
    sys.reflections.push_back(r);
  }

  // Relation residuals are part of the construction contract.
  RelationReport rep = relation_check(sys);
  if (rep.max_residual > 1e-10)
    throw NonRealizableCartan("coxeter: dihedral relation residual too large");
  return sys;
}

RelationReport relation_check(const CoxeterSystem& sys) {
  RelationReport rep;
  const int m = sys.n_facets();
  const int d = sys.dim() + 1;
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      int n = sys.orders(i, j);
      if (n < 2) continue;
      PairRelation pr;
      pr.i = i;
      pr.j = j;
      pr.order = n;
      Eigen::MatrixXd prod = sys.reflections[i] * sys.reflections[j];
      pr.trace = prod.trace();
      Eigen::MatrixXd pw = id;
      for (int k = 1; k <= n; ++k) {
        pw = pw * prod;
        double res = (pw - id).cwiseAbs().maxCoeff();
        if (k < n && res < 1e-6) pr.order_minimal = false;
        if (k == n) pr.residual = res;
      }
      rep.max_residual = std::max(rep.max_residual, pr.residual);
      rep.all_orders_minimal = rep.all_orders_minimal && pr.order_minimal;
      rep.pairs.push_back(pr);
    }
  }
  return rep;
}

DevelopedComplex fundamental_orbit(const CoxeterSystem& sys, int word_length_max,
                                   const OrbitOptions& opts) {
  DevelopedComplex out;
  out.dim = sys.dim();
  const int d = sys.dim() + 1;
  const int m = sys.n_facets();
  const int nv = static_cast<int>(sys.vertices.size());

  Eigen::MatrixXd base(d, nv);
  for (int k = 0; k < nv; ++k) base.col(k) = sys.vertices[k];

  struct Node {
    Eigen::MatrixXd mat;
    std::string word;
    int depth;
    int last;
  };
  std::deque<Node> queue;
  std::unordered_set<std::string> seen;

  Node root{Eigen::MatrixXd::Identity(d, d), "", 0, -1};
  seen.insert(matrix_key(root.mat));
  queue.push_back(root);

  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    PlacedSimplex ps;
    ps.vertices = cur.mat * base;
    ps.word = cur.word;
    ps.depth = cur.depth;
    out.placed.push_back(ps);
    if (static_cast<long long>(out.placed.size()) > opts.max_images)
      throw ExplosionGuard("fundamental_orbit: image cap exceeded");
    if (cur.depth == word_length_max) continue;
    for (int i = 0; i < m; ++i) {
      if (i == cur.last) continue;  // R_i^2 = 1
      Node nxt{cur.mat * sys.reflections[i],
               cur.word + static_cast<char>('a' + i), cur.depth + 1, i};
      std::string key = matrix_key(nxt.mat);
      if (seen.insert(key).second) queue.push_back(nxt);
    }
  }
  return out;
}

ConvexBody orbit_union_body(const CoxeterSystem& sys,
                            const DevelopedComplex& complex) {
  Eigen::VectorXd centroid = Eigen::VectorXd::Zero(sys.dim() + 1);
  for (const auto& v : sys.vertices) centroid += v.normalized();
  centroid.normalize();
  std::vector<Eigen::VectorXd> cloud = complex.all_vertex_lifts();
  return ConvexBody::hull_of_points(sys.dim(), cloud, centroid);
}

}  // namespace projconvex
