#include "projconvex/invariants.hpp"

#include <cmath>
#include <vector>

namespace projconvex {

double tau(int order) {
  if (order < 2) throw InvalidOrder("tau: order must be at least 2");
  return 2.0 * std::cos(2.0 * M_PI / order);
}

namespace {

double rho_poly(double s, double tau_i) { return s * s + s * tau_i + 1.0; }

void require_333(const std::array<EndOrbifoldParams, 4>& ends) {
  for (const auto& e : ends)
    if (e.orders != std::array<int, 3>{3, 3, 3})
      throw WrongOrders("doubled tetrahedron: every end must have orders (3,3,3)");
}

// Directed-edge slot indexing for the 4-vertex complex.
int slot(int m, int n) { return m * 3 + (n > m ? n - 1 : n); }

struct CycleSystem {
  Eigen::MatrixXd a;  // 11 x 12
  // Row layout: for each end k, sigma1 cycle then sigma2 cycle; then 3 pins.
};

CycleSystem cycle_system() {
  CycleSystem cs;
  cs.a = Eigen::MatrixXd::Zero(11, 12);
  int row = 0;
  for (int k = 0; k < 4; ++k) {
    int comp[3];
    int c = 0;
    for (int v = 0; v < 4; ++v)
      if (v != k) comp[c++] = v;
    int i = comp[0], j = comp[1], l = comp[2];
    // Boundary-induced orientation alternates with the vertex parity.
    std::vector<std::pair<int, int>> pos{{i, j}, {j, l}, {l, i}};
    std::vector<std::pair<int, int>> neg{{j, i}, {l, j}, {i, l}};
    if (k % 2 == 1) std::swap(pos, neg);
    for (auto [m, n] : pos) cs.a(row, slot(m, n)) = 1.0;
    ++row;
    for (auto [m, n] : neg) cs.a(row, slot(m, n)) = 1.0;
    ++row;
  }
  for (int j = 0; j < 3; ++j) cs.a(row++, slot(3, j)) = 1.0;
  return cs;
}

}  // namespace

InvariantSet triangle_invariants_front(const EndOrbifoldParams& p) {
  InvariantSet inv;
  double t1 = tau(p.orders[0]), t2 = tau(p.orders[1]), t3 = tau(p.orders[2]);
  inv.rho = {rho_poly(p.s, t1), rho_poly(p.s, t2), rho_poly(p.s, t3)};
  inv.sigma = {p.t * rho_poly(p.s, t2),
               rho_poly(p.s, t1) * rho_poly(p.s, t3) / p.t};
  return inv;
}

InvariantSet triangle_invariants_back(const EndOrbifoldParams& p) {
  InvariantSet inv;
  double t1 = tau(p.orders[0]), t2 = tau(p.orders[1]), t3 = tau(p.orders[2]);
  double s2 = p.s * p.s, s3 = s2 * p.s;
  inv.rho = {rho_poly(p.s, t1) / s2, rho_poly(p.s, t2) / s2,
             rho_poly(p.s, t3) / s2};
  inv.sigma = {p.t * rho_poly(p.s, t2) / s3,
               rho_poly(p.s, t1) * rho_poly(p.s, t3) / (s3 * p.t)};
  return inv;
}

GluingSolve solve_gluing_coefficients(const std::array<EndOrbifoldParams, 4>& ends) {
  require_333(ends);
  CycleSystem cs = cycle_system();
  Eigen::VectorXd b(11);
  for (int k = 0; k < 4; ++k) {
    InvariantSet inv = triangle_invariants_front(ends[k]);
    b(2 * k) = std::log(inv.sigma[0]);
    b(2 * k + 1) = std::log(inv.sigma[1]);
  }
  for (int j = 0; j < 3; ++j) b(8 + j) = std::log(2.0);

  Eigen::VectorXd x = cs.a.colPivHouseholderQr().solve(b);
  double residual = (cs.a * x - b).norm();

  GluingSolve out;
  out.residual = residual;
  out.solvable = residual < 1e-9;
  out.front.setConstant(-1.0);
  out.back.setConstant(-1.0);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      if (m == n) continue;
      out.front(n, m) = std::exp(x(slot(m, n)));
    }
  // Edge relators close exactly when each mixed 2-cycle has unit product.
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      if (m == n) continue;
      out.back(m, n) = 1.0 / out.front(n, m);
    }
  return out;
}

double doubled_tetrahedron_t_product(double s) {
  double p = s * s - s + 1.0;
  return p * p;
}

Feasibility solve_doubled_tetrahedron_constraints(
    const std::array<EndOrbifoldParams, 4>& ends) {
  require_333(ends);
  Feasibility out;
  double s0 = ends[0].s;
  for (int k = 1; k < 4; ++k) {
    if (std::abs(ends[k].s - s0) > 1e-9) {
      out.reason = "s mismatch";
      return out;
    }
  }
  double c = doubled_tetrahedron_t_product(s0);
  double prod = 1.0;
  for (const auto& e : ends) prod *= e.t;
  if (std::abs(prod - c) > 1e-6) {
    out.reason = "t-product";
    return out;
  }
  out.feasible = true;
  out.c_value = c;
  return out;
}

Eigen::VectorXd doubled_tetrahedron_constraint_map(const Eigen::VectorXd& st8) {
  if (st8.size() != 8) throw Error("constraint map expects 8 parameters");
  auto P = [](double s) { return s * s - s + 1.0; };
  std::vector<double> front, back;
  for (int k = 0; k < 4; ++k) {
    double s = st8(2 * k);
    front.push_back(P(s));
    back.push_back(P(s) / (s * s));
  }
  Eigen::VectorXd g(13);
  int row = 0;
  // Edge cross-ratio matching, both triangle families.
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) g(row++) = front[k] - front[l];
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) g(row++) = back[k] - back[l];
  // Sigma-quadruple consistency: sum_k (2 log t_k - log P(s_k)) = 0.
  double acc = 0.0;
  for (int k = 0; k < 4; ++k)
    acc += 2.0 * std::log(st8(2 * k + 1)) - std::log(P(st8(2 * k)));
  g(12) = acc;
  return g;
}

int local_dimension(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& constraints,
    const Eigen::VectorXd& at, double step, double sv_tol) {
  Eigen::VectorXd g0 = constraints(at);
  const int n = static_cast<int>(at.size());
  const int m = static_cast<int>(g0.size());
  if (m == 0) return n;
  Eigen::MatrixXd jac(m, n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(i) = step;
    jac.col(i) = (constraints(at + e) - constraints(at - e)) / (2.0 * step);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > sv_tol) ++rank;
  return n - rank;
}

int doubled_tetrahedron_local_dimension(
    const std::array<EndOrbifoldParams, 4>& at, double step) {
  require_333(at);
  Eigen::VectorXd st8(8);
  for (int k = 0; k < 4; ++k) {
    st8(2 * k) = at[k].s;
    st8(2 * k + 1) = at[k].t;
  }
  return local_dimension(doubled_tetrahedron_constraint_map, st8, step);
}

}  // namespace projconvex
