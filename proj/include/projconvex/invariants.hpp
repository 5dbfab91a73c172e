#ifndef PROJCONVEX_INVARIANTS_HPP
#define PROJCONVEX_INVARIANTS_HPP

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>

#include "projconvex/common.hpp"

namespace projconvex {

// 2 cos(2 pi / order) for a cone point of the given order.
double tau(int order);

struct EndOrbifoldParams {
  std::array<int, 3> orders{3, 3, 3};
  double s = 1.0;
  double t = 1.0;
};

struct InvariantSet {
  std::array<double, 3> rho{};
  std::array<double, 2> sigma{};
  double identity_residual() const {
    return rho[0] * rho[1] * rho[2] - sigma[0] * sigma[1];
  }
};

// Quintuples of the two triangles of a triangulated S_{p1,p2,p3} end, in
// Goldman coordinates (s, t).
InvariantSet triangle_invariants_front(const EndOrbifoldParams& p);
InvariantSet triangle_invariants_back(const EndOrbifoldParams& p);

// Gluing coefficients of the two-tetrahedron complex. Slot (m, n), m != n,
// holds the weight of vertex n when crossing the face opposite vertex m;
// front and back triangle families have separate matrices, diagonal unused.
// The coefficient solve is log-linear: eight oriented vertex-link cycles
// (boundary-induced orientations) carry the per-end sigma data, and three
// slots are pinned by the fixed seed frame. The system is solvable exactly on
// the matching locus.
struct GluingSolve {
  bool solvable = false;
  double residual = 0.0;
  Eigen::Matrix4d front;
  Eigen::Matrix4d back;
};
GluingSolve solve_gluing_coefficients(const std::array<EndOrbifoldParams, 4>& ends);

// The t-product constant of the feasible set, C(s) = (s^2 - s + 1)^2 for
// all-order-3 ends; derived from the cycle system's single consistency
// relation and revalidated by the tests' grid oracle.
double doubled_tetrahedron_t_product(double s);

struct Feasibility {
  bool feasible = false;
  double c_value = 0.0;
  std::string reason;  // empty when feasible
};

// Feasible iff s_0 = ... = s_3 within 1e-9 and prod t_i = C(s) within 1e-6.
// Throws WrongOrders unless every end has orders (3,3,3).
Feasibility solve_doubled_tetrahedron_constraints(
    const std::array<EndOrbifoldParams, 4>& ends);

// Numerical rank of a finite-difference Jacobian, singular values below
// sv_tol treated as zero; returns ambient_dim - rank.
int local_dimension(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& constraints,
    const Eigen::VectorXd& at, double step = 1e-5, double sv_tol = 1e-7);

// The matching system of the doubled tetrahedron as a smooth constraint map
// on (s_0, t_0, ..., s_3, t_3).
Eigen::VectorXd doubled_tetrahedron_constraint_map(const Eigen::VectorXd& st8);

// Local dimension of the feasible set at a feasible parameter point.
int doubled_tetrahedron_local_dimension(
    const std::array<EndOrbifoldParams, 4>& at, double step = 1e-5);

}  // namespace projconvex

#endif
