#ifndef PROJCONVEX_SMALLLP_HPP
#define PROJCONVEX_SMALLLP_HPP

#include <Eigen/Dense>
#include <optional>

namespace projconvex {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Eigen::VectorXd x;
  double objective = 0.0;
};

// maximize c.x  subject to  A x <= b,  lo <= x <= hi.
// Dense two-phase simplex with Bland's rule. Sized for the small problems in
// this project (a handful of variables, up to a few thousand rows).
LpResult lp_maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                     const Eigen::VectorXd& b, const Eigen::VectorXd& lo,
                     const Eigen::VectorXd& hi);

// Convenience: box bounds +-box on every variable.
LpResult lp_maximize_boxed(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                           const Eigen::VectorXd& b, double box);

// Wolfe's algorithm for the minimum-norm point of conv{columns of P}.
// The returned norm equals max_{|phi|=1} min_i phi . p_i when that value is
// positive, with the maximizing phi along the returned point.
Eigen::VectorXd min_norm_point(const Eigen::MatrixXd& P, double tol = 1e-12);

// Largest margin over unit functionals: max_{|phi|_2 = 1} min_i phi . p_i,
// together with a maximizer. Negative margin means 0 lies in the hull interior
// direction-wise (no separating functional).
struct MarginResult {
  double margin;
  Eigen::VectorXd phi;
};
MarginResult best_margin(const Eigen::MatrixXd& P);

}  // namespace projconvex

#endif
