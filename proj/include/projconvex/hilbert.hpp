#ifndef PROJCONVEX_HILBERT_HPP
#define PROJCONVEX_HILBERT_HPP

#include "projconvex/convex.hpp"

namespace projconvex {

// Read-only context for Hilbert-metric queries on a properly convex domain.
// The chart is the affine patch of the body's interior point.
class HilbertContext {
 public:
  explicit HilbertContext(ConvexBody body);
  const ConvexBody& body() const { return body_; }

  double distance(const ProjPoint& p, const ProjPoint& q) const;

  // Minimizer of t -> distance(x, line(t)) restricted to the chord of the
  // line inside the domain; midpoint of the minimizing interval when the
  // minimizer is not unique.
  ProjPoint foot_of_perpendicular(const ProjPoint& x, const ProjLine& line) const;

  // Chord endpoint parameters (u_minus < 0 < 1 < u_plus) for the segment
  // gamma(u) = (1-u) a + u b through the domain, in the context chart.
  std::pair<double, double> chord_endpoints(const Eigen::VectorXd& chart_a,
                                            const Eigen::VectorXd& chart_b) const;

  Eigen::VectorXd to_chart(const ProjPoint& p) const;  // scaled lift, c.x = 1

 private:
  ConvexBody body_;
  double interior_margin(const Eigen::VectorXd& chart_point) const;

  double distance_chart(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
};

}  // namespace projconvex

#endif
