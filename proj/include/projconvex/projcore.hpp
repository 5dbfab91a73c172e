#ifndef PROJCONVEX_PROJCORE_HPP
#define PROJCONVEX_PROJCORE_HPP

#include <Eigen/Dense>

#include "projconvex/common.hpp"

namespace projconvex {

// RealProjective: canonical representative has unit norm and positive first
// nonzero coordinate. Sphere: unit norm only, sign kept (quotient by positive
// scalars).
enum class ProjMode { RealProjective, Sphere };

class ProjPoint {
 public:
  ProjPoint() = default;
  // Canonicalizes v. Throws ZeroVector if |v| < 1e-300.
  explicit ProjPoint(const Eigen::VectorXd& v,
                     ProjMode mode = ProjMode::RealProjective);

  const Eigen::VectorXd& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  ProjMode mode() const { return mode_; }

  // Projective equality (sign-insensitive), elliptic distance below tol.
  bool approx_equal(const ProjPoint& other, double tol = 1e-9) const;

 private:
  Eigen::VectorXd coords_;
  ProjMode mode_ = ProjMode::RealProjective;
};

enum class MapMode { Pgl, SlPm };

class ProjMap {
 public:
  ProjMap() = default;
  ProjMap(const Eigen::MatrixXd& m, MapMode mode = MapMode::Pgl);

  const Eigen::MatrixXd& matrix() const { return m_; }
  MapMode map_mode() const { return mode_; }
  int dim() const { return static_cast<int>(m_.rows()) - 1; }

  ProjMap inverse() const;
  ProjMap operator*(const ProjMap& rhs) const;

 private:
  Eigen::MatrixXd m_;
  MapMode mode_ = MapMode::Pgl;
};

// A projective line spanned by two independent points.
class ProjLine {
 public:
  ProjLine(const ProjPoint& a, const ProjPoint& b);
  const ProjPoint& a() const { return a_; }
  const ProjPoint& b() const { return b_; }
  int dim() const { return a_.dim(); }

  // point(u) = normalize((1-u) a + u b) in the span parametrization.
  ProjPoint point(double u) const;

 private:
  ProjPoint a_, b_;
};

ProjPoint normalize(const Eigen::VectorXd& v,
                    ProjMode mode = ProjMode::RealProjective);

ProjPoint apply(const ProjMap& g, const ProjPoint& p);

// Cross ratio (a,b,c,d) = (alpha_c - alpha_a)(alpha_d - alpha_b) /
// ((alpha_d - alpha_a)(alpha_c - alpha_b)) in any affine chart alpha of the
// common line. Chart independent; throws NotCollinear / DegeneratePoints.
double cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& d);

// Scales g to determinant +1 (or -1 when orientation_reversing). For odd
// ambient size the requested sign always has a representative; for even size
// the two representatives +-M are disambiguated by making the first nonzero
// entry of the first column positive. Throws Error when the requested
// determinant sign is unattainable (even ambient size, wrong det sign).
ProjMap lift_to_slpm(const ProjMap& g, bool orientation_reversing);

// Elliptic (quotient round) metric d(p,q) = arccos(|<p,q>|) on unit
// representatives.
double elliptic_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q);
double elliptic_distance(const ProjPoint& p, const ProjPoint& q);

}  // namespace projconvex

#endif
