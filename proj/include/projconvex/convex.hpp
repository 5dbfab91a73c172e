#ifndef PROJCONVEX_CONVEX_HPP
#define PROJCONVEX_CONVEX_HPP

#include <Eigen/Dense>
#include <vector>

#include "projconvex/projcore.hpp"

namespace projconvex {

enum class ConvexVerdict { ProperlyConvex, ConvexNotProper, NotConvex };

// A convex domain carried as cone data on S^n: half-space functionals l with
// inside = {x : l.x > 0}, optional quadric constraints x^T Q x < 0, boundary
// samples as signed unit lifts, and an interior unit lift.
class ConvexBody {
 public:
  int dim = 0;  // projective dimension n (ambient n+1)
  std::vector<Eigen::VectorXd> halfspaces;   // unit functionals
  std::vector<Eigen::MatrixXd> quadrics;     // unit Frobenius norm
  std::vector<Eigen::VectorXd> samples;      // unit, cone-signed
  Eigen::VectorXd interior;                  // unit, cone-signed

  static ConvexBody from_halfspaces(int dim,
                                    std::vector<Eigen::VectorXd> halfspaces,
                                    const Eigen::VectorXd& interior,
                                    std::vector<Eigen::VectorXd> samples = {});

  // Elliptic ball of radius r (radians) about a unit center direction.
  static ConvexBody elliptic_ball(const Eigen::VectorXd& center, double radius,
                                  int n_boundary_samples = 720);

  // Hull of a point cloud (signed unit lifts) in the affine chart of
  // interior_hint; dims 2 and 3. Half-spaces come from the hull facets.
  static ConvexBody hull_of_points(int dim,
                                   const std::vector<Eigen::VectorXd>& cloud,
                                   const Eigen::VectorXd& interior_hint);

  // Max constraint violation of a signed unit lift (negative inside).
  double violation(const Eigen::VectorXd& x) const;
  // Projective membership: either sign within tol.
  bool contains(const Eigen::VectorXd& x, double tol = 1e-9) const;
  bool contains(const ProjPoint& p, double tol = 1e-9) const;
  // Representative of p on the body's cone side (larger interior dot).
  Eigen::VectorXd lift(const ProjPoint& p) const;
};

// Open convex cone with apex at the origin, in generator and/or half-space
// form. Both unit-normalized.
class Cone {
 public:
  int ambient = 0;
  std::vector<Eigen::VectorXd> generators;
  std::vector<Eigen::VectorXd> halfspaces;

  static Cone from_generators(std::vector<Eigen::VectorXd> gens);
  static Cone from_halfspaces(int ambient, std::vector<Eigen::VectorXd> hs);

  bool has_generators() const { return !generators.empty(); }
  bool has_halfspaces() const { return !halfspaces.empty(); }

  // Enumerates extreme rays / facets of the missing form (polytopal cones of
  // modest size only).
  void ensure_generators();
  void ensure_halfspaces();

  bool contains(const Eigen::VectorXd& v, double tol = 1e-12) const;

  // max_{|phi|=1} min over generators of phi.g ; > 0 iff the closure spans a
  // salient (properly convex) cone with the origin exposed.
  double properness_margin() const;
  bool properly_convex(double tol = 1e-8) const;
};

// V* = {phi : phi(v) > 0 for all v in clo(V)\{0}}: generator and half-space
// forms swap. Throws NotProperlyConvex when clo(V) contains a line or V has
// empty interior.
Cone dual_cone(const Cone& v);

// Hausdorff distance in the elliptic metric, computed from boundary samples
// against the opposite body's membership test. Zero iff equal up to sample
// resolution.
double hausdorff_distance(const ConvexBody& k1, const ConvexBody& k2);

// Hausdorff distance between projectivized cones, at generator-cloud
// resolution (max-min over unit rays, with membership zeroing).
double cone_section_hausdorff(const Cone& a, const Cone& b);

ConvexVerdict properly_convex_check(const ConvexBody& body);

// Supremum over sampled boundary pairs of the elliptic length of the chord
// through the body (signed lifts, no antipodal folding).
double max_chord_length(const ConvexBody& body);

// One supporting functional per query point: vanishes there, nonnegative on
// the body. Throws PointNotOnBoundary.
std::vector<Eigen::VectorXd> supporting_halfspaces(
    const ConvexBody& body, const std::vector<ProjPoint>& at);

// Elliptic Chebyshev inradius (largest ball fitting inside, by half-space
// margins for polytopal bodies).
double inradius(const ConvexBody& body);

// 2D convex hull (indices, counterclockwise) of chart points.
std::vector<int> hull_2d(const std::vector<Eigen::Vector2d>& pts);

struct HullFacet {
  std::vector<int> vertex_ids;
  Eigen::VectorXd normal;  // chart-space outward normal
  double offset;           // normal . x <= offset on the hull
};
// 3D convex hull facets of chart points (incremental).
std::vector<HullFacet> hull_3d(const std::vector<Eigen::Vector3d>& pts);

}  // namespace projconvex

#endif
