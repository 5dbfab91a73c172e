#ifndef PROJCONVEX_DEVMAP_HPP
#define PROJCONVEX_DEVMAP_HPP

#include <array>
#include <map>

#include "projconvex/complexes.hpp"
#include "projconvex/convex.hpp"
#include "projconvex/invariants.hpp"

namespace projconvex {

// Gluing data of the doubled-tetrahedron complex: two cells (front/back),
// every face glued to the same-index face of the other cell with identity
// vertex correspondence. Crossing the face opposite vertex m of a placed cell
// with column frame M replaces column m by
//     p = sum_{j != m} c_j q_j - q_m ,
// i.e. right-multiplies M by the identity-with-one-column substitution; the
// -1 normalization makes every substitution an involution. The coefficient
// triples are the per-face invariant data (all nonzero in the holographic
// regime), one matrix per cell side.
struct GluingData {
  int dim = 3;
  Eigen::Matrix4d front;  // front(j, m): weight of vertex j crossing face m
  Eigen::Matrix4d back;

  // Coefficients realizing end parameters (s_k, t_k) through the cycle-system
  // solve; throws Error when that system is inconsistent.
  static GluingData doubled_tetrahedron(const std::array<EndOrbifoldParams, 4>& ends);
  // The complete-structure point: ends all at (s, t) = (1, 1).
  static GluingData hyperbolic_point();

  Eigen::Matrix4d substitution(int side, int face) const;
  void validate() const;  // ZeroCrossRatio on vanishing coefficients
};

struct DevelopOptions {
  long long max_placed = 200000;
  double degenerate_tol = 1e-12;
};

struct RelatorResidual {
  int face_a = 0, face_b = 0;  // edge = complement of the face pair
  double residual = 0.0;       // min over sign of |(S^f_a S^b_b)^3 -+ I|_inf
};

class Development {
 public:
  DevelopedComplex complex;
  GluingData data;

  // Rotation around the edge complementary to faces {m, n}, as seen from a
  // front cell: S^front_m S^back_n.
  Eigen::Matrix4d edge_rotation(int m, int n) const;

  // (edge rotation)^3 residuals for all ordered face pairs.
  std::vector<RelatorResidual> relator_residuals() const;
  double max_relator_residual() const;

  // The four combinatorial end vertices with their fixing rotations.
  struct End {
    ProjPoint vertex;
    std::vector<ProjMap> generators;
  };
  std::array<End, 4> seed_ends() const;
};

Development develop(const GluingData& data, int depth_max,
                    const DevelopOptions& opts = {});

struct ConfinementReport {
  double max_violation = 0.0;  // against the five seed-vertex half-spaces
  double max_chord = 0.0;      // elliptic, over the placed vertex cloud
  double eps0 = 0.1;
  bool pass = false;
  std::vector<Eigen::VectorXd> halfspaces;
};
ConfinementReport confinement_check(const Development& dev, double eps0 = 0.1);

enum class DevConvexity { StrictlyConvexSoFar, ConvexSoFar, NotConvex };
DevConvexity convexity_verdict(const Development& dev);

enum class EndClass {
  Horospherical,
  LensCompatible,
  TotallyGeodesicCompatible,
  Unclassified
};

struct EndDescriptor {
  ProjPoint vertex;
  std::vector<ProjMap> generators;
};

// Eigenvalue classification of a radial end from its vertex-fixing
// generators. Throws VertexNotFixed.
EndClass classify_end(const EndDescriptor& end);

}  // namespace projconvex

#endif
