#ifndef PROJCONVEX_COXETER_HPP
#define PROJCONVEX_COXETER_HPP

#include <map>
#include <utility>

#include "projconvex/complexes.hpp"
#include "projconvex/convex.hpp"

namespace projconvex {

// Product-preserving rescaling of the Cartan pairings: for i < j,
// a_ij -> -lambda |a_ij|, a_ji -> -|a_ji| / lambda.
struct DeformationParams {
  std::map<std::pair<int, int>, double> lambdas;
  double get(int i, int j) const {
    auto it = lambdas.find({std::min(i, j), std::max(i, j)});
    double l = (it == lambdas.end()) ? 1.0 : it->second;
    return i < j ? l : 1.0 / l;
  }
};

// Order matrix conventions: n_ij >= 2 finite dihedral order, 0 = facets not
// adjacent (no pairing), -1 = infinite-order marker (pairing product 4).
class CoxeterSystem {
 public:
  ConvexBody polytope;
  std::vector<Eigen::VectorXd> vertices;  // polytope vertex lifts
  Eigen::MatrixXi orders;
  Eigen::MatrixXd cartan;
  std::vector<Eigen::MatrixXd> reflections;

  int n_facets() const { return static_cast<int>(reflections.size()); }
  int dim() const { return polytope.dim; }
};

CoxeterSystem cartan_from_orders(const ConvexBody& polytope,
                                 const Eigen::MatrixXi& orders,
                                 const DeformationParams& params = {});

struct PairRelation {
  int i = 0, j = 0, order = 0;
  double residual = 0.0;      // |(Ri Rj)^n - I|_inf
  bool order_minimal = true;  // no smaller power is the identity
  double trace = 0.0;         // tr(Ri Rj)
};

struct RelationReport {
  double max_residual = 0.0;
  bool all_orders_minimal = true;
  std::vector<PairRelation> pairs;
};

RelationReport relation_check(const CoxeterSystem& sys);

struct OrbitOptions {
  long long max_images = 200000;
};

// BFS over reduced words, images of the fundamental polytope, duplicates
// removed by a det-normalized sign-canonical matrix key on a 1e-8 grid.
DevelopedComplex fundamental_orbit(const CoxeterSystem& sys, int word_length_max,
                                   const OrbitOptions& opts = {});

// Hull body of all placed vertices (chart of the chamber centroid), ready for
// properly_convex_check / max_chord_length.
ConvexBody orbit_union_body(const CoxeterSystem& sys,
                            const DevelopedComplex& complex);

}  // namespace projconvex

#endif
