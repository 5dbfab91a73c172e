#ifndef PROJCONVEX_COMPLEXES_HPP
#define PROJCONVEX_COMPLEXES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace projconvex {

// One image of a base cell: vertex lifts as matrix columns (signs preserved,
// they carry the cone side), the word that produced it, and its BFS depth.
struct PlacedSimplex {
  Eigen::MatrixXd vertices;  // (n+1) x n_vertices
  std::string word;
  int depth = 0;
  int parity = 0;  // devmap: 0 front, 1 back
};

struct DevelopedComplex {
  int dim = 0;  // projective dimension of the ambient space
  std::vector<PlacedSimplex> placed;

  std::vector<Eigen::VectorXd> all_vertex_lifts() const {
    std::vector<Eigen::VectorXd> out;
    for (const auto& p : placed)
      for (int c = 0; c < p.vertices.cols(); ++c) out.push_back(p.vertices.col(c));
    return out;
  }

  int count_at_depth(int d) const {
    int n = 0;
    for (const auto& p : placed)
      if (p.depth == d) ++n;
    return n;
  }
};

}  // namespace projconvex

#endif
