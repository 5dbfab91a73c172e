#ifndef PROJCONVEX_IO_HPP
#define PROJCONVEX_IO_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "projconvex/convex.hpp"
#include "projconvex/coxeter.hpp"
#include "projconvex/devmap.hpp"

namespace projconvex {

nlohmann::json body_to_json(const ConvexBody& b);
ConvexBody body_from_json(const nlohmann::json& j);

nlohmann::json cone_to_json(const Cone& c);
Cone cone_from_json(const nlohmann::json& j);

// Developed complexes round-trip with their gluing data so reports can be
// recomputed from the file alone.
nlohmann::json development_to_json(const Development& dev);
Development development_from_json(const nlohmann::json& j);

std::string complex_to_obj(const DevelopedComplex& c);

struct RunOptions {
  int depth = 5;
  long long n_samples = 100000;
  std::uint64_t seed = 0;
  double eps0 = 0.1;
};

struct OrbifoldSpec {
  std::string name;
  std::string kind;  // reflection_polytope | doubled_reflection | triangulated
  // reflection_polytope
  std::vector<Eigen::VectorXd> polytope_halfspaces;
  Eigen::VectorXd polytope_interior;
  Eigen::MatrixXi orders;
  std::map<std::pair<int, int>, double> lambdas;
  // doubled_reflection
  std::array<EndOrbifoldParams, 4> ends;
  // triangulated (raw gluing coefficients)
  bool has_raw_coeffs = false;
  Eigen::Matrix4d raw_front, raw_back;

  RunOptions run;
};

OrbifoldSpec orbifold_spec_from_json(const nlohmann::json& j);
OrbifoldSpec load_orbifold_spec(const std::string& path);

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  std::map<std::string, double> timings_ms;

  void add(const std::string& name, bool pass, double value, double tol,
           const std::string& detail = "");
  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string render_text() const;
};

std::string read_file(const std::string& path);  // FileNotFound
void write_file(const std::string& path, const std::string& content);

}  // namespace projconvex

#endif
