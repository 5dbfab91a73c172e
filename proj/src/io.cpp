#include "projconvex/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace projconvex {

using nlohmann::json;

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd vec_from_json(const json& a) {
  Eigen::VectorXd v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v(static_cast<int>(i)) = a[i].get<double>();
  return v;
}

json mat_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

Eigen::MatrixXd mat_from_json(const json& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  Eigen::MatrixXd m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = rows[i][j].get<double>();
  return m;
}

}  // namespace

json body_to_json(const ConvexBody& b) {
  json j;
  j["dim"] = b.dim;
  j["halfspaces"] = json::array();
  for (const auto& h : b.halfspaces) j["halfspaces"].push_back(vec_to_json(h));
  j["quadrics"] = json::array();
  for (const auto& q : b.quadrics) j["quadrics"].push_back(mat_to_json(q));
  j["samples"] = json::array();
  for (const auto& s : b.samples) j["samples"].push_back(vec_to_json(s));
  j["interior"] = vec_to_json(b.interior);
  return j;
}

ConvexBody body_from_json(const json& j) {
  ConvexBody b;
  try {
    b.dim = j.at("dim").get<int>();
    for (const auto& h : j.at("halfspaces")) b.halfspaces.push_back(vec_from_json(h).normalized());
    if (j.contains("quadrics"))
      for (const auto& q : j["quadrics"]) {
        Eigen::MatrixXd m = mat_from_json(q);
        b.quadrics.push_back(m / m.norm());
      }
    for (const auto& s : j.at("samples")) b.samples.push_back(vec_from_json(s).normalized());
    b.interior = vec_from_json(j.at("interior")).normalized();
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("body: ") + e.what());
  }
  return b;
}

json cone_to_json(const Cone& c) {
  json j;
  j["dim_ambient"] = c.ambient;
  j["generators"] = json::array();
  for (const auto& g : c.generators) j["generators"].push_back(vec_to_json(g));
  j["halfspaces"] = json::array();
  for (const auto& h : c.halfspaces) j["halfspaces"].push_back(vec_to_json(h));
  return j;
}

Cone cone_from_json(const json& j) {
  try {
    int ambient = j.at("dim_ambient").get<int>();
    std::vector<Eigen::VectorXd> gens, hs;
    if (j.contains("generators"))
      for (const auto& g : j["generators"]) gens.push_back(vec_from_json(g));
    if (j.contains("halfspaces"))
      for (const auto& h : j["halfspaces"]) hs.push_back(vec_from_json(h));
    if (!gens.empty()) {
      Cone c = Cone::from_generators(gens);
      for (auto& h : hs) c.halfspaces.push_back(h.normalized());
      return c;
    }
    if (!hs.empty()) return Cone::from_halfspaces(ambient, hs);
    throw SpecParseError("cone: neither generators nor halfspaces present");
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("cone: ") + e.what());
  }
}

json development_to_json(const Development& dev) {
  json j;
  j["dim"] = dev.complex.dim;
  j["gluing"] = {{"front", mat_to_json(dev.data.front)},
                 {"back", mat_to_json(dev.data.back)}};
  j["placed"] = json::array();
  for (const auto& p : dev.complex.placed) {
    json e;
    e["vertices"] = mat_to_json(p.vertices);
    e["word"] = p.word;
    e["depth"] = p.depth;
    e["parity"] = p.parity;
    j["placed"].push_back(e);
  }
  return j;
}

Development development_from_json(const json& j) {
  Development dev;
  try {
    dev.complex.dim = j.at("dim").get<int>();
    dev.data.front = mat_from_json(j.at("gluing").at("front"));
    dev.data.back = mat_from_json(j.at("gluing").at("back"));
    for (const auto& e : j.at("placed")) {
      PlacedSimplex p;
      p.vertices = mat_from_json(e.at("vertices"));
      p.word = e.at("word").get<std::string>();
      p.depth = e.at("depth").get<int>();
      p.parity = e.value("parity", 0);
      dev.complex.placed.push_back(p);
    }
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("development: ") + e.what());
  }
  return dev;
}

std::string complex_to_obj(const DevelopedComplex& c) {
  std::ostringstream os;
  char buf[128];
  int base = 1;
  for (const auto& p : c.placed) {
    const int nv = static_cast<int>(p.vertices.cols());
    for (int k = 0; k < nv; ++k) {
      Eigen::VectorXd v = p.vertices.col(k);
      // Affine chart of the last coordinate sum: project to the unit sphere
      // representative for a stable, chart-free vertex record.
      v.normalize();
      if (v.size() == 4)
        std::snprintf(buf, sizeof(buf), "v %.9f %.9f %.9f\n", v(0) , v(1), v(2));
      else
        std::snprintf(buf, sizeof(buf), "v %.9f %.9f %.9f\n", v(0), v(1),
                      v.size() > 2 ? v(2) : 0.0);
      os << buf;
    }
    if (nv == 4) {
      const int f[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
      for (const auto& face : f)
        os << "f " << base + face[0] << ' ' << base + face[1] << ' '
           << base + face[2] << '\n';
    } else if (nv == 3) {
      os << "f " << base << ' ' << base + 1 << ' ' << base + 2 << '\n';
    }
    base += nv;
  }
  return os.str();
}

OrbifoldSpec orbifold_spec_from_json(const json& j) {
  OrbifoldSpec s;
  try {
    s.name = j.at("name").get<std::string>();
    s.kind = j.at("kind").get<std::string>();
    if (s.kind != "reflection_polytope" && s.kind != "doubled_reflection" &&
        s.kind != "triangulated")
      throw SpecParseError("spec: unknown kind '" + s.kind + "'");

    if (s.kind == "reflection_polytope") {
      if (!j.contains("polytope"))
        throw SpecParseError("spec: missing field 'polytope'");
      for (const auto& h : j["polytope"].at("halfspaces"))
        s.polytope_halfspaces.push_back(vec_from_json(h));
      s.polytope_interior = vec_from_json(j["polytope"].at("interior"));
      if (!j.contains("orders"))
        throw SpecParseError("spec: missing field 'orders'");
      const auto& om = j["orders"];
      int n = static_cast<int>(om.size());
      s.orders.resize(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.orders(a, b) = om[a][b].get<int>();
      if (j.contains("params") && j["params"].contains("lambdas")) {
        for (const auto& e : j["params"]["lambdas"]) {
          int a = e.at("i").get<int>(), b = e.at("j").get<int>();
          s.lambdas[{std::min(a, b), std::max(a, b)}] = e.at("value").get<double>();
        }
      }
    } else if (s.kind == "doubled_reflection") {
      if (!j.contains("params") || !j["params"].contains("ends"))
        throw SpecParseError("spec: missing field 'params.ends'");
      const auto& ends = j["params"]["ends"];
      if (ends.size() != 4)
        throw SpecParseError("spec: doubled_reflection needs exactly 4 ends");
      for (int k = 0; k < 4; ++k) {
        if (!ends[k].contains("orders"))
          throw SpecParseError("spec: end " + std::to_string(k) +
                               " missing field 'orders'");
        for (int i = 0; i < 3; ++i)
          s.ends[k].orders[i] = ends[k]["orders"][i].get<int>();
        s.ends[k].s = ends[k].at("s").get<double>();
        s.ends[k].t = ends[k].at("t").get<double>();
      }
    } else {
      if (!j.contains("gluing"))
        throw SpecParseError("spec: triangulated kind needs field 'gluing'");
      s.raw_front = mat_from_json(j["gluing"].at("front"));
      s.raw_back = mat_from_json(j["gluing"].at("back"));
      s.has_raw_coeffs = true;
    }

    if (j.contains("run")) {
      const auto& r = j["run"];
      s.run.depth = r.value("depth", s.run.depth);
      s.run.n_samples = r.value("n_samples", s.run.n_samples);
      s.run.seed = r.value("seed", static_cast<std::uint64_t>(0));
      s.run.eps0 = r.value("eps0", s.run.eps0);
    }
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("spec: ") + e.what());
  }
  return s;
}

OrbifoldSpec load_orbifold_spec(const std::string& path) {
  std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("spec: ") + e.what());
  }
  return orbifold_spec_from_json(j);
}

void Report::add(const std::string& name, bool pass, double value, double tol,
                 const std::string& detail) {
  checks.push_back({name, pass, value, tol, detail});
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

json Report::to_json() const {
  json j;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"value", c.value},
                           {"tolerance", c.tolerance},
                           {"detail", c.detail}});
  }
  j["timings_ms"] = timings_ms;
  j["all_pass"] = all_pass();
  return j;
}

std::string Report::render_text() const {
  std::ostringstream os;
  char buf[256];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof(buf), "[%s] %-34s value=%.6g tol=%.3g %s\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                  c.tolerance, c.detail.c_str());
    os << buf;
  }
  os << (all_pass() ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n");
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace projconvex
