#include "skewlines/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "skewlines/error.hpp"

namespace skewlines {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

Vector3 vector_from_json(const Json& j, const char* field) {
  if (!j.is_array() || j.size() != 3) invalid(std::string(field) + " must be [x, y, z]");
  Vector3 v;
  for (int k = 0; k < 3; ++k) {
    if (!j[k].is_number()) invalid(std::string(field) + " entries must be numbers");
    v[k] = j[k].get<double>();
  }
  return v;
}

Json vector_to_json(const Vector3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const LineConfiguration& config) {
  Json lines = Json::array();
  for (const DirectedLine& l : config.lines) {
    lines.push_back({{"point", vector_to_json(l.moment_point())},
                     {"direction", vector_to_json(l.direction())}});
  }
  Json j = {{"pair_distance", config.target_distance}, {"lines", std::move(lines)}};
  if (!config.label.empty()) j["label"] = config.label;
  return j;
}

LineConfiguration configuration_from_json(const Json& j) {
  if (!j.is_object()) invalid("configuration must be a JSON object");
  LineConfiguration config;
  if (!j.contains("pair_distance") || !j["pair_distance"].is_number()) {
    invalid("configuration needs a numeric pair_distance");
  }
  config.target_distance = j["pair_distance"].get<double>();
  if (!(config.target_distance > 0.0)) invalid("pair_distance must be positive");
  if (j.contains("label")) {
    if (!j["label"].is_string()) invalid("label must be a string");
    config.label = j["label"].get<std::string>();
  }
  if (!j.contains("lines") || !j["lines"].is_array() || j["lines"].empty()) {
    invalid("configuration needs a non-empty lines array");
  }
  for (const Json& line : j["lines"]) {
    if (!line.is_object() || !line.contains("point") || !line.contains("direction")) {
      invalid("each line needs point and direction");
    }
    config.lines.push_back(DirectedLine::through(vector_from_json(line["point"], "point"),
                                                 vector_from_json(line["direction"], "direction")));
  }
  return config;
}

Json to_json(const SignedCompleteGraph& g) {
  Json edges = Json::array();
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) edges.push_back({i, j, to_int(g.sign(i, j))});
  }
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

SignedCompleteGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    invalid("graph needs an integer n");
  }
  const int n = j["n"].get<int>();
  if (n < 1) invalid("graph needs n >= 1");
  if (!j.contains("edges") || !j["edges"].is_array()) invalid("graph needs an edges array");
  SignedCompleteGraph g(n);
  std::set<std::pair<int, int>> seen;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer()) {
      invalid("each edge must be [i, j, sign]");
    }
    const int a = e[0].get<int>();
    const int b = e[1].get<int>();
    if (a < 1 || b > n || a >= b) invalid("edge endpoints must satisfy 1 <= i < j <= n");
    if (!seen.insert({a, b}).second) {
      invalid("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    g.set_sign(a, b, sign_from_int(e[2].get<int>()));
  }
  if (seen.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
    invalid("graph is missing edges");
  }
  return g;
}

Json to_json(const Signature& s) { return Json::array({s.positive, s.negative, s.zero}); }

Json to_json(const SymmetricMatrixReport& report) {
  Json eig = Json::array();
  for (double lambda : report.eigenvalues) eig.push_back(lambda);
  return {{"n", report.n()},
          {"entries", matrix_to_json(report.entries)},
          {"eigenvalues", std::move(eig)},
          {"signature", to_json(report.signature)},
          {"zero_tol", report.zero_tol}};
}

Json to_json(const CliqueWitness& w) {
  return {{"vertices", w.vertices}, {"sign", to_int(w.sign)}};
}

Json to_json(const SwitchingMap& m) {
  return {{"permutation", m.permutation}, {"switching_set", m.switching_set}};
}

Json to_json(const VerificationReport& r) {
  Json classes = Json::array();
  for (PairClass c : r.pair_classes) classes.push_back(to_string(c));
  Json j = {{"configuration", to_json(r.configuration)},
            {"tolerance", r.tolerance},
            {"pairwise_distances", r.pairwise_distances},
            {"max_abs_deviation", r.max_abs_deviation},
            {"pair_classes", std::move(classes)},
            {"all_skew", r.all_skew},
            {"mono_k5_any_orientation", r.mono_k5_any_orientation},
            {"passed", r.passed}};
  j["chirality_graph"] = r.chirality_graph ? to_json(*r.chirality_graph) : Json(nullptr);
  j["mono_clique_5"] = r.mono_clique_5 ? to_json(*r.mono_clique_5) : Json(nullptr);
  j["signed_gram_signature"] =
      r.signed_gram_signature ? to_json(*r.signed_gram_signature) : Json(nullptr);
  j["lemma_signature"] = r.lemma_signature ? to_json(*r.lemma_signature) : Json(nullptr);
  return j;
}

Json to_json(const SolverOptions& o) {
  return {{"n", o.n},
          {"seed", o.seed},
          {"multistarts", o.multistarts},
          {"max_iterations", o.max_iterations},
          {"residual_tol", o.residual_tol},
          {"step_tol", o.step_tol},
          {"target_distance", o.target_distance},
          {"accept_tol", o.accept_tol},
          {"threads", o.threads}};
}

SolverOptions solver_options_from_json(const Json& j) {
  if (!j.is_object()) invalid("solver options must be a JSON object");
  SolverOptions o;
  try {
    o.n = j.value("n", o.n);
    o.seed = j.value("seed", o.seed);
    o.multistarts = j.value("multistarts", o.multistarts);
    o.max_iterations = j.value("max_iterations", o.max_iterations);
    o.residual_tol = j.value("residual_tol", o.residual_tol);
    o.step_tol = j.value("step_tol", o.step_tol);
    o.target_distance = j.value("target_distance", o.target_distance);
    o.accept_tol = j.value("accept_tol", o.accept_tol);
    o.threads = j.value("threads", o.threads);
  } catch (const Json::exception& e) {
    invalid(std::string("bad solver option: ") + e.what());
  }
  o.validate();
  return o;
}

std::string export_obj(const LineConfiguration& config, double radius, double length,
                       int segments) {
  if (!(radius > 0.0) || !(length > 0.0) || segments < 3) {
    invalid("cylinder export needs radius > 0, length > 0 and at least 3 segments");
  }
  std::ostringstream os;
  os.precision(17);
  os << "# " << config.size() << " cylinders, radius " << radius << ", length " << length << "\n";
  int base = 1;
  for (int k = 0; k < config.size(); ++k) {
    const DirectedLine& line = config.lines[k];
    const Vector3 axis = line.direction();
    const Vector3 u = axis.unitOrthogonal();
    const Vector3 v = axis.cross(u);
    os << "o line_" << k + 1 << "\n";
    for (double end : {-0.5 * length, 0.5 * length}) {
      for (int s = 0; s < segments; ++s) {
        const double angle = 2.0 * std::numbers::pi * s / segments;
        const Vector3 p = line.point_at(end) + radius * (std::cos(angle) * u + std::sin(angle) * v);
        os << "v " << p.x() << " " << p.y() << " " << p.z() << "\n";
      }
    }
    for (int s = 0; s < segments; ++s) {
      const int a = base + s;
      const int b = base + (s + 1) % segments;
      os << "f " << a << " " << b << " " << b + segments << " " << a + segments << "\n";
    }
    os << "f";
    for (int s = segments - 1; s >= 0; --s) os << " " << base + s;
    os << "\nf";
    for (int s = 0; s < segments; ++s) os << " " << base + segments + s;
    os << "\n";
    base += 2 * segments;
  }
  return os.str();
}

std::string export_csv(const LineConfiguration& config) {
  std::ostringstream os;
  os.precision(17);
  os << "index,point_x,point_y,point_z,direction_x,direction_y,direction_z\n";
  for (int k = 0; k < config.size(); ++k) {
    const Vector3& p = config.lines[k].moment_point();
    const Vector3& d = config.lines[k].direction();
    os << k + 1 << "," << p.x() << "," << p.y() << "," << p.z() << "," << d.x() << "," << d.y()
       << "," << d.z() << "\n";
  }
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text) || !out.flush()) invalid("cannot write " + path);
}

}  // namespace skewlines
