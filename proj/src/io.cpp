#include "qmc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qmc/errors.hpp"

namespace qmc::io {

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number, got " + j.dump());
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + ": non-finite value");
  return x;
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + ": expected an integer, got " + j.dump());
  }
  return j.get<int>();
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("complex number must be a [re, im] pair, got " + j.dump());
  }
  return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be nonempty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("matrix row " + std::to_string(i) + " has the wrong length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a nonempty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json channel_to_json(const KrausSet& k) {
  json ops = json::array();
  for (const auto& a : k.operators()) ops.push_back(matrix_to_json(a));
  return json{{"name", k.label()}, {"dim", k.dim()}, {"kraus", std::move(ops)}};
}

KrausSet channel_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("channel file must hold a JSON object");
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("channel 'name' must be a string");
    name = j.at("name").get<std::string>();
  }
  const int dim = integer(member(j, "dim"), "dim");
  if (dim < 1) throw ParseError("channel 'dim' must be positive");
  const json& kraus = member(j, "kraus");
  if (!kraus.is_array() || kraus.empty()) throw ParseError("'kraus' must be a nonempty array");
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    ComplexMatrix a = matrix_from_json(kraus[i]);
    if (a.rows() != dim || a.cols() != dim) {
      throw ParseError("Kraus operator " + std::to_string(i) + " is " + std::to_string(a.rows()) +
                       "x" + std::to_string(a.cols()) + " but dim is " + std::to_string(dim));
    }
    ops.push_back(std::move(a));
  }
  return KrausSet(std::move(ops), std::move(name));
}

json state_to_json(const DensityMatrix& rho) { return json{{"rho", matrix_to_json(rho.matrix())}}; }

DensityMatrix state_from_json(const json& j) {
  const json& m = j.is_object() ? member(j, "rho") : j;
  return DensityMatrix(matrix_from_json(m));
}

json walk_to_json(const WalkSpec& spec, const WalkState& initial) {
  json graph;
  if (spec.graph.is_cycle()) {
    graph = json{{"cycle", spec.graph.nodes()}};
  } else {
    json ports = json::array();
    for (const auto& p : spec.graph.ports()) ports.push_back(json::array({p.node, p.coin}));
    graph = json{{"nodes", spec.graph.nodes()}, {"degree", spec.graph.degree()}, {"ports", ports}};
  }
  return json{{"graph", graph},
              {"coin", matrix_to_json(spec.coin)},
              {"decoherence_p", spec.decoherence_p},
              {"initial", json{{"amplitudes", vector_to_json(initial.amplitudes())}}}};
}

WalkFile walk_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("walk file must hold a JSON object");
  const json& g = member(j, "graph");
  std::optional<PortGraph> graph;
  if (g.is_object() && g.contains("cycle")) {
    graph = PortGraph::cycle(integer(g.at("cycle"), "graph.cycle"));
  } else {
    const int nodes = integer(member(g, "nodes"), "graph.nodes");
    const int degree = integer(member(g, "degree"), "graph.degree");
    const json& ports = member(g, "ports");
    if (!ports.is_array()) throw ParseError("graph.ports must be an array");
    std::vector<PortTarget> targets;
    for (const auto& p : ports) {
      if (!p.is_array() || p.size() != 2) throw ParseError("each port entry must be [node, coin]");
      targets.push_back({integer(p[0], "port node"), integer(p[1], "port coin")});
    }
    graph = PortGraph(nodes, degree, std::move(targets));
  }
  const double p = j.contains("decoherence_p") ? finite_number(j.at("decoherence_p"), "decoherence_p") : 0.0;
  WalkSpec spec(std::move(*graph), matrix_from_json(member(j, "coin")), p);

  const json& init = member(j, "initial");
  if (init.is_object() && init.contains("amplitudes")) {
    ComplexVector amps = vector_from_json(init.at("amplitudes"));
    if (amps.size() != spec.dim()) {
      throw ParseError("initial amplitudes have length " + std::to_string(amps.size()) +
                       ", walk space has dimension " + std::to_string(spec.dim()));
    }
    return {std::move(spec), WalkState(std::move(amps))};
  }
  const int coin = integer(member(init, "coin"), "initial.coin");
  const int node = integer(member(init, "node"), "initial.node");
  WalkState start = WalkState::basis(spec, coin, node);
  return {std::move(spec), std::move(start)};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace qmc::io
