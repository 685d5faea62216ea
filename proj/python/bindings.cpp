#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmc/catalog.hpp"
#include "qmc/errors.hpp"
#include "qmc/io.hpp"
#include "qmc/limits.hpp"
#include "qmc/report.hpp"
#include "qmc/spectral.hpp"
#include "qmc/walks.hpp"

namespace py = pybind11;
using namespace qmc;

namespace {

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog::entries()) out.push_back(e.name);
  return out;
}

PortGraph port_graph(int nodes, int degree, const std::vector<std::pair<int, int>>& ports) {
  std::vector<PortTarget> targets;
  for (const auto& [node, coin] : ports) targets.push_back({node, coin});
  return PortGraph(nodes, degree, std::move(targets));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bistochastic channels, quantum Markov chain limits and coined quantum walks";

  auto base = py::register_exception<Error>(m, "QmcError", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InvalidState>(m, "InvalidState", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotBistochastic>(m, "NotBistochastic", base.ptr());
  py::register_exception<PeripheralObstruction>(m, "PeripheralObstruction", base.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("trace_preserving", &ValidationReport::trace_preserving)
      .def_readonly("tp_residual", &ValidationReport::tp_residual)
      .def_readonly("unital", &ValidationReport::unital)
      .def_readonly("unital_residual", &ValidationReport::unital_residual)
      .def_readonly("bistochastic", &ValidationReport::bistochastic);

  py::class_<KrausSet>(m, "KrausSet")
      .def(py::init<std::vector<ComplexMatrix>, std::string>(), py::arg("operators"), py::arg("label") = "")
      .def_property_readonly("dim", &KrausSet::dim)
      .def_property_readonly("operators", &KrausSet::operators)
      .def_property_readonly("label", &KrausSet::label)
      .def_property_readonly("validation", &KrausSet::validation)
      .def_property_readonly("bistochastic", &KrausSet::bistochastic)
      .def("__len__", &KrausSet::size);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix, double>(), py::arg("rho"), py::arg("tol") = kDensityTol)
      .def_static("pure", &DensityMatrix::pure)
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim);

  m.def("kraus_validate", &kraus_validate, py::arg("channel"), py::arg("tol") = kDefaultValidationTol);
  m.def("apply", py::overload_cast<const KrausSet&, const ComplexMatrix&>(&qmc::apply));
  m.def("apply_adjoint", &apply_adjoint);
  m.def("superoperator", [](const KrausSet& k) { return superoperator(k).matrix; });
  m.def("operator_norm", &operator_norm);

  py::class_<SpectralOptions>(m, "SpectralOptions")
      .def(py::init<>())
      .def_readwrite("peripheral_tol", &SpectralOptions::peripheral_tol)
      .def_readwrite("cluster_tol", &SpectralOptions::cluster_tol)
      .def_readwrite("rank_tol", &SpectralOptions::rank_tol);

  py::class_<EigenCluster>(m, "EigenCluster")
      .def_readonly("value", &EigenCluster::value)
      .def_readonly("multiplicity", &EigenCluster::multiplicity);

  py::class_<SpectralData>(m, "SpectralData")
      .def_readonly("eigenvalues", &SpectralData::eigenvalues)
      .def_readonly("peripheral", &SpectralData::peripheral)
      .def_readonly("interior", &SpectralData::interior)
      .def_readonly("fixed_space_basis", &SpectralData::fixed_space_basis)
      .def_readonly("g1", &SpectralData::g1);

  py::class_<ConjectureResult>(m, "ConjectureResult")
      .def_readonly("basis", &ConjectureResult::basis)
      .def_readonly("numerical_basis", &ConjectureResult::numerical_basis)
      .def_readonly("distance", &ConjectureResult::distance)
      .def_readonly("agrees_with_numerical", &ConjectureResult::agrees_with_numerical)
      .def_readonly("conjugate_distance", &ConjectureResult::conjugate_distance);

  py::class_<ChannelClass>(m, "ChannelClass")
      .def_readonly("category", &ChannelClass::category)
      .def_readonly("peripheral_count", &ChannelClass::peripheral_count)
      .def_readonly("g1", &ChannelClass::g1)
      .def_readonly("evidence", &ChannelClass::evidence);

  m.def("spectrum", &spectrum, py::arg("channel"), py::arg("opts") = SpectralOptions{});
  m.def("fixed_space_commutant", &fixed_space_commutant, py::arg("channel"),
        py::arg("rank_tol") = linalg::kDefaultRankTol);
  m.def("conjecture_eigenspace", &conjecture_eigenspace, py::arg("channel"), py::arg("lam"),
        py::arg("opts") = SpectralOptions{});
  m.def("classify", &classify, py::arg("channel"), py::arg("opts") = SpectralOptions{});
  m.def("strict_limit", &strict_limit, py::arg("channel"), py::arg("rho0"), py::arg("opts") = SpectralOptions{});
  m.def("cesaro_limit", &cesaro_limit, py::arg("channel"), py::arg("rho0"), py::arg("opts") = SpectralOptions{});
  m.def("empirical_cesaro", &empirical_cesaro);
  m.def(
      "evolve_distances",
      [](const KrausSet& k, const DensityMatrix& rho0, int steps, const DensityMatrix& reference) {
        EvolveOptions opts;
        opts.reference = reference;
        return evolve(k, rho0, steps, opts).distances_to_limit;
      },
      py::arg("channel"), py::arg("rho0"), py::arg("steps"), py::arg("reference"));

  py::class_<PortGraph>(m, "PortGraph")
      .def(py::init(&port_graph), py::arg("nodes"), py::arg("degree"), py::arg("ports"))
      .def_static("cycle", &PortGraph::cycle)
      .def_property_readonly("nodes", &PortGraph::nodes)
      .def_property_readonly("degree", &PortGraph::degree)
      .def("shift", &PortGraph::shift);

  py::class_<WalkSpec>(m, "WalkSpec")
      .def(py::init<PortGraph, ComplexMatrix, double>(), py::arg("graph"), py::arg("coin"), py::arg("p") = 0.0)
      .def_property_readonly("dim", &WalkSpec::dim);

  py::class_<WalkState>(m, "WalkState")
      .def(py::init<ComplexVector>())
      .def_static("basis", &WalkState::basis)
      .def_property_readonly("amplitudes", &WalkState::amplitudes);

  m.def("build_walk_unitary", &build_walk_unitary);
  m.def("build_walk_channel", &build_walk_channel);
  m.def("walk_limit_distribution",
        [](const WalkSpec& s, const WalkState& a, double tol) { return walk_limit_distribution(s, a, tol).probabilities; },
        py::arg("spec"), py::arg("alpha0"), py::arg("phase_tol") = 1e-8);
  m.def("empirical_time_avg",
        [](const WalkSpec& s, const WalkState& a, int steps) { return empirical_time_avg(s, a, steps).probabilities; });
  m.def("position_distribution",
        [](const DensityMatrix& rho, int nodes) { return position_distribution(rho, nodes).probabilities; });

  m.def("catalog_names", &catalog_names);
  m.def("catalog_build", &catalog::build, py::arg("name"), py::arg("params") = catalog::Parameters{});
  m.def("corollary6_check", [](const KrausSet& k) {
    const auto r = catalog::corollary6_check(k);
    return py::make_tuple(r.applies, r.p);
  });
  m.def("random_unitary_mixtures", [](int count, std::uint64_t seed) {
    catalog::Rng rng(seed);
    std::vector<KrausSet> out;
    for (int i = 0; i < count; ++i) out.push_back(catalog::random_unitary_mixture(2 + i % 2, 2 + i % 3, rng));
    return out;
  }, py::arg("count"), py::arg("seed") = catalog::kDefaultSeed);

  m.def("channel_to_json", [](const KrausSet& k) { return io::channel_to_json(k).dump(); });
  m.def("channel_from_json", [](const std::string& s) {
    try {
      return io::channel_from_json(io::json::parse(s));
    } catch (const io::json::exception& e) {
      throw ParseError(e.what());
    }
  });
  m.def("classification_report", [](const KrausSet& k) { return report::dump(report::classification(k)); });
  m.def("check_report", [](const std::vector<KrausSet>& ks) { return report::dump(report::check_suite(ks).report); });
}
