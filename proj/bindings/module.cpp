#include "perceptronium/classical.hpp"
#include "perceptronium/dynamics.hpp"
#include "perceptronium/emergent.hpp"
#include "perceptronium/experiments.hpp"
#include "perceptronium/quantum_phi.hpp"
#include "perceptronium/separability.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace perceptronium;

namespace {

FactorShape make_shape(Eigen::Index l, Eigen::Index m) { return FactorShape{l, m}; }

}  // namespace

PYBIND11_MODULE(_perceptronium, m) {
    m.doc() = "integrated information, Hamiltonian separability, and autonomy measures";

    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<InvalidStateError>(m, "InvalidStateError", PyExc_ValueError);

    py::class_<FactorShape>(m, "FactorShape")
        .def(py::init(&make_shape), py::arg("l"), py::arg("m"))
        .def_readonly("l", &FactorShape::l)
        .def_readonly("m", &FactorShape::m)
        .def("dim", &FactorShape::dim);

    // Hilbert-space toolbox
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def(
        "ptrace_first",
        [](const Matrix& a, Eigen::Index l, Eigen::Index mm) {
            return ptrace_first(a, {l, mm});
        },
        py::arg("a"), py::arg("l"), py::arg("m"));
    m.def(
        "ptrace_second",
        [](const Matrix& a, Eigen::Index l, Eigen::Index mm) {
            return ptrace_second(a, {l, mm});
        },
        py::arg("a"), py::arg("l"), py::arg("m"));
    m.def("evolve", &evolve, py::arg("rho"), py::arg("h"), py::arg("t"));
    m.def(
        "hs_decompose",
        [](const Matrix& h, Eigen::Index l, Eigen::Index mm) {
            const HsComponents c = hs_projectors(h, {l, mm});
            return py::make_tuple(c.h0, c.h1, c.h2, c.h3);
        },
        py::arg("h"), py::arg("l"), py::arg("m"),
        "orthogonal split H = H0 + H1 + H2 + H3 for the (l, m) bipartition");

    // Entropies and dynamics measures
    m.def("shannon_entropy", &shannon_entropy, py::arg("p"));
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
    m.def("linear_entropy", &linear_entropy, py::arg("rho"));
    m.def(
        "mutual_information",
        [](const Matrix& rho, Eigen::Index l, Eigen::Index mm) {
            const InfoReport r = mutual_information(rho, {l, mm});
            return py::make_tuple(r.mutual_info, r.s_first, r.s_second, r.s_total);
        },
        py::arg("rho"), py::arg("l"), py::arg("m"),
        "(I, S1, S2, S) across the (l, m) bipartition");
    m.def("energy_coherence", &energy_coherence, py::arg("rho"), py::arg("h"));

    // Integrated information
    m.def(
        "quantum_phi",
        [](const Matrix& rho, Eigen::Index l, Eigen::Index mm, bool exhaustive,
           std::uint64_t seed) {
            const QuantumPhiResult r = quantum_phi(
                rho, {l, mm}, exhaustive ? SearchMode::Exhaustive : SearchMode::Heuristic, seed);
            return py::make_tuple(r.phi, r.arrangement, r.certified);
        },
        py::arg("rho"), py::arg("l"), py::arg("m"), py::arg("exhaustive") = true,
        py::arg("seed") = 1, "(phi, eigenvalue arrangement, certified)");
    m.def(
        "classical_phi",
        [](int n, const RealVector& probs, int k) {
            const PhiResult r = classical_phi({n, probs}, k);
            return py::make_tuple(r.phi, r.cut.first, r.exhaustive);
        },
        py::arg("n"), py::arg("probs"), py::arg("k"),
        "(phi, cut bitmask, exhaustive) for the cruelest size-k cut");
    m.def(
        "young_phi",
        [](const std::vector<int>& partition, Eigen::Index l, Eigen::Index mm) {
            return young_phi(partition, {l, mm});
        },
        py::arg("partition"), py::arg("l"), py::arg("m"));

    // Hamiltonian separability
    m.def(
        "integration_energy",
        [](const Matrix& h, Eigen::Index l, Eigen::Index mm, bool exhaustive,
           std::uint64_t seed) {
            const SeparabilityReport r = integration_energy(
                h, {l, mm}, exhaustive ? SearchMode::Exhaustive : SearchMode::Heuristic, seed);
            return py::make_tuple(r.integration_energy, r.norms, r.permutation, r.certified);
        },
        py::arg("h"), py::arg("l"), py::arg("m"), py::arg("exhaustive") = true,
        py::arg("seed") = 1,
        "(min ||H3||, component norms at optimum, permutation, certified)");

    // Dynamics and autonomy
    m.def("overlap_fn", &overlap_fn, py::arg("n"), py::arg("phi"));
    m.def("apodized_state", &apodized_state, py::arg("alpha"), py::arg("n"));
    m.def(
        "sliding_simulation",
        [](int b, const std::string& potential, int alpha, double omega2, double coupling,
           int samples) {
            const AutonomyReport r = sliding_simulation(
                b, potential == "gaussian" ? Potential::Gaussian : Potential::Sinusoidal, alpha,
                omega2, coupling, samples);
            py::dict out;
            out["delta_h"] = r.delta_h;
            out["tau_dyn"] = r.tau_dyn;
            out["tau_ind"] = r.tau_ind;
            out["autonomy"] = r.autonomy;
            out["slin_final"] = r.slin_final;
            out["slin_curve"] = r.slin_curve;
            return out;
        },
        py::arg("b"), py::arg("potential") = "sinusoidal", py::arg("alpha") = 0,
        py::arg("omega2") = 1.0, py::arg("coupling") = 1.0, py::arg("samples") = 33);

    // Emergent structure
    m.def("qubit_oscillator", &qubit_oscillator, py::arg("b"));
    m.def(
        "lattice_dispersion",
        [](double mu, double gamma, const std::array<double, 3>& kappa) {
            return lattice_dispersion(nearest_neighbor_couplings(mu, gamma), kappa);
        },
        py::arg("mu"), py::arg("gamma"), py::arg("kappa"));
    m.def("lattice_normal_modes", &lattice_normal_modes, py::arg("side"), py::arg("mu"),
          py::arg("gamma"));

    m.attr("__version__") = kToolVersion;
}
