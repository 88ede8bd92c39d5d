#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "sqexc/errors.hpp"
#include "sqexc/overlaps.hpp"
#include "sqexc/photonstats.hpp"
#include "sqexc/quasiprob.hpp"
#include "sqexc/states.hpp"

namespace py = pybind11;
using namespace sqexc;

namespace {

StateLabel label(cplx beta, int n, cplx zeta, double hbar) { return {beta, n, zeta, hbar}; }

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

#define STATE_ARGS py::arg("beta") = cplx(0), py::arg("n") = 0, py::arg("zeta") = cplx(0), py::arg("hbar") = 1.0

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Squeezed-state excitations: distributions, moments, overlaps, phase-space functions";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CutoffError>(m, "CutoffError", base.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

    m.def("normalization", &normalization, py::arg("n"), py::arg("zeta_abs"));

    m.def(
        "fock_coefficients",
        [](cplx beta, int n, cplx zeta, double hbar, int cutoff, bool normalize) {
            const auto fc = fock_coefficients(label(beta, n, zeta, hbar), cutoff, normalize);
            return py::array_t<cplx>(fc.coeffs.size(), fc.coeffs.data());
        },
        STATE_ARGS, py::arg("cutoff") = 64, py::arg("normalize") = true);

    m.def(
        "photon_distribution",
        [](cplx beta, int n, cplx zeta, double hbar, std::optional<int> cutoff) {
            const auto s = label(beta, n, zeta, hbar);
            const auto d = cutoff ? photon_distribution(s, *cutoff) : photon_distribution_auto(s);
            return to_array(d.probs);
        },
        STATE_ARGS, py::arg("cutoff") = py::none(), "p_0..p_M; the cutoff is chosen automatically when omitted");

    m.def(
        "mean_photon", [](cplx beta, int n, cplx zeta, double hbar) { return mean_photon(label(beta, n, zeta, hbar)); },
        STATE_ARGS);

    m.def(
        "moments",
        [](cplx beta, int n, cplx zeta, double hbar) {
            const auto r = moments(label(beta, n, zeta, hbar));
            py::dict d;
            d["mean_a"] = r.mean_a;
            d["mean_adag"] = r.mean_adag;
            d["mean_a2"] = r.mean_a2;
            d["mean_N"] = r.mean_N;
            d["varQ"] = r.varQ;
            d["varP"] = r.varP;
            d["covQP_sym"] = r.covQP_sym;
            d["unc_sum"] = r.unc_sum;
            d["unc_prod"] = r.unc_prod;
            return d;
        },
        STATE_ARGS);

    m.def(
        "overlap",
        [](cplx alpha, int m_, cplx xi, cplx beta, int n, cplx zeta) {
            return overlap({alpha, m_, xi}, {beta, n, zeta});
        },
        py::arg("alpha"), py::arg("m"), py::arg("xi"), py::arg("beta"), py::arg("n"), py::arg("zeta"),
        "<alpha, m; xi | beta, n; zeta> for unnormalized states");

    m.def(
        "psi_q", [](double q, cplx beta, int n, cplx zeta, double hbar) { return psi_q(label(beta, n, zeta, hbar), q); },
        py::arg("q"), STATE_ARGS);

    m.def(
        "wigner",
        [](double q, double p, cplx beta, int n, cplx zeta, double hbar) {
            return wigner(label(beta, n, zeta, hbar), q, p);
        },
        py::arg("q"), py::arg("p"), STATE_ARGS);

    m.def(
        "husimi",
        [](double q, double p, cplx beta, int n, cplx zeta, double hbar) {
            return husimi_q(label(beta, n, zeta, hbar), q, p);
        },
        py::arg("q"), py::arg("p"), STATE_ARGS);

    m.def(
        "grid",
        [](const std::string& kind, std::pair<double, double> qrange, std::pair<double, double> prange, int nq, int np,
           cplx beta, int n, cplx zeta, double hbar) {
            if (kind != "wigner" && kind != "husimi") throw py::value_error("kind must be 'wigner' or 'husimi'");
            const PhaseGridSpec spec{qrange.first, qrange.second, prange.first, prange.second, nq, np};
            const auto g = grid_eval(label(beta, n, zeta, hbar), kind == "wigner" ? Quasi::wigner : Quasi::husimi, spec);
            py::array_t<double> out({nq, np});
            std::copy(g.values.begin(), g.values.end(), out.mutable_data());
            return out;
        },
        py::arg("kind"), py::arg("qrange") = std::pair(-5.0, 5.0), py::arg("prange") = std::pair(-5.0, 5.0),
        py::arg("nq") = 101, py::arg("np") = 101, STATE_ARGS, "values[i, j] at (q_i, p_j)");
}
