#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clext/algebra.hpp"
#include "clext/fock.hpp"
#include "clext/pssqm.hpp"
#include "clext/report.hpp"
#include "clext/spectrum.hpp"
#include "clext/verifier.hpp"

namespace py = pybind11;

namespace {

// numpy has no portable extended-precision complex type; everything crosses
// the boundary as double / complex128.
using clext::Complex;
using clext::Real;

Eigen::MatrixXcd to_numpy(const clext::ComplexMatrix& m) { return m.cast<std::complex<double>>(); }
Eigen::VectorXd to_numpy(const clext::RealVector& v) { return v.cast<double>(); }
clext::RealVector from_numpy(const Eigen::VectorXd& v) { return v.cast<Real>(); }

std::vector<double> to_double(const std::vector<Real>& v) { return {v.begin(), v.end()}; }
std::vector<Real> to_real(const std::vector<double>& v) { return {v.begin(), v.end()}; }

std::vector<std::complex<double>> to_double(const std::vector<Complex>& v) {
    std::vector<std::complex<double>> out;
    for (const auto& z : v) out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    return out;
}

std::vector<Complex> to_complex(const std::vector<std::complex<double>>& v) {
    std::vector<Complex> out;
    for (const auto& z : v) out.emplace_back(z.real(), z.imag());
    return out;
}

// reports go to Python as plain dicts, same layout as the CLI's JSON
py::object as_python(const clext::Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

}  // namespace

PYBIND11_MODULE(_clext, m) {
    m.doc() = "C_lambda-extended oscillator algebra: Fock representations, relation checks and PSSQM bosonization";

    py::register_exception<clext::Error>(m, "ClextError");

    py::class_<clext::AlgebraSpec>(m, "AlgebraSpec")
        .def_property_readonly("lambda_", [](const clext::AlgebraSpec& s) { return s.lambda; })
        .def_property_readonly("kappa", [](const clext::AlgebraSpec& s) { return to_double(s.kappa); })
        .def_property_readonly("alpha", [](const clext::AlgebraSpec& s) { return to_double(s.alpha); })
        .def_property_readonly("beta", [](const clext::AlgebraSpec& s) { return to_double(s.beta); })
        .def_property_readonly("gamma", [](const clext::AlgebraSpec& s) { return to_double(s.gamma); })
        .def("__repr__", [](const clext::AlgebraSpec& s) {
            return "AlgebraSpec(" + clext::to_json(s).dump() + ")";
        });

    m.def("from_kappa", [](std::size_t lambda, const std::vector<std::complex<double>>& kappa) {
        return clext::from_kappa(lambda, to_complex(kappa));
    }, py::arg("lambda_"), py::arg("kappa"));
    m.def("from_alpha", [](std::size_t lambda, const std::vector<double>& alpha) {
        return clext::from_alpha(lambda, to_real(alpha));
    }, py::arg("lambda_"), py::arg("alpha"));
    m.def("structure_function", [](const clext::AlgebraSpec& s, std::size_t n) {
        return static_cast<double>(clext::structure_function(s, n));
    });
    m.def("energy_level", [](const clext::AlgebraSpec& s, std::size_t n) {
        return static_cast<double>(clext::energy_level(s, n));
    });
    m.def("norm_coefficient", [](const clext::AlgebraSpec& s, std::size_t n) {
        return static_cast<double>(clext::norm_coefficient(s, n));
    });
    m.def("classify", [](const clext::AlgebraSpec& s) { return as_python(clext::to_json(clext::classify(s))); });

    py::class_<clext::TruncatedFockRep>(m, "TruncatedFockRep")
        .def_property_readonly("spec", [](const clext::TruncatedFockRep& r) { return r.spec; })
        .def_property_readonly("dim", [](const clext::TruncatedFockRep& r) { return r.dim; })
        .def_property_readonly("a", [](const clext::TruncatedFockRep& r) { return to_numpy(r.a); })
        .def_property_readonly("adag", [](const clext::TruncatedFockRep& r) { return to_numpy(r.adag); })
        .def_property_readonly("num", [](const clext::TruncatedFockRep& r) { return to_numpy(r.num); })
        .def_property_readonly("T", [](const clext::TruncatedFockRep& r) { return to_numpy(r.T); })
        .def_property_readonly("P", [](const clext::TruncatedFockRep& r) {
            std::vector<Eigen::MatrixXcd> out;
            for (const auto& p : r.P) out.push_back(to_numpy(p));
            return out;
        });

    m.def("build", &clext::build, py::arg("spec"), py::arg("dim"));
    m.def("casimir", [](const clext::TruncatedFockRep& r) { return to_numpy(clext::casimir(r)); });
    m.def("grading_sector", &clext::grading_sector);

    m.def("verify_defining_relations", [](const clext::TruncatedFockRep& r, double tol) {
        return as_python(clext::to_json(clext::verify_defining_relations(r, tol)));
    }, py::arg("rep"), py::arg("tol") = 1e-12);
    m.def("verify_projector_algebra", [](const clext::TruncatedFockRep& r, double tol) {
        return as_python(clext::to_json(clext::verify_projector_algebra(r, tol)));
    }, py::arg("rep"), py::arg("tol") = 1e-12);

    m.def("hamiltonian_h0", [](const clext::TruncatedFockRep& r) { return to_numpy(clext::hamiltonian_h0(r)); });
    m.def("shifted_hamiltonian", [](const clext::TruncatedFockRep& r, const std::vector<double>& shifts) {
        return to_numpy(clext::shifted_hamiltonian(r, to_real(shifts)));
    });
    m.def("spectrum_report", [](const Eigen::VectorXd& diag, std::size_t lambda, double cluster_tol) {
        return as_python(clext::to_json(clext::spectrum_report(from_numpy(diag), lambda, cluster_tol)));
    }, py::arg("diag"), py::arg("lambda_"), py::arg("cluster_tol") = 1e-8);

    m.def("default_eta", [](std::size_t p, std::size_t mu) { return to_double(clext::default_eta(p, mu)); },
          py::arg("p"), py::arg("mu") = 0);
    m.def("solve_r", [](const clext::AlgebraSpec& s, std::size_t mu, const std::vector<std::complex<double>>& eta) {
        return to_double(clext::solve_r(s, mu, to_complex(eta)));
    });
    m.def("build_supercharge", [](const clext::TruncatedFockRep& r, std::size_t mu,
                                  const std::vector<std::complex<double>>& eta) {
        return to_numpy(clext::build_supercharge(r, mu, to_complex(eta)));
    });
    m.def("khare_check", [](const clext::AlgebraSpec& s, std::size_t dim, std::size_t mu,
                            std::optional<std::vector<std::complex<double>>> eta, double tol) {
        const auto e = eta ? to_complex(*eta) : clext::default_eta(s.lambda - 1, mu);
        return as_python(clext::to_json(clext::khare_check_solved(s, dim, mu, e, tol)));
    }, py::arg("spec"), py::arg("dim"), py::arg("mu"), py::arg("eta") = py::none(), py::arg("tol") = 1e-10);
    m.def("classify_breaking", [](const Eigen::VectorXd& diag, std::size_t mu, std::size_t p, double cluster_tol) {
        return as_python(clext::to_json(clext::classify_breaking(from_numpy(diag), mu, p, cluster_tol)));
    }, py::arg("diag"), py::arg("mu"), py::arg("p"), py::arg("cluster_tol") = 1e-8);
    m.def("ssqm_check", [](const clext::TruncatedFockRep& r, const std::string& variant, double tol) {
        return as_python(clext::to_json(clext::ssqm_check(r, clext::parse_ssqm_variant(variant), tol)));
    }, py::arg("rep"), py::arg("variant"), py::arg("tol") = 1e-13);
    m.def("beckers_debergh_check", [](const clext::AlgebraSpec& s, std::size_t dim, std::size_t mu, double tol) {
        const auto eta = clext::default_eta(2, mu);
        const auto rep = clext::build(s, dim);
        return as_python(clext::to_json(clext::beckers_debergh_check(rep, mu, eta, clext::solve_r(s, mu, eta), tol)));
    }, py::arg("spec"), py::arg("dim"), py::arg("mu"), py::arg("tol") = 1e-10);
    m.def("bd_scan", [](std::size_t mu, double from, double to, std::size_t points, std::size_t dim, double tol) {
        return as_python(clext::to_json(clext::bd_scan(mu, from, to, points, dim), tol));
    }, py::arg("mu"), py::arg("from_"), py::arg("to"), py::arg("points"), py::arg("dim") = 30, py::arg("tol") = 1e-10);
    m.def("sign_survey", [](std::size_t p, std::size_t mu, std::size_t samples, std::uint64_t seed) {
        return as_python(clext::to_json(clext::sign_survey(p, mu, samples, seed)));
    }, py::arg("p"), py::arg("mu"), py::arg("samples") = 100, py::arg("seed") = 42);
}
