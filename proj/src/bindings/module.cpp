#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "qbell/bell.hpp"
#include "qbell/errors.hpp"
#include "qbell/classical.hpp"
#include "qbell/continuum.hpp"
#include "qbell/measurements.hpp"
#include "qbell/optimize.hpp"
#include "qbell/special.hpp"
#include "qbell/states.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<double>> table(const qbell::JointDistribution& jd) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(jd.dim()));
    for (int k = 0; k < jd.dim(); ++k) {
        rows[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(jd.dim()));
        for (int l = 0; l < jd.dim(); ++l) {
            rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = jd(k, l);
        }
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maximal quantum violations of the two-setting d-outcome Bell inequality";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const qbell::BudgetExceededError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const qbell::QuadratureNotConvergedError& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const qbell::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<qbell::SchmidtState>(m, "SchmidtState")
        .def_property_readonly("dim", &qbell::SchmidtState::dim)
        .def_property_readonly("coefficients",
                               [](const qbell::SchmidtState& s) { return s.coefficients(); })
        .def("__len__", &qbell::SchmidtState::dim)
        .def("__getitem__", [](const qbell::SchmidtState& s, int k) {
            if (k < 0 || k >= s.dim()) {
                throw py::index_error();
            }
            return s[k];
        });

    m.def("make_state", &qbell::make_state, py::arg("coefficients"));
    m.def("approximate_state", &qbell::approximate_state, py::arg("d"));
    m.def("uniform_state", &qbell::uniform_state, py::arg("d"));
    m.def("entropy", &qbell::entropy, py::arg("state"));
    m.def("approximate_entropy_ratio", &qbell::approximate_entropy_ratio, py::arg("d"));
    m.def("entropy_ratio_sweep", &qbell::entropy_ratio_sweep, py::arg("d_values"));

    py::enum_<qbell::Party>(m, "Party").value("alice", qbell::Party::alice).value("bob", qbell::Party::bob);

    py::class_<qbell::MeasurementBasis>(m, "MeasurementBasis")
        .def_property_readonly("dim", &qbell::MeasurementBasis::dim)
        .def_property_readonly("setting", &qbell::MeasurementBasis::setting)
        .def_property_readonly("phase", &qbell::MeasurementBasis::phase)
        .def("component", &qbell::MeasurementBasis::component, py::arg("k"), py::arg("m"));
    m.def("best_basis", &qbell::best_basis, py::arg("d"), py::arg("party"), py::arg("setting"));

    py::class_<qbell::JointDistribution>(m, "JointDistribution")
        .def_property_readonly("dim", &qbell::JointDistribution::dim)
        .def_property_readonly("setting_a", &qbell::JointDistribution::setting_a)
        .def_property_readonly("setting_b", &qbell::JointDistribution::setting_b)
        .def("prob", [](const qbell::JointDistribution& jd, int k, int l) { return jd(k, l); })
        .def("table", &table)
        .def("total_mass", &qbell::JointDistribution::total_mass);
    m.def("joint_distribution", &qbell::joint_distribution, py::arg("state"), py::arg("alice"),
          py::arg("bob"));

    m.def("bell_value", &qbell::bell_value, py::arg("state"));
    m.def("closed_form", &qbell::closed_form, py::arg("state"));
    m.def("expectation",
          [](const qbell::JointDistribution& jd, const std::vector<double>& outcomes) {
              return qbell::expectation(jd, qbell::OutcomeValues(outcomes));
          },
          py::arg("dist"), py::arg("outcomes"));

    py::class_<qbell::DeterministicStrategy>(m, "DeterministicStrategy")
        .def(py::init<int, int, int, int>(), py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"))
        .def_readonly("a1", &qbell::DeterministicStrategy::a1)
        .def_readonly("a2", &qbell::DeterministicStrategy::a2)
        .def_readonly("b1", &qbell::DeterministicStrategy::b1)
        .def_readonly("b2", &qbell::DeterministicStrategy::b2);
    m.def("lhv_value", &qbell::lhv_value, py::arg("strategy"));
    m.def("lhv_minimum", [](int d) {
        const qbell::LhvMinimum r = qbell::lhv_minimum(d);
        return py::make_tuple(r.min_value, r.witness);
    }, py::arg("d"));

    py::class_<qbell::ToeplitzKernel>(m, "ToeplitzKernel")
        .def(py::init<int>(), py::arg("d"))
        .def_readonly("dim", &qbell::ToeplitzKernel::dim)
        .def_readonly("first_row", &qbell::ToeplitzKernel::first_row);
    m.def("matvec_naive", [](const qbell::ToeplitzKernel& k, const std::vector<double>& v) {
        return qbell::matvec_naive(k, v);
    }, py::arg("kernel"), py::arg("v"));
    m.def("matvec_fft", [](const qbell::ToeplitzKernel& k, const std::vector<double>& v) {
        return qbell::matvec_fft(k, v);
    }, py::arg("kernel"), py::arg("v"));

    py::class_<qbell::EigenResult>(m, "EigenResult")
        .def_readonly("eigenvalue", &qbell::EigenResult::eigenvalue)
        .def_readonly("eigenvector", &qbell::EigenResult::eigenvector)
        .def_readonly("iterations", &qbell::EigenResult::iterations)
        .def_readonly("residual", &qbell::EigenResult::residual)
        .def_readonly("converged", &qbell::EigenResult::converged)
        .def_property_readonly("bell_value",
                               [](const qbell::EigenResult& r) { return 2.0 - r.eigenvalue; });
    m.def("optimal_state", &qbell::optimal_state, py::arg("d"), py::arg("tol") = 1e-12,
          py::arg("max_iter") = 100000);

    m.def("f_delta", &qbell::f_delta, py::arg("delta"), py::arg("x"));
    m.def("m_functional", [](double delta, double target_abs_err) {
        qbell::QuadratureSpec spec;
        spec.target_abs_err = target_abs_err;
        return qbell::m_functional(qbell::make_ansatz(delta), spec);
    }, py::arg("delta"), py::arg("target_abs_err") = 1e-7);
    m.def("i_delta_closed_form", &qbell::i_delta_closed_form, py::arg("delta"), py::arg("epsilon"));
    m.def("corner_bound_closed_form", &qbell::corner_bound_closed_form, py::arg("delta"),
          py::arg("epsilon"));

    m.def("digamma", py::overload_cast<double>(&qbell::special::digamma), py::arg("z"));
    m.def("gamma_fn", &qbell::special::gamma_fn, py::arg("z"));
}
