/*
   Copyright 2026 polarmi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarmi/discrete_polar.hpp"
#include "polarmi/gaussian_polar.hpp"
#include "polarmi/special_math.hpp"
#include "polarmi/sweep.hpp"

namespace py = pybind11;
using namespace polarmi;

PYBIND11_MODULE(polarmi, m) {
    m.doc() = "Mutual-information decomposition of the complex AWGN channel "
              "into amplitude, phase, and cross terms";

    // -- special functions ---------------------------------------------------
    m.def("bessel_i0", &bessel_i0, py::arg("x"));
    m.def("bessel_i0_scaled", &bessel_i0_scaled, py::arg("x"));
    m.def("bessel_i1", &bessel_i1, py::arg("x"));
    m.def("bessel_i1_scaled", &bessel_i1_scaled, py::arg("x"));
    m.def("laguerre_half", &laguerre_half, py::arg("lambda_"));
    m.def("f_lambda", &f_lambda, py::arg("lambda_"));

    // -- core value types ----------------------------------------------------
    py::class_<EstimateWithError>(m, "EstimateWithError")
        .def(py::init<>())
        .def_readwrite("value", &EstimateWithError::value)
        .def_readwrite("std_error", &EstimateWithError::std_error)
        .def("__repr__", [](const EstimateWithError& e) {
            return "EstimateWithError(value=" + std::to_string(e.value) +
                   ", std_error=" + std::to_string(e.std_error) + ")";
        });

    py::class_<EstimatorConfig>(m, "EstimatorConfig")
        .def(py::init<>())
        .def_readwrite("mc_samples", &EstimatorConfig::mc_samples)
        .def_readwrite("gh_nodes", &EstimatorConfig::gh_nodes)
        .def_readwrite("quad_tol", &EstimatorConfig::quad_tol)
        .def_readwrite("seed", &EstimatorConfig::seed);

    py::enum_<ExpectationMode>(m, "ExpectationMode")
        .value("MonteCarlo", ExpectationMode::MonteCarlo)
        .value("GaussHermite", ExpectationMode::GaussHermite);

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<>())
        .def(py::init([](double es, double n0) {
                 ChannelParams p{es, n0};
                 p.validate();
                 return p;
             }),
             py::arg("es"), py::arg("n0"))
        .def_static("from_snr_db", &ChannelParams::from_snr_db, py::arg("snr_db"),
                    py::arg("es") = 1.0)
        .def_readwrite("es", &ChannelParams::es)
        .def_readwrite("n0", &ChannelParams::n0)
        .def("snr", &ChannelParams::snr)
        .def("eta", &ChannelParams::eta);

    py::class_<PolarDecomposition>(m, "PolarDecomposition")
        .def_readonly("total", &PolarDecomposition::total)
        .def_readonly("amplitude", &PolarDecomposition::amplitude)
        .def_readonly("phase", &PolarDecomposition::phase)
        .def_readonly("cross", &PolarDecomposition::cross)
        .def_readonly("cross_negative", &PolarDecomposition::cross_negative);

    // -- constellations --------------------------------------------------------
    py::class_<Constellation>(m, "Constellation")
        .def_readonly("points", &Constellation::points)
        .def_readonly("amp_levels", &Constellation::amp_levels)
        .def_readonly("phase_levels", &Constellation::phase_levels)
        .def_readonly("m", &Constellation::m)
        .def_readonly("m_amp", &Constellation::m_amp)
        .def_readonly("m_phase", &Constellation::m_phase)
        .def_readonly("es", &Constellation::es)
        .def("is_polar_factorable", &Constellation::is_polar_factorable);

    m.def("make_product_apsk", &make_product_apsk, py::arg("m"));
    m.def("make_product_apsk_split", &make_product_apsk_split, py::arg("m_phase"),
          py::arg("m_amp"));
    m.def("make_square_qam", &make_square_qam, py::arg("m"));
    m.def("make_psk", &make_psk, py::arg("m"));
    m.def("make_pam_factor", &make_pam_factor, py::arg("qam"));
    m.def(
        "validate",
        [](const Constellation& c) {
            const ValidationReport r = validate(c);
            return py::make_tuple(r.pass, r.summary());
        },
        py::arg("constellation"));

    // -- densities -------------------------------------------------------------
    m.def("rice_pdf", &rice_pdf, py::arg("y_amp"), py::arg("x_amp"), py::arg("n0"));
    m.def("rice_mean", &rice_mean, py::arg("x_amp"), py::arg("n0"));
    m.def("rice_second_moment", &rice_second_moment, py::arg("x_amp"), py::arg("n0"));
    m.def("rice_variance", &rice_variance, py::arg("x_amp"), py::arg("n0"));
    m.def("rayleigh_out_pdf", &rayleigh_out_pdf, py::arg("y_amp"), py::arg("params"));
    m.def("phase_posterior_pdf", &phase_posterior_pdf, py::arg("theta"), py::arg("y_amp"),
          py::arg("params"));
    m.def("apsk_phase_given_amp_pdf", &apsk_phase_given_amp_pdf, py::arg("y_ang"),
          py::arg("x_amp"), py::arg("y_amp"), py::arg("n0"), py::arg("constellation"));

    // -- gaussian-input decomposition -------------------------------------------
    m.def("capacity", &capacity, py::arg("params"));
    m.def("h_amp_out", &h_amp_out, py::arg("params"));
    m.def("amp_term", &amp_term, py::arg("params"), py::arg("config") = EstimatorConfig{});
    m.def("amp_lower_bound", &amp_lower_bound, py::arg("params"));
    m.def("phase_term", &phase_term, py::arg("params"), py::arg("config") = EstimatorConfig{});
    m.def("phase_upper_bound", &phase_upper_bound, py::arg("params"));
    m.def("cross_term_by_identity", &cross_term_by_identity, py::arg("params"),
          py::arg("config") = EstimatorConfig{});
    m.def("cross_term_direct", &cross_term_direct, py::arg("params"),
          py::arg("config") = EstimatorConfig{});
    m.def("decompose_gaussian", &decompose_gaussian, py::arg("params"),
          py::arg("config") = EstimatorConfig{});

    // -- discrete-input decomposition ---------------------------------------------
    m.def("ami", &ami, py::arg("constellation"), py::arg("n0"),
          py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);
    m.def("amp_term_discrete", &amp_term_discrete, py::arg("constellation"), py::arg("n0"),
          py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);
    m.def("phase_term_discrete", &phase_term_discrete, py::arg("constellation"), py::arg("n0"),
          py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);
    m.def("cross_term_discrete", &cross_term_discrete, py::arg("constellation"), py::arg("n0"),
          py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);
    m.def("decompose_constellation", &decompose_constellation, py::arg("constellation"),
          py::arg("n0"), py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);
    m.def("amp_leakage", &amp_leakage, py::arg("constellation"), py::arg("n0"),
          py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);
    m.def("iq_additivity_check", &iq_additivity_check, py::arg("qam"), py::arg("n0"),
          py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);

    m.def("shaping_gain", &shaping_gain, py::arg("m"), py::arg("target_rate_bits"),
          py::arg("config") = EstimatorConfig{},
          py::arg("mode") = ExpectationMode::GaussHermite);

    m.attr("__version__") = "1.0.0";
}
