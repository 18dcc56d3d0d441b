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

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polarmi/special_math.hpp"
#include "polarmi/sweep.hpp"

namespace {

using namespace polarmi;

struct CommonOpts {
    double snr_start = -10.0;
    double snr_stop = 20.0;
    double snr_step = 1.0;
    long long samples = 200000;
    int gh_nodes = 32;
    std::uint64_t seed = 1;
    double quad_tol = 1e-8;
    std::string mode = "gh";
    std::string format = "csv";
    std::string out;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_grid) {
    if (with_grid) {
        cmd->add_option("--snr-start", o.snr_start, "sweep start (dB)");
        cmd->add_option("--snr-stop", o.snr_stop, "sweep stop (dB)");
        cmd->add_option("--snr-step", o.snr_step, "sweep step (dB)");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", o.out, "output path (default: stdout)");
        cmd->add_option("--threads", o.threads, "worker count over grid points")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--samples", o.samples, "Monte-Carlo draws per symbol");
    cmd->add_option("--gh-nodes", o.gh_nodes, "Gauss-Hermite nodes per dimension");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--quad-tol", o.quad_tol, "absolute quadrature tolerance");
    cmd->add_option("--mode", o.mode, "expectation mode")->check(CLI::IsMember({"mc", "gh"}));
}

SweepSpec make_spec(const CommonOpts& o) {
    SweepSpec spec;
    spec.snr_start_db = o.snr_start;
    spec.snr_stop_db = o.snr_stop;
    spec.snr_step_db = o.snr_step;
    spec.config.mc_samples = o.samples;
    spec.config.gh_nodes = o.gh_nodes;
    spec.config.seed = o.seed;
    spec.config.quad_tol = o.quad_tol;
    spec.mode = o.mode == "mc" ? ExpectationMode::MonteCarlo : ExpectationMode::GaussHermite;
    spec.output_format = o.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    spec.output_path = o.out;
    spec.threads = o.threads;
    return spec;
}

InputKind parse_kind(const std::string& kind) {
    if (kind == "apsk") return InputKind::ProductApsk;
    if (kind == "qam") return InputKind::SquareQam;
    if (kind == "psk") return InputKind::Psk;
    throw CLI::ValidationError("--kind", "expected apsk, qam or psk");
}

Constellation build_kind(const std::string& kind, int order) {
    switch (parse_kind(kind)) {
    case InputKind::SquareQam:
        return make_square_qam(order);
    case InputKind::Psk:
        return make_psk(order);
    default:
        return make_product_apsk(order);
    }
}

bool report(const char* name, bool ok) {
    std::printf("%-52s %s\n", name, ok ? "ok" : "FAIL");
    return ok;
}

// Quick invariant battery; a cut-down version of the unit-test suite that
// ships inside the binary so installations can sanity-check themselves.
int run_selftest() {
    bool all = true;
    EstimatorConfig config;

    all &= report("bessel_i0_scaled(1) reference",
                  std::abs(bessel_i0_scaled(1.0) - 0.4657596075936404) < 1e-14);
    all &= report("f_lambda stays inside (0, 1/2)", [] {
        for (int i = 0; i <= 100; ++i) {
            const double lambda = std::pow(10.0, -3.0 + 7.0 * i / 100.0);
            const double f = f_lambda(lambda);
            if (!(f > 0.0 && f < 0.5)) return false;
        }
        return true;
    }());

    for (int m : {2, 3, 4, 5, 6, 7, 8}) {
        all &= report(("product APSK structure, m=" + std::to_string(m)).c_str(),
                      validate(make_product_apsk(m)).pass);
    }
    all &= report("square QAM structure, m=4", validate(make_square_qam(4)).pass);
    all &= report("square QAM structure, m=6", validate(make_square_qam(6)).pass);
    all &= report("PSK structure, m=3", validate(make_psk(3)).pass);

    all &= report("bounds sandwich the exact terms", [&] {
        for (double snr_db : {-5.0, 5.0, 15.0}) {
            const ChannelParams p = ChannelParams::from_snr_db(snr_db);
            if (!(amp_lower_bound(p) < amp_term(p, config).value)) return false;
            if (!(phase_term(p, config).value < phase_upper_bound(p))) return false;
        }
        return true;
    }());
    all &= report("bound complementarity vs capacity", [&] {
        for (double snr_db : {-7.0, 3.0, 13.0}) {
            const ChannelParams p = ChannelParams::from_snr_db(snr_db);
            if (std::abs(amp_lower_bound(p) + phase_upper_bound(p) - capacity(p)) > 1e-12) {
                return false;
            }
        }
        return true;
    }());

    all &= report("rice pdf normalizes", [&] {
        const double mass =
            integrate_1d([](double y) { return rice_pdf(y, 1.3, 0.2); }, 0.0,
                         rice_upper_limit(1.3, 0.2), 1e-10);
        return std::abs(mass - 1.0) < 1e-6;
    }());

    all &= report("64APSK closure at 5 dB", [&] {
        const Constellation c = make_product_apsk(6);
        const PolarDecomposition d = decompose_constellation(c, c.es / std::pow(10.0, 0.5), config);
        const double defect =
            d.total.value - d.amplitude.value - d.phase.value - d.cross.value;
        return std::abs(defect) < 0.01;
    }());

    std::printf("selftest: %s\n", all ? "pass" : "FAIL");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar mutual-information decomposition over complex AWGN"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CommonOpts gauss_opts;
    CLI::App* gaussian = app.add_subcommand(
        "gaussian", "Decomposition and closed-form bounds for Gaussian input");
    add_common(gaussian, gauss_opts, true);

    CommonOpts const_opts;
    std::string kind = "apsk";
    int order = 6;
    CLI::App* constellation = app.add_subcommand(
        "constellation", "AMI and decomposition for a finite constellation");
    constellation->add_option("--kind", kind, "apsk | qam | psk")
        ->check(CLI::IsMember({"apsk", "qam", "psk"}));
    constellation->add_option("--order", order, "bits per symbol")->check(CLI::PositiveNumber);
    add_common(constellation, const_opts, true);

    CommonOpts gain_opts;
    int gain_order = 6;
    double rate = 4.0;
    CLI::App* gain = app.add_subcommand(
        "shaping-gain", "SNR advantage of product APSK over square QAM at a target rate");
    gain->add_option("--order", gain_order, "bits per symbol (even)")->check(CLI::PositiveNumber);
    gain->add_option("--rate", rate, "target rate (bits/use)")->required();
    add_common(gain, gain_opts, false);

    std::string exp_kind = "apsk";
    int exp_order = 6;
    std::string exp_out;
    CLI::App* exporter =
        app.add_subcommand("export-constellation", "Write constellation points as CSV");
    exporter->add_option("--kind", exp_kind, "apsk | qam | psk")
        ->check(CLI::IsMember({"apsk", "qam", "psk"}));
    exporter->add_option("--order", exp_order, "bits per symbol")->check(CLI::PositiveNumber);
    exporter->add_option("--out", exp_out, "output path (default: stdout)");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in invariant battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gaussian->parsed()) {
            SweepSpec spec = make_spec(gauss_opts);
            spec.kind = InputKind::Gaussian;
            emit(run_sweep(spec), spec.output_format, spec.output_path);
        } else if (constellation->parsed()) {
            SweepSpec spec = make_spec(const_opts);
            spec.kind = parse_kind(kind);
            spec.order_m = order;
            emit(run_sweep(spec), spec.output_format, spec.output_path);
        } else if (gain->parsed()) {
            SweepSpec spec = make_spec(gain_opts);
            const double db = shaping_gain(gain_order, rate, spec.config, spec.mode);
            std::printf("%.2f\n", db);
        } else if (exporter->parsed()) {
            const Constellation c = build_kind(exp_kind, exp_order);
            if (exp_out.empty()) {
                export_csv(c, std::cout);
            } else {
                export_csv(c, exp_out);
            }
        } else if (selftest->parsed()) {
            return run_selftest();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
