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

#include "polarmi/gaussian_polar.hpp"

#include <cmath>

#include "polarmi/special_math.hpp"

namespace polarmi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2E = 1.4426950408889634; // 1/ln 2
constexpr std::uint64_t kCrossDirectTag = 0x6372737367617573ULL; // "crssgaus"

double xlog2x(double p) {
    return p > 0.0 ? p * std::log(p) * kLog2E : 0.0;
}

// Differential entropy of the output amplitude conditioned on the input
// amplitude x, in bits.
double rice_entropy(double x_amp, double n0, double tol) {
    const double hi = rice_upper_limit(x_amp, n0);
    return -integrate_1d(
        [x_amp, n0](double y) { return xlog2x(rice_pdf(y, x_amp, n0)); }, 0.0, hi, tol);
}

// Differential entropy of the output phase conditioned on the output
// amplitude, in bits.
double phase_entropy(double y_amp, const ChannelParams& params, double tol) {
    return -integrate_1d(
        [y_amp, &params](double theta) {
            return xlog2x(phase_posterior_pdf(theta, y_amp, params));
        },
        -kPi, kPi, tol);
}

} // namespace

double capacity(const ChannelParams& params) {
    params.validate();
    return std::log2(1.0 + params.snr());
}

double h_amp_out(const ChannelParams& params) {
    params.validate();
    return 0.5 * std::log2(params.es + params.n0) + (1.0 + 0.5 * euler_gamma) * kLog2E - 1.0;
}

double amp_lower_bound(const ChannelParams& params) {
    params.validate();
    return 0.5 * std::log2(1.0 + params.snr()) + 0.5 * (1.0 + euler_gamma) * kLog2E -
           0.5 * std::log2(kPi) - 1.0;
}

double phase_upper_bound(const ChannelParams& params) {
    params.validate();
    return 0.5 * std::log2(1.0 + params.snr()) - 0.5 * (1.0 + euler_gamma) * kLog2E +
           0.5 * std::log2(kPi) + 1.0;
}

EstimateWithError amp_term(const ChannelParams& params, const EstimatorConfig& config) {
    params.validate();
    config.validate();
    // Inner entropies are resolved two orders tighter than the outer
    // expectation so their jitter stays below the outer error estimate.
    const double inner_tol = config.quad_tol * 1e-2;
    const double xlim = rice_upper_limit(0.0, params.es);
    const double n0 = params.n0;
    const double h_cond = integrate_1d(
        [&](double x) {
            const double rayleigh = (2.0 * x / params.es) * std::exp(-x * x / params.es);
            return rayleigh == 0.0 ? 0.0 : rayleigh * rice_entropy(x, n0, inner_tol);
        },
        0.0, xlim, config.quad_tol);
    return {h_amp_out(params) - h_cond, 0.0};
}

EstimateWithError phase_term(const ChannelParams& params, const EstimatorConfig& config) {
    params.validate();
    config.validate();
    const double inner_tol = config.quad_tol * 1e-2;
    const double ylim = rice_upper_limit(0.0, params.es + params.n0);
    const double h_cond = integrate_1d(
        [&](double y) {
            const double out = rayleigh_out_pdf(y, params);
            return out == 0.0 ? 0.0 : out * phase_entropy(y, params, inner_tol);
        },
        0.0, ylim, config.quad_tol);
    return {std::log2(2.0 * kPi) - h_cond, 0.0};
}

EstimateWithError cross_term_by_identity(const ChannelParams& params,
                                         const EstimatorConfig& config) {
    const double c = capacity(params);
    const EstimateWithError a = amp_term(params, config);
    const EstimateWithError p = phase_term(params, config);
    return {c - a.value - p.value, 0.0};
}

EstimateWithError cross_term_direct(const ChannelParams& params, const EstimatorConfig& config) {
    params.validate();
    config.validate();
    if (config.mc_samples < 1) {
        throw std::invalid_argument("cross_term_direct: mc_samples must be >= 1");
    }
    RandomStream stream = derive_stream(config.seed, {kCrossDirectTag});
    double mean = 0.0;
    double m2 = 0.0;
    long long n = 0;
    for (long long i = 0; i < config.mc_samples; ++i) {
        const std::complex<double> x = stream.complex_normal(params.es);
        const std::complex<double> w = stream.complex_normal(params.n0);
        const std::complex<double> y = x + w;
        const double y_amp = std::abs(y);
        if (y_amp == 0.0) {
            continue; // measure-zero corner; posteriors need y != 0
        }
        const double x_amp = std::abs(x);
        const double x_ang = wrap_angle(std::arg(x));
        const double y_ang = wrap_angle(std::arg(y));
        const double lj = std::log(posterior_joint_pdf(x_amp, x_ang, y_amp, y_ang, params));
        const double la = std::log(posterior_amp_pdf(x_amp, y_amp, params));
        const double lp = std::log(posterior_phase_pdf(x_ang, y_amp, y_ang, params));
        const double sample = (lj - la - lp) * kLog2E;
        ++n;
        const double delta = sample - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (sample - mean);
    }
    if (n == 0) {
        throw std::runtime_error("cross_term_direct: no usable samples");
    }
    const double variance = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    return {mean, std::sqrt(variance / static_cast<double>(n))};
}

PolarDecomposition decompose_gaussian(const ChannelParams& params,
                                      const EstimatorConfig& config) {
    PolarDecomposition d;
    d.total = {capacity(params), 0.0};
    d.amplitude = amp_term(params, config);
    d.phase = phase_term(params, config);
    d.cross = {d.total.value - d.amplitude.value - d.phase.value, 0.0};
    d.cross_negative = d.cross.value < 0.0;
    return d;
}

} // namespace polarmi
