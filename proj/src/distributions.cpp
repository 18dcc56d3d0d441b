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

#include "polarmi/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "polarmi/special_math.hpp"

namespace polarmi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

void check_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

void check_nonneg(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative and finite");
    }
}

void check_angle(double v, const char* what) {
    if (!std::isfinite(v) || v < -kPi || v >= kPi) {
        throw std::invalid_argument(std::string(what) + " must lie in [-pi, pi)");
    }
}

} // namespace

ChannelParams ChannelParams::from_snr_db(double snr_db, double es) {
    check_positive(es, "ChannelParams: es");
    if (!std::isfinite(snr_db)) {
        throw std::invalid_argument("ChannelParams: snr_db must be finite");
    }
    ChannelParams p;
    p.es = es;
    p.n0 = es / std::pow(10.0, snr_db / 10.0);
    return p;
}

void ChannelParams::validate() const {
    check_positive(es, "ChannelParams: es");
    check_positive(n0, "ChannelParams: n0");
}

double wrap_angle(double theta) {
    double t = std::remainder(theta, kTwoPi); // (-pi, pi]
    if (t >= kPi) {
        t -= kTwoPi;
    }
    return t;
}

double rice_pdf(double y_amp, double x_amp, double n0) {
    check_nonneg(y_amp, "rice_pdf: y_amp");
    check_nonneg(x_amp, "rice_pdf: x_amp");
    check_positive(n0, "rice_pdf: n0");
    const double d = x_amp - y_amp;
    return (2.0 * y_amp / n0) * std::exp(-d * d / n0) * bessel_i0_scaled(2.0 * x_amp * y_amp / n0);
}

double rice_mean(double x_amp, double n0) {
    check_nonneg(x_amp, "rice_mean: x_amp");
    check_positive(n0, "rice_mean: n0");
    return 0.5 * std::sqrt(kPi * n0) * laguerre_half(x_amp * x_amp / n0);
}

double rice_second_moment(double x_amp, double n0) {
    check_nonneg(x_amp, "rice_second_moment: x_amp");
    check_positive(n0, "rice_second_moment: n0");
    return n0 + x_amp * x_amp;
}

double rice_variance(double x_amp, double n0) {
    check_nonneg(x_amp, "rice_variance: x_amp");
    check_positive(n0, "rice_variance: n0");
    return n0 * f_lambda(x_amp * x_amp / n0);
}

double rice_upper_limit(double x_amp, double n0) {
    return rice_mean(x_amp, n0) + 12.0 * std::sqrt(rice_variance(x_amp, n0));
}

double rayleigh_out_pdf(double y_amp, const ChannelParams& params) {
    params.validate();
    check_nonneg(y_amp, "rayleigh_out_pdf: y_amp");
    const double s = params.es + params.n0;
    return (2.0 * y_amp / s) * std::exp(-y_amp * y_amp / s);
}

double phase_posterior_pdf(double theta, double y_amp, const ChannelParams& params) {
    params.validate();
    check_nonneg(y_amp, "phase_posterior_pdf: y_amp");
    check_angle(theta, "phase_posterior_pdf: theta");
    // v is the effective noise level seen by the amplitude-conditioned phase:
    // n0 scaled by (1 + eta) because the input amplitude is itself uncertain.
    const double v = params.n0 * (1.0 + params.eta());
    const double y2 = y_amp * y_amp;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double uniform_part = std::exp(-y2 / v) / kTwoPi;
    const double z = y_amp * c / std::sqrt(v);
    const double directed_part =
        (y_amp * c / (2.0 * std::sqrt(kPi * v))) * std::exp(-y2 * s * s / v) * std::erfc(-z);
    const double p = uniform_part + directed_part;
    return p > 0.0 ? p : 0.0; // roundoff guard deep in the tail
}

double posterior_amp_pdf(double x_amp, double y_amp, const ChannelParams& params) {
    params.validate();
    check_nonneg(x_amp, "posterior_amp_pdf: x_amp");
    check_positive(y_amp, "posterior_amp_pdf: y_amp");
    const double a = 1.0 + params.eta();
    const double n0 = params.n0;
    const double d = a * x_amp - y_amp;
    return (2.0 * a * x_amp / n0) * std::exp(-d * d / (a * n0)) *
           bessel_i0_scaled(2.0 * x_amp * y_amp / n0);
}

double posterior_phase_pdf(double x_ang, double y_amp, double y_ang,
                           const ChannelParams& params) {
    check_angle(x_ang, "posterior_phase_pdf: x_ang");
    check_angle(y_ang, "posterior_phase_pdf: y_ang");
    check_positive(y_amp, "posterior_phase_pdf: y_amp");
    return phase_posterior_pdf(wrap_angle(y_ang - x_ang), y_amp, params);
}

double posterior_joint_pdf(double x_amp, double x_ang, double y_amp, double y_ang,
                           const ChannelParams& params) {
    params.validate();
    check_nonneg(x_amp, "posterior_joint_pdf: x_amp");
    check_angle(x_ang, "posterior_joint_pdf: x_ang");
    check_positive(y_amp, "posterior_joint_pdf: y_amp");
    check_angle(y_ang, "posterior_joint_pdf: y_ang");
    // X | Y=y is CN(y es/(es+n0), es n0/(es+n0)); the exponent below is
    // manifestly <= 0, so no cancellation at high SNR.
    const double shrink = params.es / (params.es + params.n0);
    const double var = params.es * params.n0 / (params.es + params.n0);
    const std::complex<double> x = std::polar(x_amp, x_ang);
    const std::complex<double> mu = shrink * std::polar(y_amp, y_ang);
    return x_amp / (kPi * var) * std::exp(-std::norm(x - mu) / var);
}

double apsk_phase_given_amp_pdf(double y_ang, double x_amp, double y_amp, double n0,
                                const Constellation& constellation) {
    check_angle(y_ang, "apsk_phase_given_amp_pdf: y_ang");
    check_nonneg(y_amp, "apsk_phase_given_amp_pdf: y_amp");
    check_positive(n0, "apsk_phase_given_amp_pdf: n0");
    if (!constellation.is_polar_factorable()) {
        throw std::invalid_argument("apsk_phase_given_amp_pdf: constellation is not polar-factorable");
    }
    bool member = false;
    for (double r : constellation.amp_levels) {
        if (std::abs(r - x_amp) <= 1e-9 * std::max(1.0, r)) {
            member = true;
            break;
        }
    }
    if (!member) {
        throw std::invalid_argument("apsk_phase_given_amp_pdf: x_amp is not an amplitude level");
    }
    const double t = 2.0 * x_amp * y_amp / n0;
    const double i0e = bessel_i0_scaled(t);
    double acc = 0.0;
    for (double phi : constellation.phase_levels) {
        acc += std::exp(t * (std::cos(y_ang - phi) - 1.0));
    }
    const double p_count = static_cast<double>(constellation.phase_levels.size());
    return acc / (p_count * kTwoPi * i0e);
}

} // namespace polarmi
