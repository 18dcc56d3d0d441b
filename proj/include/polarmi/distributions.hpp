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

#pragma once

#include "polarmi/constellation.hpp"

namespace polarmi {

/// AWGN channel operating point: mean symbol energy es and complex noise
/// variance n0 (E|W|^2 = n0, i.e. n0/2 per real dimension).
struct ChannelParams {
    double es = 1.0;
    double n0 = 1.0;

    double snr() const { return es / n0; }
    double eta() const { return n0 / es; } ///< inverse SNR

    static ChannelParams from_snr_db(double snr_db, double es = 1.0);
    void validate() const;
};

/// Density of |x + W| for fixed transmitted amplitude x_amp:
///   (2y/n0) exp(-(x-y)^2/n0) i0_scaled(2xy/n0).
/// Reduces to Rayleigh for x_amp = 0.
double rice_pdf(double y_amp, double x_amp, double n0);

/// First moment, sqrt(pi n0)/2 * L_{1/2}(-x^2/n0).
double rice_mean(double x_amp, double n0);

/// Second moment, exactly n0 + x_amp^2.
double rice_second_moment(double x_amp, double n0);

/// Variance, n0 * f_lambda(x^2/n0); always below n0/2.
double rice_variance(double x_amp, double n0);

/// Truncation point for semi-infinite amplitude integrals: mean plus twelve
/// standard deviations, beyond which the tail mass is < 1e-12.
double rice_upper_limit(double x_amp, double n0);

/// Marginal output-amplitude density for Gaussian input: Rayleigh with
/// scale es + n0.
double rayleigh_out_pdf(double y_amp, const ChannelParams& params);

/// Output-phase density around the transmitted phase for Gaussian input,
/// conditioned on the output amplitude: p(theta | y_amp, x_ang = 0) with
/// theta in [-pi, pi). Tends to uniform at low SNR and to a Gaussian of
/// variance n0/(2 y_amp^2) at high SNR.
double phase_posterior_pdf(double theta, double y_amp, const ChannelParams& params);

/// Posterior input-amplitude density given the output amplitude:
///   (2ax/n0) exp(-(ax-y)^2/(a n0)) i0_scaled(2xy/n0),  a = 1 + eta.
double posterior_amp_pdf(double x_amp, double y_amp, const ChannelParams& params);

/// Posterior input-phase density given the full output; equals
/// phase_posterior_pdf evaluated at y_ang - x_ang (the output phase is
/// the posterior centroid).
double posterior_phase_pdf(double x_ang, double y_amp, double y_ang,
                           const ChannelParams& params);

/// Joint posterior of (x_amp, x_ang) given the output: the polar form of
/// CN(y es/(es+n0), es n0/(es+n0)).
double posterior_joint_pdf(double x_amp, double x_ang, double y_amp, double y_ang,
                           const ChannelParams& params);

/// Conditional output-phase density for a product constellation given the
/// transmitted ring and the output amplitude:
///   2^{-m_phase} sum_p (1/2pi) exp(t (cos(y_ang - phi_p) - 1)) / i0_scaled(t)
/// with t = 2 x_amp y_amp / n0. x_amp must be one of the constellation's
/// amplitude levels.
double apsk_phase_given_amp_pdf(double y_ang, double x_amp, double y_amp, double n0,
                                const Constellation& constellation);

/// Wraps an angle into [-pi, pi).
double wrap_angle(double theta);

} // namespace polarmi
