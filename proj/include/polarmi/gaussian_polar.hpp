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

#include "polarmi/distributions.hpp"
#include "polarmi/numerics.hpp"

namespace polarmi {

/// I(X;Y) split into the information carried by the input amplitude, by the
/// input phase, and the residual amplitude-phase dependence given the output.
/// total = amplitude + phase + cross holds by construction for the identity
/// path and within estimator error otherwise.
struct PolarDecomposition {
    EstimateWithError total;
    EstimateWithError amplitude;
    EstimateWithError phase;
    EstimateWithError cross;
    /// Raised instead of clamping when the (deterministic) cross term comes
    /// out slightly negative due to quadrature error; the raw value is kept.
    bool cross_negative = false;
};

/// log2(1 + es/n0), the Gaussian-input mutual information.
double capacity(const ChannelParams& params);

/// Differential entropy of the output amplitude (Rayleigh, scale es + n0):
///   1/2 log2(es + n0) + (1 + gamma/2) log2(e) - 1.
double h_amp_out(const ChannelParams& params);

/// I(X_amp; Y) = h(Y_amp) - h(Y_amp | X_amp); the conditional entropy is a
/// nested quadrature over the Rayleigh-weighted Rice entropies.
/// Deterministic (std_error 0).
EstimateWithError amp_term(const ChannelParams& params, const EstimatorConfig& config);

/// Closed-form lower bound on amp_term:
///   1/2 log2(1 + snr) + (1+gamma)/2 log2(e) - 1/2 log2(pi) - 1.
/// Tight at high SNR.
double amp_lower_bound(const ChannelParams& params);

/// I(X_ang; Y) = log2(2pi) - E_{y_amp}[h(Y_ang | X_ang = 0, Y_amp = y_amp)],
/// with the inner differential entropy integrated exactly (no high-SNR
/// approximation). Deterministic (std_error 0).
EstimateWithError phase_term(const ChannelParams& params, const EstimatorConfig& config);

/// Closed-form upper bound on phase_term, the exact complement of
/// amp_lower_bound: amp_lower_bound + phase_upper_bound = capacity.
double phase_upper_bound(const ChannelParams& params);

/// Cross term I(X_amp; X_ang | Y) via the decomposition identity
/// capacity - amp_term - phase_term. May come out slightly negative within
/// quadrature tolerance; the raw value is returned.
EstimateWithError cross_term_by_identity(const ChannelParams& params,
                                         const EstimatorConfig& config);

/// Independent Monte-Carlo path for the cross term: samples (x, w), then
/// averages log2 of the posterior-density ratio joint/(amp * phase).
EstimateWithError cross_term_direct(const ChannelParams& params,
                                    const EstimatorConfig& config);

/// Bundles capacity, amp_term, phase_term and the identity cross term.
PolarDecomposition decompose_gaussian(const ChannelParams& params,
                                      const EstimatorConfig& config);

} // namespace polarmi
