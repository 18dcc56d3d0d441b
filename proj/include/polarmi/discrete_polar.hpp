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

#include <utility>

#include "polarmi/constellation.hpp"
#include "polarmi/gaussian_polar.hpp"
#include "polarmi/numerics.hpp"

namespace polarmi {

/// Average mutual information of an equiprobable constellation over complex
/// AWGN with noise variance n0, in bits/use:
///   m - (1/M) sum_x E_w log2 sum_x' exp(-(|x - x' + w|^2 - |w|^2)/n0).
/// The expectation runs per numerics::expect_complex_gaussian; result is in
/// [0, m] within estimator error.
EstimateWithError ami(const Constellation& c, double n0, const EstimatorConfig& config,
                      ExpectationMode mode = ExpectationMode::GaussHermite);

/// I(X_amp; Y) for a polar-factorable constellation: the symbol-posterior
/// deficit with the inner sum restricted to symbols sharing the transmitted
/// ring. Throws for non-factorable inputs.
EstimateWithError amp_term_discrete(const Constellation& c, double n0,
                                    const EstimatorConfig& config,
                                    ExpectationMode mode = ExpectationMode::GaussHermite);

/// I(X_ang; Y), restricting the inner sum to symbols sharing the
/// transmitted phase.
EstimateWithError phase_term_discrete(const Constellation& c, double n0,
                                      const EstimatorConfig& config,
                                      ExpectationMode mode = ExpectationMode::GaussHermite);

/// I(X_amp; X_ang | Y): posterior-weighted log ratio of the joint symbol
/// posterior to the product of its ring and phase marginals; nonnegative
/// within estimator error.
EstimateWithError cross_term_discrete(const Constellation& c, double n0,
                                      const EstimatorConfig& config,
                                      ExpectationMode mode = ExpectationMode::GaussHermite);

/// All four terms from shared noise draws, so the closure
/// total = amplitude + phase + cross is limited only by quadrature error,
/// not by independent-sampling noise.
PolarDecomposition decompose_constellation(const Constellation& c, double n0,
                                           const EstimatorConfig& config,
                                           ExpectationMode mode = ExpectationMode::GaussHermite);

/// Information about the ring index that leaks into the output beyond the
/// output amplitude: I(X_amp; Y) - I(X_amp; Y_amp). The second term uses the
/// exact Rice likelihood of |y| given the ring (ring phases marginalize out
/// of the amplitude statistic exactly). Nonnegative within error.
EstimateWithError amp_leakage(const Constellation& c, double n0, const EstimatorConfig& config,
                              ExpectationMode mode = ExpectationMode::GaussHermite);

/// Chain-rule check for square QAM: returns (ami of the 2-D constellation,
/// 2 x ami of its PAM factor). The PAM factor rides the same complex channel;
/// its imaginary output component carries no information, so this equals the
/// real sub-channel AMI with variance n0/2. The two values must agree.
std::pair<EstimateWithError, EstimateWithError>
iq_additivity_check(const Constellation& qam, double n0, const EstimatorConfig& config,
                    ExpectationMode mode = ExpectationMode::GaussHermite);

} // namespace polarmi
