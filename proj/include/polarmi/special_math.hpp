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

#include <span>

namespace polarmi {

/// Euler-Mascheroni constant, enough digits for double precision.
inline constexpr double euler_gamma = 0.5772156649015329;

/// Modified Bessel function of the first kind, order 0.
/// Power series below x=15, asymptotic expansion above; relative error
/// <= 1e-12 for x <= 700. The plain value overflows for x >~ 713; callers
/// needing large arguments should use bessel_i0_scaled.
double bessel_i0(double x);

/// exp(-x) * I0(x); never overflows, decays like 1/sqrt(2*pi*x).
double bessel_i0_scaled(double x);

/// Modified Bessel function of the first kind, order 1.
double bessel_i1(double x);

/// exp(-x) * I1(x).
double bessel_i1_scaled(double x);

/// Error function with domain checks (rejects non-finite input).
double erf(double x);

/// Laguerre polynomial L_{1/2}(-lambda) =
///   exp(-lambda/2) * [(1+lambda) I0(lambda/2) + lambda I1(lambda/2)].
/// Evaluated with scaled Bessels so it is overflow-free for any lambda.
double laguerre_half(double lambda);

/// Normalized conditional output-amplitude variance of a Rice channel:
///   f(lambda) = 1 + lambda - (pi/4) * L_{1/2}(-lambda)^2,
/// strictly inside (0, 1/2), tending to 1/2 as lambda -> inf. The
/// difference is cancellation-prone for large lambda and is computed
/// with fma-compensated products there.
double f_lambda(double lambda);

/// log(sum(exp(values))) with max-shift; exact for a single element,
/// -inf for an all--inf input. Throws std::invalid_argument when empty.
double log_sum_exp(std::span<const double> values);

} // namespace polarmi
