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

#include "polarmi/special_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polarmi {

namespace {

constexpr double kSeriesCutoff = 15.0;
constexpr double kPi = 3.14159265358979323846;

void check_nonneg(double x, const char* what) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument(std::string(what) + ": argument must be finite and >= 0");
    }
}

// Ascending power series sum_k (x/2)^{2k+v} / (k! (k+v)!); all terms positive,
// no cancellation. Converges quickly for x < 15 (worst case ~45 terms).
double bessel_series(int v, double x) {
    const double q = 0.25 * x * x;
    double term = (v == 0) ? 1.0 : 0.5 * x;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + v));
        sum += term;
        if (term < sum * 1e-17) {
            break;
        }
    }
    return sum;
}

// Large-argument expansion of exp(-x) I_v(x) (Abramowitz-Stegun 9.7.1),
// truncated at the smallest term. At the x=15 crossover the smallest term
// is ~e^{-30}, so the branches overlap to ~1e-13 relative.
double bessel_asymptotic_scaled(int v, double x) {
    const double u = 4.0 * v * v;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (odd * odd - u) / (8.0 * k * x);
        if (std::abs(term) >= prev) {
            break; // divergent tail reached
        }
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

} // namespace

double bessel_i0(double x) {
    check_nonneg(x, "bessel_i0");
    if (x < kSeriesCutoff) {
        return bessel_series(0, x);
    }
    return bessel_asymptotic_scaled(0, x) * std::exp(x);
}

double bessel_i0_scaled(double x) {
    check_nonneg(x, "bessel_i0_scaled");
    if (x < kSeriesCutoff) {
        return bessel_series(0, x) * std::exp(-x);
    }
    return bessel_asymptotic_scaled(0, x);
}

double bessel_i1(double x) {
    check_nonneg(x, "bessel_i1");
    if (x < kSeriesCutoff) {
        return bessel_series(1, x);
    }
    return bessel_asymptotic_scaled(1, x) * std::exp(x);
}

double bessel_i1_scaled(double x) {
    check_nonneg(x, "bessel_i1_scaled");
    if (x < kSeriesCutoff) {
        return bessel_series(1, x) * std::exp(-x);
    }
    return bessel_asymptotic_scaled(1, x);
}

double erf(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("erf: argument must be finite");
    }
    return std::erf(x);
}

double laguerre_half(double lambda) {
    check_nonneg(lambda, "laguerre_half");
    const double half = 0.5 * lambda;
    return (1.0 + lambda) * bessel_i0_scaled(half) + lambda * bessel_i1_scaled(half);
}

double f_lambda(double lambda) {
    check_nonneg(lambda, "f_lambda");
    const double L = laguerre_half(lambda);
    const double quarter_pi = 0.25 * kPi;
    if (lambda <= 100.0) {
        return 1.0 + lambda - quarter_pi * L * L;
    }
    // (1+lambda) and (pi/4)L^2 agree to ~5 digits by lambda=1e4; split the
    // products with fma so the subtraction keeps the full remaining precision.
    const double p = L * L;
    const double p_err = std::fma(L, L, -p);
    const double q = quarter_pi * p;
    const double q_err = std::fma(quarter_pi, p, -q) + quarter_pi * p_err;
    return ((1.0 + lambda) - q) - q_err;
}

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("log_sum_exp: empty input");
    }
    if (values.size() == 1) {
        return values[0];
    }
    const double m = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(m)) {
        return m; // all -inf (or a +inf/NaN poisons the sum, as it should)
    }
    double acc = 0.0;
    for (double v : values) {
        acc += std::exp(v - m);
    }
    return m + std::log(acc);
}

} // namespace polarmi
