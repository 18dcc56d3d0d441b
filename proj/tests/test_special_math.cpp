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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "polarmi/special_math.hpp"

using namespace polarmi;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Reference values below were generated with a 40-digit arbitrary-precision
// evaluation of the defining series, independent of this implementation.

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i) {
        g[i] = std::exp(a + (b - a) * i / (n - 1));
    }
    return g;
}

} // namespace

TEST_CASE("euler gamma constant") {
    CHECK(euler_gamma == doctest::Approx(0.5772156649015329).epsilon(1e-15));
}

TEST_CASE("bessel_i0 reference values") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520083).epsilon(1e-13));
    CHECK(bessel_i0_scaled(20.0) == doctest::Approx(0.08978031188482602).epsilon(1e-13));
}

TEST_CASE("bessel_i0_scaled reference values and decay") {
    CHECK(bessel_i0_scaled(0.0) == 1.0);
    CHECK(bessel_i0_scaled(1.0) == doctest::Approx(0.4657596075936404).epsilon(1e-13));
    // Large-argument limit 1/sqrt(2 pi x).
    const double x = 1e4;
    CHECK(bessel_i0_scaled(x) == doctest::Approx(0.0039894726746047321).epsilon(1e-12));
    CHECK(bessel_i0_scaled(x) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kPi * x)).epsilon(1e-4));
    // Monotone decreasing.
    double prev = bessel_i0_scaled(0.0);
    for (double t : log_grid(1e-2, 1e3, 40)) {
        const double cur = bessel_i0_scaled(t);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("bessel_i1 reference values") {
    CHECK(bessel_i1(0.0) == 0.0);
    CHECK(bessel_i1_scaled(0.0) == 0.0);
    CHECK(bessel_i1(0.5) == doctest::Approx(0.2578943053908963).epsilon(1e-13));
}

TEST_CASE("bessel scaled/unscaled consistency") {
    for (double x : {0.1, 1.0, 5.0, 14.9, 15.1, 30.0, 50.0}) {
        CHECK(bessel_i0(x) == doctest::Approx(std::exp(x) * bessel_i0_scaled(x)).epsilon(1e-10));
        CHECK(bessel_i1(x) == doctest::Approx(std::exp(x) * bessel_i1_scaled(x)).epsilon(1e-10));
    }
}

TEST_CASE("bessel series truncation bounds hold") {
    for (double x : log_grid(1e-3, 600.0, 60)) {
        CHECK(bessel_i0(x) > 1.0 + x * x / 4.0);
        CHECK(bessel_i1(x) > x / 2.0);
    }
}

TEST_CASE("bessel domain errors") {
    CHECK_THROWS_AS(bessel_i0(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i0_scaled(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i1(-2.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i0(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i1(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("erf reference values and symmetry") {
    CHECK(polarmi::erf(0.0) == 0.0);
    CHECK(polarmi::erf(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-13));
    for (double x : {0.2, 0.7, 1.9}) {
        CHECK(polarmi::erf(-x) == doctest::Approx(-polarmi::erf(x)).epsilon(1e-15));
        CHECK(std::abs(polarmi::erf(x)) <= 1.0);
    }
    CHECK_THROWS_AS(polarmi::erf(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(polarmi::erf(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("laguerre_half reference values") {
    CHECK(laguerre_half(0.0) == 1.0);
    CHECK(laguerre_half(1.0) == doctest::Approx(1.4464913440831718).epsilon(1e-13));
    CHECK_THROWS_AS(laguerre_half(-0.1), std::invalid_argument);
}

TEST_CASE("laguerre_half lower bounds") {
    for (double lam : log_grid(1e-3, 1e4, 120)) {
        const double l = laguerre_half(lam);
        // Series truncation bound, valid for every positive argument.
        CHECK(l > std::exp(-lam / 2.0) * (1.0 + lam + 5.0 / 16.0 * lam * lam));
        if (lam > 1.0) {
            // Asymptotic-series bound for arguments above one.
            CHECK(l > (2.0 * std::sqrt(lam) + 0.5 / std::sqrt(lam)) / std::sqrt(kPi));
        }
    }
}

TEST_CASE("f_lambda reference values") {
    CHECK(f_lambda(0.0) == doctest::Approx(1.0 - kPi / 4.0).epsilon(1e-15));
    CHECK(f_lambda(0.0) == doctest::Approx(0.2146018366025517).epsilon(1e-14));
    CHECK(f_lambda(1.0) == doctest::Approx(0.3566821992300334).epsilon(1e-13));
    CHECK(f_lambda(100.0) == doctest::Approx(0.4987436620020499).epsilon(1e-12));
    CHECK(std::abs(f_lambda(100.0) - 0.5) < 0.01);
    CHECK(f_lambda(1e4) == doctest::Approx(0.4999874993749140).epsilon(1e-10));
    CHECK(std::abs(f_lambda(1e4) - 0.5) < 1e-3);
    CHECK_THROWS_AS(f_lambda(-1.0), std::invalid_argument);
}

TEST_CASE("f_lambda range and small-argument cap") {
    for (double lam : log_grid(1e-3, 1e4, 200)) {
        const double f = f_lambda(lam);
        CHECK(f > 0.0);
        CHECK(f < 0.5);
    }
    // On (0, 1] the variance stays below 2 - 1369 pi / (1024 e).
    const double cap = 0.4548918536486603;
    for (double lam : log_grid(1e-3, 1.0, 80)) {
        CHECK(f_lambda(lam) <= cap + 1e-12);
    }
}

TEST_CASE("log_sum_exp basics") {
    const double single[] = {-3.25};
    CHECK(log_sum_exp(single) == -3.25);

    const double pair[] = {0.0, 0.0};
    CHECK(log_sum_exp(pair) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    const double deep[] = {-1000.0, -1000.5};
    CHECK(log_sum_exp(deep) ==
          doctest::Approx(-1000.0 + std::log1p(std::exp(-0.5))).epsilon(1e-14));

    CHECK_THROWS_AS(log_sum_exp(std::span<const double>{}), std::invalid_argument);

    const double ninf = -std::numeric_limits<double>::infinity();
    const double all_ninf[] = {ninf, ninf};
    CHECK(log_sum_exp(all_ninf) == ninf);
}

TEST_CASE("log_sum_exp shift invariance") {
    std::vector<double> v = {0.3, -2.0, 1.7, -0.4, 0.0, 5.5, -8.25};
    const double base = log_sum_exp(v);
    for (double c : {-700.0, -3.2, 12.5, 680.0}) {
        std::vector<double> shifted = v;
        for (double& x : shifted) {
            x += c;
        }
        CHECK(log_sum_exp(shifted) == doctest::Approx(base + c).epsilon(1e-12));
    }
}
