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

#include "polarmi/distributions.hpp"
#include "polarmi/numerics.hpp"

using namespace polarmi;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST_CASE("channel params") {
    const ChannelParams p = ChannelParams::from_snr_db(10.0);
    CHECK(p.es == 1.0);
    CHECK(p.n0 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(p.snr() == doctest::Approx(10.0).epsilon(1e-13));
    CHECK(p.eta() == doctest::Approx(0.1).epsilon(1e-13));
    const ChannelParams scaled = ChannelParams::from_snr_db(0.0, 4.0);
    CHECK(scaled.es == 4.0);
    CHECK(scaled.n0 == doctest::Approx(4.0).epsilon(1e-14));
    CHECK_THROWS_AS((ChannelParams{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChannelParams{1.0, -1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChannelParams{1.0, std::numeric_limits<double>::quiet_NaN()}.validate()),
                    std::invalid_argument);
}

TEST_CASE("rice pdf") {
    // x = 0 collapses to Rayleigh.
    const double n0 = 0.7;
    for (double y : {0.05, 0.3, 1.0, 2.4}) {
        const double rayleigh = (2.0 * y / n0) * std::exp(-y * y / n0);
        CHECK(rice_pdf(y, 0.0, n0) == doctest::Approx(rayleigh).epsilon(1e-14));
    }
    CHECK(integrate_1d([](double y) { return rice_pdf(y, 1.3, 0.2); }, 0.0,
                       rice_upper_limit(1.3, 0.2), 1e-10) == doctest::Approx(1.0).epsilon(1e-8));
    // Narrow noise concentrates the mode at the transmitted amplitude.
    double best_y = 0.0, best_p = -1.0;
    for (double y = 1.5; y <= 2.5; y += 1e-3) {
        const double p = rice_pdf(y, 2.0, 0.01);
        if (p > best_p) {
            best_p = p;
            best_y = y;
        }
    }
    CHECK(std::abs(best_y - 2.0) < 0.01);
    CHECK(rice_pdf(0.0, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(rice_pdf(1.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rice_pdf(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rice_pdf(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("rice moments") {
    CHECK(rice_mean(0.0, 0.3) == doctest::Approx(0.4854064781389248).epsilon(1e-13));
    const double quad_mean = integrate_1d(
        [](double y) { return y * rice_pdf(y, 1.5, 0.3); }, 0.0, rice_upper_limit(1.5, 0.3),
        1e-10);
    CHECK(rice_mean(1.5, 0.3) == doctest::Approx(1.5509455826821945).epsilon(1e-13));
    CHECK(rice_mean(1.5, 0.3) == doctest::Approx(quad_mean).epsilon(1e-8));
    // Vanishing noise: mean approaches the transmitted amplitude from above.
    CHECK(rice_mean(1.0, 1e-6) == doctest::Approx(1.0000002500000313).epsilon(1e-12));
    CHECK(std::abs(rice_mean(1.0, 1e-6) - 1.0) < 1e-4);

    CHECK(rice_second_moment(0.0, 0.8) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(rice_second_moment(2.0, 0.5) == doctest::Approx(4.5).epsilon(1e-15));
    const double quad_m2 = integrate_1d(
        [](double y) { return y * y * rice_pdf(y, 1.0, 1.0); }, 0.0, rice_upper_limit(1.0, 1.0),
        1e-10);
    CHECK(rice_second_moment(1.0, 1.0) == doctest::Approx(quad_m2).epsilon(1e-8));
}

TEST_CASE("rice variance") {
    CHECK(rice_variance(0.0, 1.0) == doctest::Approx(1.0 - kPi / 4.0).epsilon(1e-14));
    // High amplitude: variance approaches n0/2 but never reaches it.
    const double v_high = rice_variance(100.0, 1.0);
    CHECK(std::abs(v_high - 0.5) < 1e-3);
    CHECK(v_high < 0.5);
    const double v = rice_variance(1.2, 0.4);
    CHECK(v == doctest::Approx(0.1829704046149741).epsilon(1e-12));
    const double direct = rice_second_moment(1.2, 0.4) - std::pow(rice_mean(1.2, 0.4), 2);
    CHECK(v == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("rice upper limit truncation") {
    struct Case {
        double x, n0;
    };
    for (const Case c : {Case{1.3, 0.2}, Case{0.0, 1.0}}) {
        const double lim = rice_upper_limit(c.x, c.n0);
        const double mass =
            integrate_1d([&](double y) { return rice_pdf(y, c.x, c.n0); }, 0.0, lim, 1e-13);
        CHECK(mass > 1.0 - 1e-11);
        CHECK(mass <= 1.0 + 1e-11);
    }
}

TEST_CASE("output amplitude marginal") {
    const ChannelParams p{1.0, 0.1};
    const double peak = std::sqrt((p.es + p.n0) / 2.0);
    CHECK(rayleigh_out_pdf(peak, p) > rayleigh_out_pdf(peak * 0.9, p));
    CHECK(rayleigh_out_pdf(peak, p) > rayleigh_out_pdf(peak * 1.1, p));
    CHECK(integrate_1d([&](double y) { return rayleigh_out_pdf(y, p); }, 0.0, kInf, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-10));
    const ChannelParams p2{1.0, 0.25};
    const double m2 = integrate_1d([&](double y) { return y * y * rayleigh_out_pdf(y, p2); },
                                   0.0, kInf, 1e-10);
    CHECK(m2 == doctest::Approx(p2.es + p2.n0).epsilon(1e-8));
}

TEST_CASE("phase posterior") {
    // Extreme noise: uniform on the circle.
    const ChannelParams noisy{1.0, 1e6};
    for (double theta : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
        CHECK(std::abs(phase_posterior_pdf(theta, 1.0, noisy) - 1.0 / (2.0 * kPi)) < 1e-3);
    }
    const ChannelParams p{1.0, 0.2};
    CHECK(integrate_1d([&](double t) { return phase_posterior_pdf(t, 1.1, p); }, -kPi, kPi,
                       1e-10) == doctest::Approx(1.0).epsilon(1e-8));
    // High SNR: Gaussian with variance n0 (1 + eta) / (2 y^2) near the peak.
    const ChannelParams sharp{1.0, 1e-3};
    const double var = sharp.n0 * (1.0 + sharp.eta()) / 2.0;
    const double theta = 0.01;
    const double gaussian = std::exp(-theta * theta / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
    CHECK(phase_posterior_pdf(theta, 1.0, sharp) ==
          doctest::Approx(gaussian).epsilon(0.01));
    CHECK_THROWS_AS(phase_posterior_pdf(4.0, 1.0, p), std::invalid_argument);
    CHECK_THROWS_AS(phase_posterior_pdf(0.0, -1.0, p), std::invalid_argument);
}

TEST_CASE("posterior factorization at high SNR") {
    const ChannelParams sharp{1.0, 1e-4};
    const double y_amp = 1.0, y_ang = 0.3;
    for (double dx : {-0.01, 0.0, 0.01}) {
        for (double dt : {-0.005, 0.0, 0.005}) {
            const double joint =
                posterior_joint_pdf(y_amp + dx, y_ang + dt, y_amp, y_ang, sharp);
            const double prod = posterior_amp_pdf(y_amp + dx, y_amp, sharp) *
                                posterior_phase_pdf(y_ang + dt, y_amp, y_ang, sharp);
            CHECK(joint == doctest::Approx(prod).epsilon(0.01));
        }
    }
}

TEST_CASE("posterior amplitude collapses to the prior at low SNR") {
    const ChannelParams noisy{1.0, 1e6};
    for (double x : {0.3, 0.8, 1.5}) {
        const double prior = 2.0 * x * std::exp(-x * x);
        CHECK(posterior_amp_pdf(x, 0.9, noisy) == doctest::Approx(prior).epsilon(1e-2));
    }
}

TEST_CASE("posterior normalizations") {
    const ChannelParams p{1.0, 0.5};
    const double y_amp = 0.9, y_ang = -1.0;
    CHECK(integrate_1d([&](double x) { return posterior_amp_pdf(x, y_amp, p); }, 0.0, kInf,
                       1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(integrate_1d([&](double t) { return posterior_phase_pdf(t, y_amp, y_ang, p); }, -kPi,
                       kPi, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    const double joint_mass = integrate_1d(
        [&](double x) {
            return integrate_1d(
                [&](double t) { return posterior_joint_pdf(x, t, y_amp, y_ang, p); }, -kPi, kPi,
                1e-10);
        },
        0.0, rice_upper_limit(y_amp, p.n0) + 3.0, 1e-8);
    CHECK(joint_mass == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("posterior phase is centred on the output phase") {
    const ChannelParams p{1.0, 0.4};
    for (double x_ang : {-2.0, 0.0, 1.3}) {
        const double direct = posterior_phase_pdf(x_ang, 1.2, 0.7, p);
        const double centred = phase_posterior_pdf(wrap_angle(0.7 - x_ang), 1.2, p);
        CHECK(direct == doctest::Approx(centred).epsilon(1e-12));
    }
}

TEST_CASE("apsk conditional phase density") {
    // PSK with many phases at heavy noise: nearly uniform.
    const Constellation psk = make_psk(10);
    double max_dev = 0.0;
    for (double t = -3.1; t <= 3.1; t += 0.05) {
        max_dev = std::max(
            max_dev, std::abs(apsk_phase_given_amp_pdf(t, 1.0, 1.0, 1e9, psk) - 1.0 / (2.0 * kPi)));
    }
    CHECK(max_dev < 1e-6);
    max_dev = 0.0;
    for (double t = -3.1; t <= 3.1; t += 0.05) {
        max_dev = std::max(
            max_dev, std::abs(apsk_phase_given_amp_pdf(t, 1.0, 1.0, 0.1, psk) - 1.0 / (2.0 * kPi)));
    }
    CHECK(max_dev < 1e-3);

    const Constellation apsk = make_product_apsk(6);
    const double r2 = apsk.amp_levels[2];
    CHECK(integrate_1d([&](double t) { return apsk_phase_given_amp_pdf(t, r2, r2, 0.2, apsk); },
                       -kPi, kPi, 1e-10) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(apsk_phase_given_amp_pdf(0.0, 0.123456, 1.0, 0.2, apsk),
                    std::invalid_argument);
    CHECK_THROWS_AS(apsk_phase_given_amp_pdf(0.0, r2, 1.0, 0.2, make_square_qam(6)),
                    std::invalid_argument);
}

TEST_CASE("wrap_angle") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(kPi) == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK(wrap_angle(-kPi) == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK(wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0).epsilon(1e-13));
    CHECK(wrap_angle(100.0) == doctest::Approx(std::remainder(100.0, 2.0 * kPi)).epsilon(1e-13));
    for (double t = -20.0; t <= 20.0; t += 0.37) {
        const double w = wrap_angle(t);
        CHECK(w >= -kPi);
        CHECK(w < kPi);
        CHECK(std::abs(std::sin(w - t)) < 1e-12);
    }
}
