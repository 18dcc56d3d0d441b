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

#include "polarmi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace polarmi {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK dqk15), positive half.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
    double a, b, integral, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0;
    double gauss = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double dx = h * kXgk[j];
        double fv;
        if (j == 7) {
            fv = f(c);
        } else {
            fv = f(c - dx) + f(c + dx);
        }
        if (!std::isfinite(fv)) {
            throw IntegrationError("integrate_1d: non-finite integrand value", 0.0);
        }
        kron += kWgk[j] * fv;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * fv;
        }
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

} // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(tol > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("integrate_1d: bad bounds or tolerance");
    }
    if (std::isinf(b)) {
        // x = a + t/(1-t) maps [0,1) onto [a,inf); dx = dt/(1-t)^2.
        auto g = [&f, a](double t) {
            const double om = 1.0 - t;
            const double x = a + t / om;
            const double fx = f(x);
            return fx == 0.0 ? 0.0 : fx / (om * om);
        };
        return integrate_1d(g, 0.0, 1.0, tol);
    }
    if (!(a <= b)) {
        throw std::invalid_argument("integrate_1d: requires a <= b");
    }
    if (a == b) {
        return 0.0;
    }

    std::priority_queue<Segment> queue;
    queue.push(gk15(f, a, b));
    double total = queue.top().integral;
    double err = queue.top().error;
    int segments = 1;
    constexpr int kMaxSegments = 20000;
    while (err > tol) {
        if (segments >= kMaxSegments) {
            throw IntegrationError("integrate_1d: refinement budget exhausted", total);
        }
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw IntegrationError("integrate_1d: interval underflow before convergence", total);
        }
        try {
            const Segment left = gk15(f, worst.a, mid);
            const Segment right = gk15(f, mid, worst.b);
            total += left.integral + right.integral - worst.integral;
            err += left.error + right.error - worst.error;
            queue.push(left);
            queue.push(right);
        } catch (const IntegrationError& e) {
            // Keep the running estimate: the helper cannot know it.
            throw IntegrationError(e.what(), total);
        }
        ++segments;
    }
    return total;
}

std::uint64_t mix_u64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t RandomStream::next_u64() {
    return mix_u64(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1)); // 1-u1 in (0,1], no log(0)
    const double th = 2.0 * kPi * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
}

std::complex<double> RandomStream::complex_normal(double variance) {
    const double s = std::sqrt(0.5 * variance);
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double th = 2.0 * kPi * u2;
    return {s * r * std::cos(th), s * r * std::sin(th)};
}

RandomStream derive_stream(std::uint64_t seed, std::span<const std::uint64_t> labels) {
    std::uint64_t key = mix_u64(seed);
    for (std::uint64_t label : labels) {
        key = mix_u64(key ^ mix_u64(label));
    }
    return RandomStream(key);
}

RandomStream derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
    return derive_stream(seed, std::span<const std::uint64_t>(labels.begin(), labels.size()));
}

GaussHermiteRule gauss_hermite(int n) {
    if (n < 2) {
        throw std::invalid_argument("gauss_hermite: need at least 2 nodes");
    }
    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        // Stroud/Secrest style initial guesses, largest root first.
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[n - 1];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[n - 2];
        } else {
            z = 2.0 * z - rule.nodes[n - i + 1];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Orthonormal Hermite recurrence.
            double p1 = 0.7511255444649425; // pi^{-1/4}
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) {
                break;
            }
        }
        rule.nodes[n - 1 - i] = z;
        rule.nodes[i] = -z;
        rule.weights[n - 1 - i] = 2.0 / (pp * pp);
        rule.weights[i] = rule.weights[n - 1 - i];
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

std::vector<EstimateWithError>
expect_complex_gaussian_multi(const std::function<void(std::complex<double>, std::span<double>)>& g,
                              std::size_t n_out, double n0, const EstimatorConfig& config,
                              ExpectationMode mode, std::span<const std::uint64_t> stream_labels) {
    if (!(n0 > 0.0) || !std::isfinite(n0)) {
        throw std::invalid_argument("expect_complex_gaussian: n0 must be finite and > 0");
    }
    config.validate();
    std::vector<double> buf(n_out);
    std::vector<EstimateWithError> out(n_out);

    if (mode == ExpectationMode::GaussHermite) {
        const GaussHermiteRule rule = gauss_hermite(config.gh_nodes);
        const double scale = std::sqrt(n0);
        std::vector<double> acc(n_out, 0.0);
        for (int i = 0; i < config.gh_nodes; ++i) {
            for (int j = 0; j < config.gh_nodes; ++j) {
                const std::complex<double> w(scale * rule.nodes[i], scale * rule.nodes[j]);
                const double wt = rule.weights[i] * rule.weights[j];
                g(w, buf);
                for (std::size_t k = 0; k < n_out; ++k) {
                    acc[k] += wt * buf[k];
                }
            }
        }
        for (std::size_t k = 0; k < n_out; ++k) {
            out[k] = {acc[k] / kPi, 0.0};
        }
        return out;
    }

    RandomStream stream = derive_stream(config.seed, stream_labels);
    std::vector<double> mean(n_out, 0.0);
    std::vector<double> m2(n_out, 0.0);
    for (long long s = 1; s <= config.mc_samples; ++s) {
        const std::complex<double> w = stream.complex_normal(n0);
        g(w, buf);
        for (std::size_t k = 0; k < n_out; ++k) {
            const double delta = buf[k] - mean[k];
            mean[k] += delta / static_cast<double>(s);
            m2[k] += delta * (buf[k] - mean[k]);
        }
    }
    const double n = static_cast<double>(config.mc_samples);
    for (std::size_t k = 0; k < n_out; ++k) {
        const double var = config.mc_samples > 1 ? m2[k] / (n - 1.0) : 0.0;
        out[k] = {mean[k], std::sqrt(var / n)};
    }
    return out;
}

EstimateWithError expect_complex_gaussian(const std::function<double(std::complex<double>)>& g,
                                          double n0, const EstimatorConfig& config,
                                          ExpectationMode mode,
                                          std::span<const std::uint64_t> stream_labels) {
    auto wrapped = [&g](std::complex<double> w, std::span<double> out) { out[0] = g(w); };
    return expect_complex_gaussian_multi(wrapped, 1, n0, config, mode, stream_labels)[0];
}

} // namespace polarmi
