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

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace polarmi {

struct EstimatorConfig {
    long long mc_samples = 200000; ///< Monte-Carlo draws per evaluated symbol
    int gh_nodes = 32;             ///< Gauss-Hermite nodes per real dimension
    double quad_tol = 1e-8;        ///< absolute quadrature tolerance
    std::uint64_t seed = 1;

    void validate() const {
        if (mc_samples < 1) throw std::invalid_argument("EstimatorConfig: mc_samples must be >= 1");
        if (gh_nodes < 2) throw std::invalid_argument("EstimatorConfig: gh_nodes must be >= 2");
        if (!(quad_tol > 0.0)) throw std::invalid_argument("EstimatorConfig: quad_tol must be > 0");
    }
};

struct EstimateWithError {
    double value = 0.0;
    double std_error = 0.0; ///< MC standard error; 0 for deterministic quadrature
};

enum class ExpectationMode { MonteCarlo, GaussHermite };

/// Thrown when adaptive quadrature exhausts its refinement budget; carries
/// the best estimate reached so callers can decide whether to keep it.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& msg, double best)
        : std::runtime_error(msg), best_estimate(best) {}
    double best_estimate;
};

/// Adaptive Gauss-Kronrod 7/15 with a worst-interval refinement queue.
/// b may be +infinity, in which case the tail is folded onto [0,1) by
/// x = a + t/(1-t); integrands are expected to decay there.
double integrate_1d(const std::function<double(double)>& f, double a, double b, double tol);

/// Deterministic counter-based random stream: the n-th draw depends only on
/// (key, n), so streams can be split across workers with identical results
/// regardless of scheduling. Key derivation and output mixing use the
/// splitmix64 finalizer.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64();
    double uniform();                              ///< [0, 1)
    double normal();                               ///< N(0, 1), Box-Muller
    std::complex<double> complex_normal(double variance); ///< CN(0, variance)

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Sub-stream keyed by (seed, labels); distinct label tuples give
/// statistically independent streams.
RandomStream derive_stream(std::uint64_t seed, std::span<const std::uint64_t> labels);
RandomStream derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> labels);

/// splitmix64 finalizer; also used to fold sweep point indices into seeds.
std::uint64_t mix_u64(std::uint64_t z);

struct GaussHermiteRule {
    std::vector<double> nodes;   ///< roots of H_n, ascending
    std::vector<double> weights; ///< for the weight exp(-x^2); sums to sqrt(pi)
};

/// Nodes/weights by Newton iteration on the orthonormal Hermite recurrence.
GaussHermiteRule gauss_hermite(int n);

/// E_w[g(w)] for circularly symmetric Gaussian w with E|w|^2 = n0
/// (variance n0/2 per real dimension). GH mode: tensor rule over (Re, Im),
/// std_error = 0. MC mode: config.mc_samples draws from the stream keyed by
/// (config.seed, stream_labels), std_error = sample std / sqrt(n).
EstimateWithError expect_complex_gaussian(const std::function<double(std::complex<double>)>& g,
                                          double n0, const EstimatorConfig& config,
                                          ExpectationMode mode,
                                          std::span<const std::uint64_t> stream_labels = {});

/// Vector-valued variant: g fills n_out values per noise draw, all outputs
/// share the same draws. Used to keep the decomposition terms on common noise.
std::vector<EstimateWithError>
expect_complex_gaussian_multi(const std::function<void(std::complex<double>, std::span<double>)>& g,
                              std::size_t n_out, double n0, const EstimatorConfig& config,
                              ExpectationMode mode,
                              std::span<const std::uint64_t> stream_labels = {});

} // namespace polarmi
