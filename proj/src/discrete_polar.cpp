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

#include "polarmi/discrete_polar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polarmi/distributions.hpp"
#include "polarmi/special_math.hpp"

namespace polarmi {

namespace {

constexpr double kLog2E = 1.4426950408889634;
constexpr std::uint64_t kDiscreteTag = 0x64697363706f6c72ULL; // "discpolr"

// Posterior weights below exp(-45) cannot move the cross sum at double
// precision even for 256 symbols.
constexpr double kNegligibleLogWeight = -45.0;

void check_inputs(const Constellation& c, double n0, const EstimatorConfig& config) {
    config.validate();
    if (!(n0 > 0.0) || !std::isfinite(n0)) {
        throw std::invalid_argument("discrete_polar: n0 must be positive and finite");
    }
    if (c.points.empty()) {
        throw std::invalid_argument("discrete_polar: empty constellation");
    }
}

struct KernelOut {
    EstimateWithError ami;
    EstimateWithError amp;
    EstimateWithError phase;
    EstimateWithError cross;
};

// Expected posterior log-ratio deficits for one transmitted symbol, all four
// outputs evaluated on the same noise draw.
class SymbolKernel {
public:
    SymbolKernel(const Constellation& c, double n0, std::size_t sent, bool decompose)
        : c_(c), inv_n0_(1.0 / n0), sent_(sent), decompose_(decompose) {
        b_.resize(c.points.size());
        if (decompose_) {
            const std::size_t q = c.amp_levels.size();
            const std::size_t p = c.phase_levels.size();
            ring_lse_.resize(q);
            phase_lse_.resize(p);
            gather_.resize(q);
        }
    }

    std::size_t outputs() const { return decompose_ ? 4 : 1; }

    void operator()(std::complex<double> w, std::span<double> out) {
        const std::complex<double> z = c_.points[sent_] + w;
        const std::size_t m = c_.points.size();
        for (std::size_t j = 0; j < m; ++j) {
            b_[j] = -std::norm(z - c_.points[j]) * inv_n0_;
        }
        const double log_s = log_sum_exp(b_);
        out[0] = (log_s - b_[sent_]) * kLog2E;
        if (!decompose_) {
            return;
        }
        const std::size_t qn = ring_lse_.size();
        const std::size_t pn = phase_lse_.size();
        // Ring-major point order keeps each ring contiguous.
        for (std::size_t q = 0; q < qn; ++q) {
            ring_lse_[q] = log_sum_exp(std::span(b_).subspan(q * pn, pn));
        }
        for (std::size_t p = 0; p < pn; ++p) {
            for (std::size_t q = 0; q < qn; ++q) {
                gather_[q] = b_[q * pn + p];
            }
            phase_lse_[p] = log_sum_exp(gather_);
        }
        out[1] = (log_s - ring_lse_[c_.amp_index[sent_]]) * kLog2E;
        out[2] = (log_s - phase_lse_[c_.phase_index[sent_]]) * kLog2E;
        double cross = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double lw = b_[j] - log_s;
            if (lw <= kNegligibleLogWeight) {
                continue;
            }
            cross += std::exp(lw) *
                     (b_[j] + log_s - ring_lse_[c_.amp_index[j]] - phase_lse_[c_.phase_index[j]]);
        }
        out[3] = cross * kLog2E;
    }

private:
    const Constellation& c_;
    double inv_n0_;
    std::size_t sent_;
    bool decompose_;
    std::vector<double> b_;
    std::vector<double> ring_lse_;
    std::vector<double> phase_lse_;
    std::vector<double> gather_;
};

// Evaluates the expectation for every needed transmitted symbol. For polar
// products one representative per ring suffices: rotating the sent symbol by
// one phase step permutes the constellation and the circular noise law is
// rotation invariant, so all symbols on a ring share the same expectations.
KernelOut run_kernel(const Constellation& c, double n0, const EstimatorConfig& config,
                     ExpectationMode mode, bool decompose) {
    check_inputs(c, n0, config);
    if (decompose && !c.is_polar_factorable()) {
        throw std::invalid_argument("discrete_polar: constellation is not polar-factorable");
    }

    std::vector<std::size_t> reps;
    if (c.is_polar_factorable()) {
        const std::size_t pn = c.phase_levels.size();
        for (std::size_t q = 0; q < c.amp_levels.size(); ++q) {
            reps.push_back(q * pn);
        }
    } else {
        reps.resize(c.points.size());
        for (std::size_t s = 0; s < reps.size(); ++s) {
            reps[s] = s;
        }
    }
    const double weight = 1.0 / static_cast<double>(reps.size());

    const std::size_t n_out = decompose ? 4 : 1;
    std::vector<double> value(n_out, 0.0);
    std::vector<double> var(n_out, 0.0);
    for (std::size_t r = 0; r < reps.size(); ++r) {
        SymbolKernel kernel(c, n0, reps[r], decompose);
        const std::uint64_t labels[] = {kDiscreteTag, static_cast<std::uint64_t>(r)};
        const auto est = expect_complex_gaussian_multi(
            [&kernel](std::complex<double> w, std::span<double> out) { kernel(w, out); }, n_out,
            n0, config, mode, labels);
        for (std::size_t k = 0; k < n_out; ++k) {
            value[k] += weight * est[k].value;
            var[k] += weight * weight * est[k].std_error * est[k].std_error;
        }
    }

    KernelOut out;
    out.ami = {static_cast<double>(c.m) - value[0], std::sqrt(var[0])};
    if (decompose) {
        out.amp = {static_cast<double>(c.m_amp) - value[1], std::sqrt(var[1])};
        out.phase = {static_cast<double>(c.m_phase) - value[2], std::sqrt(var[2])};
        out.cross = {value[3], std::sqrt(var[3])};
    }
    return out;
}

// I(X_amp; Y_amp) by quadrature over the exact Rice likelihoods of |y|.
double amp_only_information(const Constellation& c, double n0, double tol) {
    const auto& radii = c.amp_levels;
    const std::size_t qn = radii.size();
    if (qn < 2) {
        return 0.0;
    }
    double hi = 0.0;
    for (double r : radii) {
        hi = std::max(hi, rice_upper_limit(r, n0));
    }
    const double inv_q = 1.0 / static_cast<double>(qn);
    std::vector<double> own(qn);
    const auto integrand = [&](double y) {
        double mix = 0.0;
        for (std::size_t q = 0; q < qn; ++q) {
            own[q] = rice_pdf(y, radii[q], n0);
            mix += own[q];
        }
        mix *= inv_q;
        double s = 0.0;
        for (std::size_t q = 0; q < qn; ++q) {
            if (own[q] > 0.0) {
                s += own[q] * std::log(own[q] / mix);
            }
        }
        return s * inv_q * kLog2E;
    };
    // At high SNR each ring's likelihood is a needle the initial coarse pass
    // of an adaptive rule can miss entirely. Splitting at the radii puts
    // every needle at a subinterval endpoint, where the rule's nodes cluster.
    std::vector<double> cuts;
    cuts.push_back(0.0);
    for (double r : radii) {
        if (r > cuts.back() && r < hi) {
            cuts.push_back(r);
        }
    }
    cuts.push_back(hi);
    const double piece_tol = tol / static_cast<double>(cuts.size());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += integrate_1d(integrand, cuts[i], cuts[i + 1], piece_tol);
    }
    return total;
}

} // namespace

EstimateWithError ami(const Constellation& c, double n0, const EstimatorConfig& config,
                      ExpectationMode mode) {
    return run_kernel(c, n0, config, mode, false).ami;
}

EstimateWithError amp_term_discrete(const Constellation& c, double n0,
                                    const EstimatorConfig& config, ExpectationMode mode) {
    return run_kernel(c, n0, config, mode, true).amp;
}

EstimateWithError phase_term_discrete(const Constellation& c, double n0,
                                      const EstimatorConfig& config, ExpectationMode mode) {
    return run_kernel(c, n0, config, mode, true).phase;
}

EstimateWithError cross_term_discrete(const Constellation& c, double n0,
                                      const EstimatorConfig& config, ExpectationMode mode) {
    return run_kernel(c, n0, config, mode, true).cross;
}

PolarDecomposition decompose_constellation(const Constellation& c, double n0,
                                           const EstimatorConfig& config, ExpectationMode mode) {
    const KernelOut k = run_kernel(c, n0, config, mode, true);
    PolarDecomposition d;
    d.total = k.ami;
    d.amplitude = k.amp;
    d.phase = k.phase;
    d.cross = k.cross;
    d.cross_negative = k.cross.value < 0.0;
    return d;
}

EstimateWithError amp_leakage(const Constellation& c, double n0, const EstimatorConfig& config,
                              ExpectationMode mode) {
    const EstimateWithError amp = amp_term_discrete(c, n0, config, mode);
    const double via_amplitude = amp_only_information(c, n0, config.quad_tol);
    return {amp.value - via_amplitude, amp.std_error};
}

std::pair<EstimateWithError, EstimateWithError>
iq_additivity_check(const Constellation& qam, double n0, const EstimatorConfig& config,
                    ExpectationMode mode) {
    const Constellation pam = make_pam_factor(qam); // throws unless square QAM
    const EstimateWithError two_d = ami(qam, n0, config, mode);
    const EstimateWithError one_d = ami(pam, n0, config, mode);
    return {two_d, {2.0 * one_d.value, 2.0 * one_d.std_error}};
}

} // namespace polarmi
