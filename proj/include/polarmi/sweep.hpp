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

#include <optional>
#include <string>
#include <vector>

#include "polarmi/discrete_polar.hpp"

namespace polarmi {

inline constexpr const char* kToolVersion = "polarmi 1.0.0";

enum class InputKind { Gaussian, ProductApsk, SquareQam, Psk };
enum class OutputFormat { Csv, Json };

const char* to_string(InputKind kind);

struct SweepSpec {
    InputKind kind = InputKind::Gaussian;
    int order_m = 6; ///< constellation bits; ignored for Gaussian input
    double snr_start_db = -10.0;
    double snr_stop_db = 20.0;
    double snr_step_db = 1.0;
    EstimatorConfig config;
    ExpectationMode mode = ExpectationMode::GaussHermite;
    OutputFormat output_format = OutputFormat::Csv;
    std::string output_path; ///< empty writes to stdout
    int threads = 1;

    void validate() const;
    std::vector<double> grid() const; ///< snr_start, snr_start+step, ..., <= snr_stop
};

struct SweepRecord {
    double snr_db = 0.0;
    EstimateWithError total;
    /// Decomposition terms; absent for constellations without polar product
    /// structure (square QAM above QPSK).
    std::optional<EstimateWithError> amplitude;
    std::optional<EstimateWithError> phase;
    std::optional<EstimateWithError> cross;
    /// Closed-form bounds; present only for Gaussian input.
    std::optional<double> amp_lower;
    std::optional<double> phase_upper;
};

struct SweepResult {
    std::vector<SweepRecord> records; ///< sorted by snr_db
    InputKind kind = InputKind::Gaussian;
    int order_m = 0;      ///< 0 for Gaussian input
    double es = 1.0;      ///< mean symbol energy defining the dB axis
    EstimatorConfig config;
    ExpectationMode mode = ExpectationMode::GaussHermite;
};

/// Evaluates the decomposition on every grid point, optionally on a worker
/// pool (spec.threads); per-point seeds depend only on (config.seed, point
/// index), so any worker count yields identical results. A numeric failure
/// aborts with the offending SNR in the message.
SweepResult run_sweep(const SweepSpec& spec);

/// Serializes to CSV (fixed header
/// snr_db,total,amplitude,phase,cross,amp_lower,phase_upper,
/// total_err,amplitude_err,phase_err,cross_err; missing fields empty) or to
/// JSON mirroring SweepResult. Floats carry 6 significant digits. Files are
/// written to a temporary sibling and renamed into place.
void emit(const SweepResult& result, OutputFormat format, const std::string& path);
std::string emit_to_string(const SweepResult& result, OutputFormat format);

/// SNR advantage (dB) of product-APSK over square QAM of the same order m at
/// a target rate: SNR_qam(target) - SNR_apsk(target). Each crossing is found
/// on a 0.1 dB local grid and refined by bisection to 0.01 dB. Requires
/// 0 < target_rate_bits < m and the target to be reachable by both curves.
double shaping_gain(int m, double target_rate_bits, const EstimatorConfig& config,
                    ExpectationMode mode = ExpectationMode::GaussHermite);

} // namespace polarmi
