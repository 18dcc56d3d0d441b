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

#include "polarmi/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "polarmi/gaussian_polar.hpp"

namespace polarmi {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
    return mix_u64(seed + kGolden * (static_cast<std::uint64_t>(index) + 1));
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double round6(double v) {
    return std::strtod(fmt6(v).c_str(), nullptr);
}

Constellation build_constellation(const SweepSpec& spec) {
    switch (spec.kind) {
    case InputKind::ProductApsk:
        return make_product_apsk(spec.order_m);
    case InputKind::SquareQam:
        return make_square_qam(spec.order_m);
    case InputKind::Psk:
        return make_psk(spec.order_m);
    default:
        throw std::logic_error("build_constellation: gaussian input has no constellation");
    }
}

SweepRecord evaluate_point(const SweepSpec& spec, const Constellation* c, double snr_db,
                           const EstimatorConfig& cfg) {
    SweepRecord rec;
    rec.snr_db = snr_db;
    if (spec.kind == InputKind::Gaussian) {
        const ChannelParams params = ChannelParams::from_snr_db(snr_db);
        const PolarDecomposition d = decompose_gaussian(params, cfg);
        rec.total = d.total;
        rec.amplitude = d.amplitude;
        rec.phase = d.phase;
        rec.cross = d.cross;
        rec.amp_lower = amp_lower_bound(params);
        rec.phase_upper = phase_upper_bound(params);
        return rec;
    }
    const double n0 = c->es / std::pow(10.0, snr_db / 10.0);
    if (c->is_polar_factorable()) {
        const PolarDecomposition d = decompose_constellation(*c, n0, cfg, spec.mode);
        rec.total = d.total;
        rec.amplitude = d.amplitude;
        rec.phase = d.phase;
        rec.cross = d.cross;
    } else {
        rec.total = ami(*c, n0, cfg, spec.mode);
    }
    return rec;
}

// ami as a function of SNR in dB for a fixed constellation.
double ami_at_db(const Constellation& c, double snr_db, const EstimatorConfig& config,
                 ExpectationMode mode) {
    const double n0 = c.es / std::pow(10.0, snr_db / 10.0);
    return ami(c, n0, config, mode).value;
}

// First SNR (dB) at which the monotone ami curve reaches the target:
// 1 dB bracket scan, 0.1 dB walk, then bisection to 0.01 dB.
double snr_at_rate(const Constellation& c, double target, const EstimatorConfig& config,
                   ExpectationMode mode) {
    double lo = -20.0;
    double hi = lo;
    double f_hi = ami_at_db(c, hi, config, mode);
    if (f_hi >= target) {
        throw std::runtime_error("shaping_gain: target already met at -20 dB");
    }
    while (f_hi < target) {
        lo = hi;
        hi += 1.0;
        if (hi > 40.0) {
            throw std::runtime_error("shaping_gain: target rate not reachable below 40 dB");
        }
        f_hi = ami_at_db(c, hi, config, mode);
    }
    for (double a = lo; a < hi - 1e-12; a += 0.1) {
        if (ami_at_db(c, a + 0.1, config, mode) >= target) {
            lo = a;
            hi = a + 0.1;
            break;
        }
    }
    while (hi - lo > 0.01) {
        const double mid = 0.5 * (lo + hi);
        (ami_at_db(c, mid, config, mode) >= target ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string to_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "snr_db,total,amplitude,phase,cross,amp_lower,phase_upper,"
          "total_err,amplitude_err,phase_err,cross_err\n";
    auto opt_val = [](const std::optional<EstimateWithError>& e) {
        return e ? fmt6(e->value) : std::string();
    };
    auto opt_err = [](const std::optional<EstimateWithError>& e) {
        return e ? fmt6(e->std_error) : std::string();
    };
    for (const SweepRecord& r : result.records) {
        os << fmt6(r.snr_db) << ',' << fmt6(r.total.value) << ',' << opt_val(r.amplitude) << ','
           << opt_val(r.phase) << ',' << opt_val(r.cross) << ','
           << (r.amp_lower ? fmt6(*r.amp_lower) : std::string()) << ','
           << (r.phase_upper ? fmt6(*r.phase_upper) : std::string()) << ','
           << fmt6(r.total.std_error) << ',' << opt_err(r.amplitude) << ','
           << opt_err(r.phase) << ',' << opt_err(r.cross) << '\n';
    }
    return os.str();
}

std::string to_json(const SweepResult& result) {
    using json = nlohmann::ordered_json;
    json meta;
    meta["tool"] = kToolVersion;
    meta["kind"] = to_string(result.kind);
    if (result.kind != InputKind::Gaussian) {
        meta["order"] = result.order_m;
    }
    meta["es"] = round6(result.es);
    meta["seed"] = result.config.seed;
    meta["mc_samples"] = result.config.mc_samples;
    meta["gh_nodes"] = result.config.gh_nodes;
    meta["quad_tol"] = result.config.quad_tol;
    meta["mode"] = result.mode == ExpectationMode::GaussHermite ? "gh" : "mc";

    json records = json::array();
    auto put = [](json& row, const char* key, const char* err_key,
                  const std::optional<EstimateWithError>& e) {
        row[key] = e ? json(round6(e->value)) : json(nullptr);
        row[err_key] = e ? json(round6(e->std_error)) : json(nullptr);
    };
    for (const SweepRecord& r : result.records) {
        json row;
        row["snr_db"] = round6(r.snr_db);
        row["total"] = round6(r.total.value);
        row["total_err"] = round6(r.total.std_error);
        put(row, "amplitude", "amplitude_err", r.amplitude);
        put(row, "phase", "phase_err", r.phase);
        put(row, "cross", "cross_err", r.cross);
        row["amp_lower"] = r.amp_lower ? json(round6(*r.amp_lower)) : json(nullptr);
        row["phase_upper"] = r.phase_upper ? json(round6(*r.phase_upper)) : json(nullptr);
        records.push_back(std::move(row));
    }
    json root;
    root["metadata"] = std::move(meta);
    root["records"] = std::move(records);
    return root.dump(2) + "\n";
}

} // namespace

const char* to_string(InputKind kind) {
    switch (kind) {
    case InputKind::Gaussian:
        return "gaussian";
    case InputKind::ProductApsk:
        return "product_apsk";
    case InputKind::SquareQam:
        return "square_qam";
    case InputKind::Psk:
        return "psk";
    }
    return "?";
}

void SweepSpec::validate() const {
    config.validate();
    if (!(snr_step_db > 0.0)) {
        throw std::invalid_argument("SweepSpec: snr_step_db must be > 0");
    }
    if (snr_start_db > snr_stop_db) {
        throw std::invalid_argument("SweepSpec: snr_start_db must be <= snr_stop_db");
    }
    if (threads < 1) {
        throw std::invalid_argument("SweepSpec: threads must be >= 1");
    }
    if (kind != InputKind::Gaussian && order_m < 1) {
        throw std::invalid_argument("SweepSpec: order_m must be >= 1");
    }
    if (kind == InputKind::ProductApsk && order_m < 2) {
        throw std::invalid_argument("SweepSpec: product APSK needs order_m >= 2");
    }
    if (kind == InputKind::SquareQam && (order_m < 2 || order_m % 2 != 0)) {
        throw std::invalid_argument("SweepSpec: square QAM needs an even order_m >= 2");
    }
}

std::vector<double> SweepSpec::grid() const {
    const auto n =
        static_cast<std::size_t>(std::floor((snr_stop_db - snr_start_db) / snr_step_db + 1e-9)) + 1;
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = snr_start_db + static_cast<double>(i) * snr_step_db;
    }
    return g;
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    Constellation c;
    if (spec.kind != InputKind::Gaussian) {
        c = build_constellation(spec);
    }

    SweepResult result;
    result.kind = spec.kind;
    result.order_m = spec.kind == InputKind::Gaussian ? 0 : spec.order_m;
    result.es = spec.kind == InputKind::Gaussian ? 1.0 : c.es;
    result.config = spec.config;
    result.mode = spec.mode;

    const std::vector<double> grid = spec.grid();
    result.records.resize(grid.size());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error;

    auto worker = [&]() {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) {
                return;
            }
            EstimatorConfig cfg = spec.config;
            cfg.seed = point_seed(spec.config.seed, i);
            try {
                result.records[i] =
                    evaluate_point(spec, spec.kind == InputKind::Gaussian ? nullptr : &c,
                                   grid[i], cfg);
            } catch (const std::exception& e) {
                failed.store(true);
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (error.empty()) {
                    error = "sweep failed at " + fmt6(grid[i]) + " dB: " + e.what();
                }
            }
        }
    };

    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(spec.threads), grid.size());
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t t = 0; t < n_workers; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failed.load()) {
        throw std::runtime_error(error);
    }
    return result;
}

std::string emit_to_string(const SweepResult& result, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(result) : to_json(result);
}

void emit(const SweepResult& result, OutputFormat format, const std::string& path) {
    const std::string payload = emit_to_string(result, format);
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw std::runtime_error("emit: cannot open " + tmp.string());
        }
        os << payload;
        if (!os.flush()) {
            throw std::runtime_error("emit: write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

double shaping_gain(int m, double target_rate_bits, const EstimatorConfig& config,
                    ExpectationMode mode) {
    if (m < 4 || m % 2 != 0) {
        throw std::invalid_argument("shaping_gain: m must be even and >= 4");
    }
    if (!(target_rate_bits > 0.0) || !(target_rate_bits < m)) {
        throw std::invalid_argument("shaping_gain: target rate must lie in (0, m)");
    }
    const Constellation apsk = make_product_apsk(m);
    const Constellation qam = make_square_qam(m);
    const double snr_apsk = snr_at_rate(apsk, target_rate_bits, config, mode);
    const double snr_qam = snr_at_rate(qam, target_rate_bits, config, mode);
    return snr_qam - snr_apsk;
}

} // namespace polarmi
