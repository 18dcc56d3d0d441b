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

#include "polarmi/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polarmi {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> phase_grid(int m_phase) {
    const int P = 1 << m_phase;
    std::vector<double> phases(P);
    for (int p = 0; p < P; ++p) {
        double phi = kPi * (2.0 * p + 1.0) / P;
        if (phi >= kPi) {
            phi -= 2.0 * kPi;
        }
        phases[p] = phi;
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

Constellation from_polar_factors(std::vector<double> radii, std::vector<double> phases,
                                 int m_phase, int m_amp) {
    Constellation c;
    c.m = m_phase + m_amp;
    c.m_amp = m_amp;
    c.m_phase = m_phase;
    c.amp_levels = std::move(radii);
    c.phase_levels = std::move(phases);
    const int Q = static_cast<int>(c.amp_levels.size());
    const int P = static_cast<int>(c.phase_levels.size());
    c.points.reserve(static_cast<std::size_t>(Q) * P);
    double energy = 0.0;
    for (int q = 0; q < Q; ++q) {
        for (int p = 0; p < P; ++p) {
            const double r = c.amp_levels[q];
            c.points.emplace_back(r * std::cos(c.phase_levels[p]), r * std::sin(c.phase_levels[p]));
            c.amp_index.push_back(q);
            c.phase_index.push_back(p);
        }
        energy += static_cast<double>(P) * c.amp_levels[q] * c.amp_levels[q];
    }
    c.es = energy / static_cast<double>(c.points.size());
    return c;
}

} // namespace

std::pair<int, int> split_m(int m) {
    if (m < 2) {
        throw std::invalid_argument("split_m: m must be >= 2");
    }
    if (m % 2 == 0) {
        return {m / 2 + 1, m / 2 - 1};
    }
    return {(m + 1) / 2, (m - 1) / 2};
}

Constellation make_product_apsk_split(int m_phase, int m_amp) {
    if (m_phase < 1 || m_amp < 0) {
        throw std::invalid_argument("make_product_apsk_split: need m_phase >= 1, m_amp >= 0");
    }
    const int Q = 1 << m_amp;
    std::vector<double> radii(Q);
    for (int q = 0; q < Q; ++q) {
        radii[q] = std::sqrt(-std::log(1.0 - (q + 0.5) / Q));
    }
    return from_polar_factors(std::move(radii), phase_grid(m_phase), m_phase, m_amp);
}

Constellation make_product_apsk(int m) {
    const auto [m_phase, m_amp] = split_m(m);
    return make_product_apsk_split(m_phase, m_amp);
}

Constellation make_psk(int m) {
    if (m < 1) {
        throw std::invalid_argument("make_psk: m must be >= 1");
    }
    return from_polar_factors({1.0}, phase_grid(m), m, 0);
}

Constellation make_square_qam(int m) {
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("make_square_qam: m must be even and >= 2");
    }
    if (m == 2) {
        // QPSK is the one square QAM with product structure.
        return from_polar_factors({1.0}, phase_grid(2), 2, 0);
    }
    const int side = 1 << (m / 2);
    // Mean power of the odd-integer grid {..,-3,-1,1,3,..} is 2(side^2-1)/3.
    const double scale = 1.0 / std::sqrt(2.0 * (side * side - 1.0) / 3.0);
    Constellation c;
    c.m = m;
    c.points.reserve(static_cast<std::size_t>(side) * side);
    std::set<double> amps;
    for (int i = 0; i < side; ++i) {
        for (int k = 0; k < side; ++k) {
            const double re = scale * (2 * i - side + 1);
            const double im = scale * (2 * k - side + 1);
            c.points.emplace_back(re, im);
            amps.insert(std::hypot(re, im));
        }
    }
    c.amp_levels.assign(amps.begin(), amps.end());
    double energy = 0.0;
    for (const auto& p : c.points) {
        energy += std::norm(p);
    }
    c.es = energy / static_cast<double>(c.points.size());
    return c;
}

Constellation make_pam_factor(const Constellation& qam) {
    constexpr double tol = 1e-9;
    std::vector<double> reals;
    std::vector<double> imags;
    auto insert_level = [](std::vector<double>& levels, double v) {
        for (double l : levels) {
            if (std::abs(l - v) < tol) {
                return;
            }
        }
        levels.push_back(v);
    };
    for (const auto& p : qam.points) {
        insert_level(reals, p.real());
        insert_level(imags, p.imag());
    }
    std::sort(reals.begin(), reals.end());
    std::sort(imags.begin(), imags.end());
    const std::size_t L = reals.size();
    if (L < 2 || L != imags.size() || L * L != qam.points.size()) {
        throw std::invalid_argument("make_pam_factor: input is not a square QAM");
    }
    for (const auto& p : qam.points) {
        const bool on_grid =
            std::any_of(reals.begin(), reals.end(), [&](double r) { return std::abs(r - p.real()) < tol; }) &&
            std::any_of(imags.begin(), imags.end(), [&](double i) { return std::abs(i - p.imag()) < tol; });
        if (!on_grid) {
            throw std::invalid_argument("make_pam_factor: input is not a square QAM");
        }
    }

    Constellation pam;
    pam.m = qam.m / 2;
    double energy = 0.0;
    for (double r : reals) {
        pam.points.emplace_back(r, 0.0);
        energy += r * r;
    }
    pam.es = energy / static_cast<double>(L);
    std::set<double> amps;
    for (double r : reals) {
        amps.insert(std::abs(r));
    }
    pam.amp_levels.assign(amps.begin(), amps.end());
    return pam;
}

ValidationReport validate(const Constellation& c) {
    ValidationReport rep;
    auto add = [&rep](const std::string& name, bool ok) {
        rep.checks.emplace_back(name, ok);
        rep.pass = rep.pass && ok;
    };

    const std::size_t M = c.points.size();
    const bool pow2 = M > 0 && (M & (M - 1)) == 0;
    add("size is a power of two", pow2);
    add("size matches 2^m", pow2 && c.m >= 0 && M == (std::size_t{1} << c.m));

    bool distinct = true;
    for (std::size_t i = 0; i + 1 < M && distinct; ++i) {
        for (std::size_t j = i + 1; j < M; ++j) {
            if (std::abs(c.points[i] - c.points[j]) < 1e-12) {
                distinct = false;
                break;
            }
        }
    }
    add("points are distinct", distinct);

    double energy = 0.0;
    for (const auto& p : c.points) {
        energy += std::norm(p);
    }
    add("es matches mean symbol energy",
        M > 0 && std::abs(energy / static_cast<double>(M) - c.es) <= 1e-12 * std::max(1.0, c.es));

    add("amplitude levels ascending",
        std::is_sorted(c.amp_levels.begin(), c.amp_levels.end(),
                       [](double a, double b) { return a <= b; }) ||
            std::is_sorted(c.amp_levels.begin(), c.amp_levels.end()));

    if (c.is_polar_factorable()) {
        add("factor sizes are 2^m_amp and 2^m_phase",
            c.m_amp >= 0 && c.m_phase >= 1 &&
                c.amp_levels.size() == (std::size_t{1} << c.m_amp) &&
                c.phase_levels.size() == (std::size_t{1} << c.m_phase));
        add("factor bits sum to m", c.m_amp + c.m_phase == c.m);
        bool phases_ok = std::is_sorted(c.phase_levels.begin(), c.phase_levels.end());
        for (double phi : c.phase_levels) {
            phases_ok = phases_ok && phi >= -kPi && phi < kPi;
        }
        add("phases ascending in [-pi, pi)", phases_ok);

        bool product_ok = c.amp_index.size() == M && c.phase_index.size() == M;
        if (product_ok) {
            for (std::size_t i = 0; i < M; ++i) {
                const double r = c.amp_levels[c.amp_index[i]];
                const double phi = c.phase_levels[c.phase_index[i]];
                const std::complex<double> expect(r * std::cos(phi), r * std::sin(phi));
                if (std::abs(expect - c.points[i]) > 1e-9) {
                    product_ok = false;
                    break;
                }
            }
        }
        add("points cover the amp x phase product", product_ok);
    }
    return rep;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL");
    for (const auto& [name, ok] : checks) {
        if (!ok) {
            os << "; failed: " << name;
        }
    }
    return os.str();
}

void export_csv(const Constellation& c, std::ostream& os) {
    os << "index,re,im,amp,phase\n";
    char buf[160];
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto& p = c.points[i];
        std::snprintf(buf, sizeof(buf), "%zu,%.9g,%.9g,%.9g,%.9g\n", i, p.real(), p.imag(),
                      std::abs(p), std::arg(p));
        os << buf;
    }
}

void export_csv(const Constellation& c, const std::string& path) {
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("export_csv: cannot open " + path);
    }
    export_csv(c, os);
}

} // namespace polarmi
