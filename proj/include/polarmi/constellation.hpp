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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace polarmi {

/// A finite signal set with optional polar product structure. When
/// phase_levels is non-empty the set is exactly {r * e^{j*phi}} for
/// r in amp_levels, phi in phase_levels, and points are ordered ring-major
/// (amp_index/phase_index give each point's factor indices).
struct Constellation {
    std::vector<std::complex<double>> points;
    std::vector<double> amp_levels;   ///< distinct amplitudes, ascending
    std::vector<double> phase_levels; ///< ascending, in [-pi, pi); empty if not factorable
    std::vector<int> amp_index;       ///< per point, only for factorable sets
    std::vector<int> phase_index;
    int m = 0;        ///< log2(|points|)
    int m_amp = -1;   ///< factor bit counts; -1 when not polar-factorable
    int m_phase = -1;
    double es = 0.0;  ///< mean symbol energy

    bool is_polar_factorable() const { return !phase_levels.empty(); }
};

/// Bit split between phase and amplitude: even m -> (m/2 + 1, m/2 - 1),
/// odd m -> ((m+1)/2, (m-1)/2). Returns (m_phase, m_amp); m must be >= 2.
std::pair<int, int> split_m(int m);

/// Product APSK with Gaussian-quantile ring radii
/// r_q = sqrt(-ln(1 - (q + 1/2) 2^{-m_amp})) and uniform phase grid
/// phi_p = pi(2p+1)/2^{m_phase}; energies are not renormalized.
Constellation make_product_apsk(int m);

/// Same construction with an explicit (m_phase, m_amp) split.
Constellation make_product_apsk_split(int m_phase, int m_amp);

/// Square QAM on the odd-integer grid, normalized to es = 1. Polar-factorable
/// only for m = 2 (QPSK). m must be even and >= 2.
Constellation make_square_qam(int m);

/// Unit-radius 2^m-PSK using the APSK phase grid.
Constellation make_psk(int m);

/// Real-axis factor of a square QAM as a degenerate complex set;
/// es is half the QAM's. Throws if the input is not a square grid.
Constellation make_pam_factor(const Constellation& qam);

struct ValidationReport {
    bool pass = true;
    std::vector<std::pair<std::string, bool>> checks;
    std::string summary() const;
};

/// Structural invariants: power-of-two size, no duplicate points, es
/// consistency, and (if factorable) exact product coverage.
ValidationReport validate(const Constellation& c);

/// Columns: index, re, im, amp, phase.
void export_csv(const Constellation& c, std::ostream& os);
void export_csv(const Constellation& c, const std::string& path);

} // namespace polarmi
