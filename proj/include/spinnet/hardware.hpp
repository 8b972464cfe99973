// Copyright 2026 The spinnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinnet/state.hpp"

namespace spinnet {

enum class ElementKind : std::uint8_t { BeamSplitter, ABPhase, Rashba, CoulombCoupler, Detector };
enum class Axis : std::uint8_t { X, Z };
/// Which wires a Rashba region covers.
enum class ModeMask : std::uint8_t { Both, Mode1Only };
enum class DetectorTarget : std::uint8_t { Mode, Full };

/// One physical building block.
///
///  - BeamSplitter(theta): Rx(theta) on the electron's mode qubit.
///  - ABPhase(phi):        P(phi) on the mode qubit.
///  - Rashba(axis, theta, Both):      R_axis(theta) on the spin qubit.
///  - Rashba(axis, theta, Mode1Only): R_axis(theta) on spin iff mode = 1.
///  - CoulombCoupler(phi): C(phi) on the modes of two distinct electrons.
///  - Detector: projective measurement, only meaningful when simulating.
struct HardwareElement {
    ElementKind kind = ElementKind::BeamSplitter;
    std::size_t electron = 0;
    /// Second electron, CoulombCoupler only.
    std::size_t electron2 = 0;
    double angle = 0.0;
    Axis axis = Axis::X;
    ModeMask mask = ModeMask::Both;
    DetectorTarget detector = DetectorTarget::Mode;

    void validate(std::size_t n_electrons) const;

    friend bool operator==(const HardwareElement &, const HardwareElement &) = default;
};

HardwareElement beam_splitter(std::size_t electron, double theta);
HardwareElement ab_phase(std::size_t electron, double phi);
HardwareElement rashba(std::size_t electron, Axis axis, double theta, ModeMask mask = ModeMask::Both);
HardwareElement coulomb_coupler(std::size_t e1, std::size_t e2, double phi);
HardwareElement detector(std::size_t electron, DetectorTarget target);

/// Elements in physical traversal order.
struct Netlist {
    std::size_t n_electrons = 1;
    std::vector<HardwareElement> elements;

    Netlist &add(HardwareElement e);
    void validate() const;
    bool has_detectors() const;

    friend bool operator==(const Netlist &, const Netlist &) = default;
};

/// Physical knobs in natural units (hbar = e = c = 1). The Rashba constant
/// g_m e hbar / (4 m c^2) is folded into `alpha`. Flux is in flux quanta.
struct HardwareParams {
    double alpha = 0.0;
    double field = 0.0;
    double length = 0.0;
    double flux = 0.0;
    double tunneling_integral = 0.0;
};

enum class AngleSource : std::uint8_t { AB, BS, Rashba };

/// AB: phi = 2 pi flux. BS: theta = -integral of tau dt. Rashba: theta =
/// alpha * E * L. There is deliberately no velocity input.
double physical_to_angle(const HardwareParams &params, AngleSource which);

Unitary element_unitary(const HardwareElement &elem, std::size_t n_electrons);

/// Ordered product of element unitaries. Throws NotAUnitaryElement when the
/// netlist contains a detector.
Unitary netlist_unitary(const Netlist &netlist);

/// Applies the unitary elements of a netlist in order to a state.
PureState apply_netlist(const Netlist &netlist, const PureState &input);

struct ShotResult {
    PureState final_state;
    /// One record per detector, in element order.
    std::vector<MeasurementRecord> records;

    /// Detector outcomes joined by '|', e.g. "01|1".
    std::string outcome_key() const;
};

/// Runs a netlist including detectors. A Mode detector measures the
/// electron's mode qubit, a Full detector measures spin then mode. Each
/// detector draws its own seed from an mt19937_64 seeded with `seed`.
ShotResult simulate_shot(const Netlist &netlist, const PureState &input, std::uint64_t seed);

// Polarizing beam splitter: a balanced Mach-Zehnder interferometer (two 50/50
// splitters) with a Rashba Rz(pi/2) region on the 1-mode and an enclosed AB
// flux. The splitter angles and flux below were derived by exhaustive search
// over the four-element family; no choice makes the device equal CNOT(s, k)
// up to a global phase, so the residual diagonal phases are published too.
inline constexpr double kPbsSplitterIn = 0.7853981633974483;   // pi/4
inline constexpr double kPbsRashba = 1.5707963267948966;       // pi/2
inline constexpr double kPbsAbPhase = 1.5707963267948966;      // pi/2
inline constexpr double kPbsSplitterOut = 0.7853981633974483;  // pi/4

/// Input-side residual: U_pbs = CNOT(s,k) * diag(e^{i r_b}) with b running
/// over (up,0), (down,0), (up,1), (down,1).
inline constexpr std::array<double, 4> kPbsResidualPhases = {0.0, 1.5707963267948966, 3.141592653589793,
                                                             1.5707963267948966};

/// CNOT with spin control and mode target on a one-electron register.
Unitary pbs_behavioral();

/// BS(pi/4), Rashba(z, pi/2, mode 1), AB(pi/2), BS(pi/4) on `electron`.
Netlist pbs_hardware_netlist(std::size_t electron = 0, std::size_t n_electrons = 1);

/// Three elements that cancel the PBS residual (applied after the PBS):
/// Rashba(z, pi/4, both), Rashba(z, pi/2, mode 1), AB(pi/2).
std::vector<HardwareElement> pbs_phase_trim(std::size_t electron);

struct PbsEquivalenceReport {
    bool global_phase_equal = false;
    double global_phase = 0.0;
    /// True iff U_pbs = CNOT * diag(residual) within tol.
    bool diagonal_equal = false;
    std::array<double, 4> residual_phases{};
    /// routing[s][k]: probability that |s; k> exits in the mode predicted by
    /// CNOT(s, k) (k for spin up, 1 - k for spin down).
    std::array<std::array<double, 2>, 2> routing{};
    bool routing_ok = false;
    bool trimmed_global_phase_equal = false;
};

PbsEquivalenceReport pbs_equivalence_report(double tol);

}  // namespace spinnet
