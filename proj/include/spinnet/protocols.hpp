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
#include <map>
#include <string>
#include <vector>

#include "spinnet/gates.hpp"
#include "spinnet/state.hpp"

namespace spinnet {

/// Gate: ideal gate circuits. Hardware: the same circuits lowered to
/// phase-exact netlists, so states agree up to a global phase.
enum class Layer { Gate, Hardware };

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
const char *bell_state_name(BellState b);

/// Two-qubit Bell state on (first, second), normalized, textbook signs.
Vector bell_vector(BellState b);

struct BellOutcome {
    BellState which = BellState::PhiPlus;
    /// (bit of q1, bit of q2) after the analyzer.
    std::array<int, 2> raw_bits{};
};

/// The analyzer bits (b1, b2) -> Bell state: 00 Phi+, 10 Phi-, 01 Psi+, 11 Psi-.
BellState bell_from_bits(int b1, int b2);

struct ProtocolResult {
    PureState final_state;
    std::vector<MeasurementRecord> records;
    std::map<std::string, double> derived;
};

/// Runs a circuit on either layer.
PureState run_on_layer(const Circuit &circuit, const PureState &input, Layer layer);

/// BS(pi/4) on the mode, then NOT on the spin conditioned on mode 1.
PureState spin_mode_entangler(const PureState &state, std::size_t electron, Layer layer = Layer::Gate);

/// Coulomb phase at which the mode-mode entangler outputs i|Psi+>.
inline constexpr double kModeModePhiStar = 3.141592653589793;

/// Two electrons from |up up; 0 0>: BS(pi/4) on both modes, C(phi), BS(pi/4)
/// on the second mode.
ProtocolResult mode_mode_entangler(double phi = kModeModePhiStar, Layer layer = Layer::Gate);

struct BellMeasurement {
    BellOutcome outcome;
    /// Full register after measurement; the measured pair is left in the
    /// analyzer's computational basis state.
    PureState post_state;
    MeasurementRecord record;
};

/// CNOT(q1, q2), H(q1), then a computational measurement of (q1, q2).
BellMeasurement bell_measure(const PureState &state, QubitRef q1, QubitRef q2, std::uint64_t seed,
                             Layer layer = Layer::Gate);

/// Two spin-mode entangled electrons, Bell measurement of (k0, k1).
ProtocolResult entanglement_swapping(std::uint64_t seed, Layer layer = Layer::Gate);

/// SWAP(s0, k0) SWAP(s1, k1) on a two-electron register.
PureState entanglement_transfer(const PureState &state, Layer layer = Layer::Gate);

/// SWAP(k0, k1) followed by SWAP(s0, k0) on a two-electron register.
PureState hyper_entangler(const PureState &state, Layer layer = Layer::Gate);

/// Spin state polarized along n = (0, sin theta0, cos theta0).
std::array<Complex, 2> polarized_spin(double theta0);

/// Probability that the electron leaves in mode 0 after exp(-i theta sigma_x / 2)
/// and a polarizing beam splitter. For polarized_spin(theta0) this is
/// cos^2((theta - theta0) / 2). Throws UnnormalizedState if |a|^2+|b|^2 is off
/// by more than 1e-10.
double stern_gerlach_p_up(double theta, Complex alpha, Complex beta, Layer layer = Layer::Gate);

/// Average over an antipodal pair of polarizations.
double stern_gerlach_p_up_unpolarized(double theta, Layer layer = Layer::Gate);

struct SternGerlachPoint {
    double theta = 0.0;
    double p_up = 0.0;
};

/// `points` equally spaced angles covering one period, endpoints included.
/// With `half_angle` both theta and theta0 are half-angles and the law reads
/// cos^2(theta - theta0) over [0, pi]; otherwise cos^2((theta - theta0)/2) over [0, 2 pi].
std::vector<SternGerlachPoint> stern_gerlach_sweep(double theta0, std::size_t points, bool half_angle = false);

/// <(sigma.n1)_s0 (sigma.n2)_s1> with n = (0, sin theta, cos theta).
double chsh_correlation(const PureState &state, double theta1, double theta2);

/// S = P(a,b) - P(a,b') + P(a',b) + P(a',b').
double chsh_s(const PureState &state, double a, double a_prime, double b, double b_prime);

/// Angles (a, a', b, b') that reach 2 sqrt 2 on Phi+ spins.
inline constexpr std::array<double, 4> kChshOptimalAngles = {0.0, 1.5707963267948966, -0.7853981633974483,
                                                             -2.356194490192345};

/// (|up up> (|00> + |11>)) / sqrt 2: mode-entangled input of the transfer protocol.
PureState transfer_input();

/// Product of two spin-mode entangled electrons.
PureState hyper_input();

}  // namespace spinnet
