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


#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/metrics.hpp"
#include "spinnet/protocols.hpp"

using namespace spinnet;
using std::numbers::pi;
using oracle::C;

namespace {

constexpr double kR = 0.7071067811865476;

// Basis index of electrons given as (spin bit, mode bit) pairs.
std::size_t idx(std::initializer_list<std::pair<int, int>> electrons) {
    std::size_t b = 0;
    std::size_t e = 0;
    for (auto [s, k] : electrons) {
        b |= static_cast<std::size_t>(s) << (2 * e);
        b |= static_cast<std::size_t>(k) << (2 * e + 1);
        ++e;
    }
    return b;
}

double distance(const PureState &a, const Vector &b) {
    return (a.amplitudes() - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(SpinModeEntangler, UpZeroGivesTildePsiPlus) {
    const PureState s = spin_mode_entangler(new_register(1), 0);
    Vector want = Vector::Zero(4);
    want(idx({{0, 0}})) = kR;
    want(idx({{1, 1}})) = C(0, kR);
    EXPECT_LT(distance(s, want), 1e-12);
}

TEST(SpinModeEntangler, DownZeroInput) {
    const PureState s = spin_mode_entangler(PureState::basis(1, idx({{1, 0}})), 0);
    Vector want = Vector::Zero(4);
    want(idx({{1, 0}})) = kR;
    want(idx({{0, 1}})) = C(0, kR);
    EXPECT_LT(distance(s, want), 1e-12);
}

TEST(SpinModeEntangler, HardwareLayerAgreesUpToPhase) {
    const PureState g = spin_mode_entangler(new_register(2), 1);
    const PureState h = spin_mode_entangler(new_register(2), 1, Layer::Hardware);
    EXPECT_NEAR(fidelity(g, h), 1.0, 1e-12);
}

TEST(ModeModeEntangler, PhiStarGivesIPsiPlus) {
    const ProtocolResult r = mode_mode_entangler();
    Vector want = Vector::Zero(16);
    want(idx({{0, 0}, {0, 1}})) = C(0, kR);
    want(idx({{0, 1}, {0, 0}})) = C(0, kR);
    // Exact, not just up to a global phase.
    EXPECT_LT(distance(r.final_state, want), 1e-12);
    EXPECT_NEAR(r.derived.at("mode_entropy"), 1.0, 1e-10);
    EXPECT_EQ(r.derived.at("spin_entropy"), 0.0);
}

TEST(ModeModeEntangler, ZeroCouplingIsProduct) {
    const ProtocolResult r = mode_mode_entangler(0.0);
    EXPECT_NEAR(r.derived.at("mode_entropy"), 0.0, 1e-12);
}

TEST(ModeModeEntangler, PhiStarMaximizesEntropy) {
    const double best = mode_mode_entangler(kModeModePhiStar).derived.at("mode_entropy");
    for (int i = -20; i <= 20; ++i) {
        EXPECT_LE(mode_mode_entangler(pi * i / 20.0).derived.at("mode_entropy"), best + 1e-12);
    }
}

TEST(ModeModeEntangler, HardwareLayer) {
    const ProtocolResult r = mode_mode_entangler(kModeModePhiStar, Layer::Hardware);
    EXPECT_NEAR(r.derived.at("fidelity_i_psi_plus"), 1.0, 1e-10);
}

TEST(BellMeasure, PhiPlusIsCertain) {
    Vector v = Vector::Zero(16);
    v(idx({{0, 0}, {0, 0}})) = kR;
    v(idx({{0, 1}, {0, 1}})) = kR;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const BellMeasurement m = bell_measure(PureState(2, v), mode(0), mode(1), seed);
        EXPECT_EQ(m.outcome.which, BellState::PhiPlus);
        EXPECT_NEAR(m.record.probability, 1.0, 1e-12);
    }
}

TEST(BellMeasure, EachBellStateIdentified) {
    for (int b = 0; b < 4; ++b) {
        const Vector bell = bell_vector(static_cast<BellState>(b));
        // Place the pair on (s0, s1): flat qubits 0 and 2.
        Vector v = Vector::Zero(16);
        for (int i = 0; i < 4; ++i) {
            v((i & 1) | ((i >> 1) << 2)) = bell(i) * C(0, 1);
        }
        const BellMeasurement m = bell_measure(PureState(2, v), spin(0), spin(1), 3);
        EXPECT_EQ(static_cast<int>(m.outcome.which), b);
        EXPECT_EQ(bell_from_bits(m.outcome.raw_bits[0], m.outcome.raw_bits[1]), m.outcome.which);
    }
}

TEST(BellMeasure, ProductInputSplitsEvenly) {
    int phi_plus = 0;
    const int shots = 10000;
    for (int i = 0; i < shots; ++i) {
        const BellMeasurement m = bell_measure(new_register(2), mode(0), mode(1), 500 + i);
        ASSERT_TRUE(m.outcome.which == BellState::PhiPlus || m.outcome.which == BellState::PhiMinus);
        phi_plus += m.outcome.which == BellState::PhiPlus;
    }
    EXPECT_NEAR(static_cast<double>(phi_plus) / shots, 0.5, 0.02);
    EXPECT_THROW(bell_measure(new_register(2), mode(0), mode(0), 1), Error);
}

TEST(EntanglementSwapping, OutcomesUniformAndSpinsMaximallyEntangled) {
    std::array<int, 4> counts{};
    const int shots = 10000;
    for (int i = 0; i < shots; ++i) {
        const ProtocolResult r = entanglement_swapping(i);
        ++counts[static_cast<int>(r.derived.at("outcome"))];
        if (i < 200) {
            EXPECT_NEAR(r.derived.at("spin_entropy"), 1.0, 1e-10);
            EXPECT_NEAR(r.derived.at("spin_concurrence"), 1.0, 1e-9);
            EXPECT_NEAR(r.derived.at("probability"), 0.25, 1e-12);
        }
    }
    for (int c : counts) {
        EXPECT_NEAR(static_cast<double>(c) / shots, 0.25, 0.02);
    }
}

TEST(EntanglementSwapping, SpinBellStateFollowsOutcome) {
    // Brute-force expansion of the product of two spin-mode pairs:
    // mode Phi+/- leaves spins in Phi-/+, mode Psi+/- leaves Psi+/-.
    const std::array<BellState, 4> expected = {BellState::PhiMinus, BellState::PhiPlus, BellState::PsiPlus,
                                               BellState::PsiMinus};
    std::array<bool, 4> seen{};
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        const ProtocolResult r = entanglement_swapping(seed);
        const int o = static_cast<int>(r.derived.at("outcome"));
        seen[o] = true;
        EXPECT_EQ(static_cast<int>(r.derived.at("spin_bell_state")), static_cast<int>(expected[o]));
        EXPECT_NEAR(r.derived.at("spin_bell_fidelity"), 1.0, 1e-12);
    }
    for (bool s : seen) {
        EXPECT_TRUE(s);
    }
}

TEST(EntanglementSwapping, SeedDeterminesEverything) {
    const ProtocolResult a = entanglement_swapping(42);
    const ProtocolResult b = entanglement_swapping(42);
    EXPECT_EQ(a.derived, b.derived);
    EXPECT_EQ(a.final_state.amplitudes(), b.final_state.amplitudes());
    ASSERT_EQ(a.records.size(), 1u);
    EXPECT_EQ(a.records[0].seed, 42u);
}

TEST(EntanglementTransfer, MapsModeBellToSpinBell) {
    const PureState in = transfer_input();
    const PureState out = entanglement_transfer(in);
    Vector want = Vector::Zero(16);
    want(idx({{0, 0}, {0, 0}})) = kR;
    want(idx({{1, 0}, {1, 0}})) = kR;
    EXPECT_LT(distance(out, want), 1e-12);
    EXPECT_NEAR(entanglement_entropy(in, {mode(0)}), 1.0, 1e-10);
    EXPECT_NEAR(entanglement_entropy(out, {mode(0)}), 0.0, 1e-10);
    EXPECT_NEAR(entanglement_entropy(in, {spin(0)}), 0.0, 1e-10);
    EXPECT_NEAR(entanglement_entropy(out, {spin(0)}), 1.0, 1e-10);
    EXPECT_LT(distance(entanglement_transfer(out), in.amplitudes()), 1e-12);
}

TEST(EntanglementTransfer, HardwareLayer) {
    const PureState out = entanglement_transfer(transfer_input(), Layer::Hardware);
    EXPECT_NEAR(fidelity(out, entanglement_transfer(transfer_input())), 1.0, 1e-12);
    EXPECT_THROW(entanglement_transfer(new_register(1)), Error);
}

TEST(HyperEntangler, ProducesProductOfBellPairs) {
    const PureState in = hyper_input();
    const PureState out = hyper_entangler(in);
    Vector want = Vector::Zero(16);
    // (|up up> + i |down down>)(|00> + i |11>) / 2
    for (int s = 0; s < 2; ++s) {
        for (int k = 0; k < 2; ++k) {
            const C amp = (s ? C(0, 1) : C(1)) * (k ? C(0, 1) : C(1)) * 0.5;
            want(idx({{s, k}, {s, k}})) = amp;
        }
    }
    EXPECT_LT(distance(out, want), 1e-12);
    EXPECT_NEAR(entanglement_entropy(in, {spin(0)}) + entanglement_entropy(in, {spin(1)}), 2.0, 1e-10);
    EXPECT_NEAR(entanglement_entropy(out, {spin(0), spin(1)}), 0.0, 1e-10);
    EXPECT_NEAR(entanglement_entropy(out, {spin(0)}) + entanglement_entropy(out, {mode(0)}), 2.0, 1e-10);
}

TEST(HyperEntangler, HardwareLayer) {
    const PureState out = hyper_entangler(hyper_input(), Layer::Hardware);
    EXPECT_NEAR(fidelity(out, hyper_entangler(hyper_input())), 1.0, 1e-12);
}

TEST(SternGerlach, PolarizedLaw) {
    for (double t0 : {0.0, 0.4, -1.3, 2.5}) {
        const auto in = polarized_spin(t0);
        for (int i = 0; i <= 36; ++i) {
            const double t = 2 * pi * i / 36;
            const double c = std::cos((t - t0) / 2);
            EXPECT_NEAR(stern_gerlach_p_up(t, in[0], in[1]), c * c, 1e-12);
        }
        EXPECT_NEAR(stern_gerlach_p_up(t0, in[0], in[1]), 1.0, 1e-12);
        EXPECT_NEAR(stern_gerlach_p_up(t0 + pi, in[0], in[1]), 0.0, 1e-12);
    }
}

TEST(SternGerlach, PolarizedSpinPointsAlongN) {
    for (double t0 : {0.0, 0.7, 2.0}) {
        const auto in = polarized_spin(t0);
        oracle::V v(2);
        v << in[0], in[1];
        const oracle::M n = std::cos(t0) * oracle::pauli_z() + std::sin(t0) * oracle::pauli_y();
        EXPECT_NEAR((v.adjoint() * n * v)(0, 0).real(), 1.0, 1e-12);
    }
}

TEST(SternGerlach, HalfAngleViewIsPiPeriodic) {
    const auto pts = stern_gerlach_sweep(0.3, 37, true);
    ASSERT_EQ(pts.size(), 37u);
    EXPECT_NEAR(pts.back().theta, pi, 1e-15);
    for (const auto &p : pts) {
        const double c = std::cos(p.theta - 0.3);
        EXPECT_NEAR(p.p_up, c * c, 1e-12);
    }
    EXPECT_NEAR(pts.front().p_up, pts.back().p_up, 1e-12);
}

TEST(SternGerlach, UnpolarizedIsHalf) {
    for (int i = 0; i <= 36; ++i) {
        EXPECT_NEAR(stern_gerlach_p_up_unpolarized(2 * pi * i / 36), 0.5, 1e-12);
    }
}

TEST(SternGerlach, RejectsUnnormalizedSpin) {
    try {
        stern_gerlach_p_up(0.0, 1.0, 0.1);
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnnormalizedState);
    }
}

TEST(SternGerlach, HardwareLayerAgrees) {
    const auto in = polarized_spin(0.9);
    EXPECT_NEAR(stern_gerlach_p_up(0.2, in[0], in[1], Layer::Hardware), stern_gerlach_p_up(0.2, in[0], in[1]), 1e-12);
}

TEST(Chsh, BellStateCorrelations) {
    const PureState bell = entanglement_transfer(transfer_input());
    for (double t1 : {0.0, 0.3, 1.2}) {
        for (double t2 : {0.0, -0.5, 2.0}) {
            EXPECT_NEAR(chsh_correlation(bell, t1, t2), std::cos(t1 + t2), 1e-12);
        }
    }
    EXPECT_NEAR(chsh_correlation(bell, 0.0, 0.0), 1.0, 1e-12);
}

TEST(Chsh, ProductStateFactorizes) {
    for (double t1 : {0.0, 0.8}) {
        for (double t2 : {0.4, -2.0}) {
            EXPECT_NEAR(chsh_correlation(new_register(2), t1, t2), std::cos(t1) * std::cos(t2), 1e-12);
        }
    }
}

TEST(Chsh, OptimalAnglesReachTsirelson) {
    const PureState bell = entanglement_transfer(transfer_input());
    const auto &a = kChshOptimalAngles;
    EXPECT_NEAR(chsh_s(bell, a[0], a[1], a[2], a[3]), 2 * std::numbers::sqrt2, 1e-10);
}

TEST(Chsh, BoundsHoldOnRandomInputs) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ang(-pi, pi);
    const PureState bell = entanglement_transfer(transfer_input());
    for (int i = 0; i < 100; ++i) {
        const PureState s(2, oracle::random_state(16, rng));
        EXPECT_LE(std::abs(chsh_correlation(s, ang(rng), ang(rng))), 1.0);
        EXPECT_LE(chsh_s(bell, ang(rng), ang(rng), ang(rng), ang(rng)), 2 * std::numbers::sqrt2 + 1e-9);
    }
}
