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
#include "spinnet/gates.hpp"
#include "spinnet/hardware.hpp"

using namespace spinnet;
using std::numbers::pi;

namespace {

// Qubit order inside one electron: spin is flat qubit 0, mode is flat qubit 1.
oracle::M one_electron(const oracle::M &on_spin, const oracle::M &on_mode) {
    return oracle::kron(on_mode, on_spin);
}

oracle::M proj(int k) {
    return oracle::unit(k, k);
}

}  // namespace

TEST(Elements, UnitariesMatchPhysicalPictures) {
    const oracle::M i2 = oracle::M::Identity(2, 2);
    const oracle::M x = oracle::pauli_x();
    const oracle::M z = oracle::pauli_z();
    EXPECT_LT(oracle::max_abs(element_unitary(beam_splitter(0, 0.3), 1) - one_electron(i2, oracle::rot(x, 0.3))),
              1e-15);
    oracle::M p = i2;
    p(1, 1) = std::polar(1.0, 0.8);
    EXPECT_LT(oracle::max_abs(element_unitary(ab_phase(0, 0.8), 1) - one_electron(i2, p)), 1e-15);
    EXPECT_LT(oracle::max_abs(element_unitary(rashba(0, Axis::Z, 0.5), 1) - one_electron(oracle::rot(z, 0.5), i2)),
              1e-15);
    // Mode-1-only region: identity on mode 0, rotation on mode 1.
    const oracle::M masked = one_electron(i2, proj(0)) + one_electron(oracle::rot(x, 0.7), proj(1));
    EXPECT_LT(oracle::max_abs(element_unitary(rashba(0, Axis::X, 0.7, ModeMask::Mode1Only), 1) - masked), 1e-15);
    // Coulomb: phase on k0 = k1 = 1 (flat qubits 1 and 3).
    oracle::M c = oracle::M::Identity(16, 16);
    for (int b = 0; b < 16; ++b) {
        if ((b & 2) && (b & 8)) {
            c(b, b) = std::polar(1.0, 1.3);
        }
    }
    EXPECT_LT(oracle::max_abs(element_unitary(coulomb_coupler(0, 1, 1.3), 2) - c), 1e-15);
}

TEST(Elements, ValidationErrors) {
    Netlist n{.n_electrons = 2, .elements = {}};
    EXPECT_THROW(n.add(coulomb_coupler(1, 1, 0.2)), Error);
    EXPECT_THROW(n.add(beam_splitter(2, 0.2)), Error);
    EXPECT_THROW(n.add(ab_phase(0, std::nan(""))), Error);
}

TEST(Netlist, DetectorHasNoUnitary) {
    Netlist n{.n_electrons = 1, .elements = {}};
    n.add(beam_splitter(0, pi / 4));
    n.add(detector(0, DetectorTarget::Mode));
    try {
        netlist_unitary(n);
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAUnitaryElement);
        EXPECT_STREQ(error_code_name(e.code()), "must-use-simulate");
    }
}

TEST(Netlist, ApplyMatchesUnitary) {
    std::mt19937_64 rng(5);
    Netlist n{.n_electrons = 2, .elements = {}};
    n.add(beam_splitter(0, 0.4));
    n.add(rashba(1, Axis::X, -0.2, ModeMask::Mode1Only));
    n.add(coulomb_coupler(1, 0, 2.1));
    n.add(ab_phase(1, 0.9));
    n.add(rashba(0, Axis::Z, 1.4));
    const oracle::V v = oracle::random_state(16, rng);
    const PureState out = apply_netlist(n, PureState(2, v));
    EXPECT_LT((out.amplitudes() - netlist_unitary(n) * v).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(PhysicalAngles, Maps) {
    HardwareParams p;
    p.flux = 0.25;
    p.tunneling_integral = 0.6;
    p.alpha = 2.0;
    p.field = 0.5;
    p.length = 3.0;
    EXPECT_NEAR(physical_to_angle(p, AngleSource::AB), pi / 2, 1e-15);
    EXPECT_NEAR(physical_to_angle(p, AngleSource::BS), -0.6, 1e-15);
    EXPECT_NEAR(physical_to_angle(p, AngleSource::Rashba), 3.0, 1e-15);
}

TEST(Pbs, HasFourElementsAndRoutes) {
    const Netlist pbs = pbs_hardware_netlist();
    EXPECT_EQ(pbs.elements.size(), 4u);
    const PbsEquivalenceReport r = pbs_equivalence_report(1e-10);
    EXPECT_TRUE(r.routing_ok);
    for (int s = 0; s < 2; ++s) {
        for (int k = 0; k < 2; ++k) {
            EXPECT_NEAR(r.routing[s][k], 1.0, 1e-10);
        }
    }
}

TEST(Pbs, ResidualPhasesAreFrozen) {
    const PbsEquivalenceReport r = pbs_equivalence_report(1e-10);
    EXPECT_FALSE(r.global_phase_equal);
    EXPECT_TRUE(r.diagonal_equal);
    EXPECT_TRUE(r.trimmed_global_phase_equal);
    const std::array<double, 4> expected = {0.0, pi / 2, pi, pi / 2};
    for (int b = 0; b < 4; ++b) {
        EXPECT_NEAR(std::abs(std::remainder(r.residual_phases[b] - expected[b], 2 * pi)), 0.0, 1e-10) << b;
    }
}

TEST(Pbs, OracleProductOfFourElements) {
    // Hand-built: BS(pi/4), Rashba z(pi/2) on mode 1, AB(pi/2), BS(pi/4).
    const oracle::M i2 = oracle::M::Identity(2, 2);
    const oracle::M bs = one_electron(i2, oracle::rot(oracle::pauli_x(), pi / 4));
    const oracle::M rz1 = one_electron(i2, proj(0)) + one_electron(oracle::rot(oracle::pauli_z(), pi / 2), proj(1));
    oracle::M ab = i2;
    ab(1, 1) = oracle::C(0, 1);
    const oracle::M u = bs * one_electron(i2, ab) * rz1 * bs;
    // CNOT(s -> k) times diag(1, i, -1, i) over index s + 2k.
    oracle::M cnot = oracle::M::Zero(4, 4);
    cnot(0, 0) = cnot(2, 2) = 1.0;
    cnot(3, 1) = cnot(1, 3) = 1.0;
    oracle::M d = oracle::M::Zero(4, 4);
    d(0, 0) = 1.0;
    d(1, 1) = oracle::C(0, 1);
    d(2, 2) = -1.0;
    d(3, 3) = oracle::C(0, 1);
    EXPECT_LT(oracle::max_abs(u - cnot * d), 1e-15);
    EXPECT_LT(oracle::max_abs(netlist_unitary(pbs_hardware_netlist()) - u), 1e-15);
    EXPECT_LT(oracle::max_abs(pbs_behavioral() - cnot), 1e-15);
}

TEST(SimulateShot, FullDetectorReadsBasisState) {
    Netlist n{.n_electrons = 2, .elements = {}};
    n.add(beam_splitter(1, pi / 2));
    n.add(detector(1, DetectorTarget::Full));
    n.add(detector(0, DetectorTarget::Mode));
    const ShotResult r = simulate_shot(n, new_register(2), 7);
    ASSERT_EQ(r.records.size(), 2u);
    EXPECT_EQ(r.outcome_key(), "01|0");
    EXPECT_NEAR(r.records[0].probability, 1.0, 1e-15);
}

TEST(SimulateShot, DeterministicAndBalanced) {
    Netlist n{.n_electrons = 1, .elements = {}};
    n.add(beam_splitter(0, pi / 4));
    n.add(detector(0, DetectorTarget::Mode));
    int ones = 0;
    for (std::uint64_t s = 0; s < 4000; ++s) {
        const ShotResult a = simulate_shot(n, new_register(1), s);
        EXPECT_EQ(a.outcome_key(), simulate_shot(n, new_register(1), s).outcome_key());
        ones += a.records[0].outcome[0];
    }
    EXPECT_NEAR(ones / 4000.0, 0.5, 0.03);
}
