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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinnet/gates.hpp"
#include "spinnet/hardware.hpp"

namespace spinnet {

/// U = e^{i global_phase} Rz(theta1) Rx(theta2) Rz(theta3), library rotation
/// convention. global_phase lies in (-pi, pi], theta1 and theta3 in
/// (-pi/2, pi/2], theta2 in [0, pi/2]. When U is diagonal or antidiagonal
/// theta3 is fixed to 0.
struct EulerZXZ {
    double global_phase = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;

    Unitary reconstruct() const;
};

EulerZXZ euler_zxz(const Unitary &u);

enum class SwapVariant { PbsHeavy, NotHeavy };

/// SWAP(spin, mode) of one electron from three CNOTs.
///   PbsHeavy: CNOT(s,k) CNOT(k,s) CNOT(s,k)   (two polarizing beam splitters)
///   NotHeavy: CNOT(k,s) CNOT(s,k) CNOT(k,s)   (two mode-1 spin flips)
Circuit swap_sigma_k_circuit(SwapVariant variant, std::size_t electron = 0, std::size_t n_electrons = 1);

/// How the lowering treats relative phases left by the physical devices.
///
/// The PBS and the mode-1 spin flip realize CNOT only up to a diagonal phase
/// pattern. `Exact` appends phase-trim elements (Rashba z-rotations and AB
/// phases) so that every lowered gate matches its unitary up to a global
/// phase. `Device` emits the bare devices; routing is identical but relative
/// phases are not.
enum class PhaseMode { Exact, Device };

struct LoweringOptions {
    PhaseMode phase = PhaseMode::Exact;
    /// Merge adjacent compatible elements and drop identities afterwards.
    bool simplify = true;
};

struct LoweredNetlist {
    Netlist netlist;
    /// netlist_unitary = e^{i global_phase} circuit_unitary. Only set in Exact mode.
    std::optional<double> global_phase;
};

LoweredNetlist lower_with_ledger(const Circuit &circuit, const LoweringOptions &options = {});
Netlist lower_to_netlist(const Circuit &circuit, const LoweringOptions &options = {});

/// Merges adjacent elements of the same kind on the same wires (angles add)
/// and drops elements that act as the identity up to a global phase.
Netlist simplify_netlist(const Netlist &netlist);

/// Number of non-detector elements.
std::size_t hardware_cost(const Netlist &netlist);

// ---------------------------------------------------------------------------
// Peephole rewriting.
//
// Patterns bind qubit "slots" (distinct slot ids must bind distinct qubits) and
// optionally capture angles into numbered variables. Replacement angles are
// affine in the captured variables.

struct PatternOp {
    GateKind kind = GateKind::Identity;
    std::vector<std::size_t> slots;
    /// Exact angle to match (within 1e-12), or a capture variable. At most one.
    std::optional<double> angle;
    std::optional<std::size_t> capture;
};

struct ReplacementOp {
    GateKind kind = GateKind::Identity;
    std::vector<std::size_t> slots;
    /// angle = offset + sum(coefficient * captured[var]); used iff kind takes an angle.
    std::vector<std::pair<std::size_t, double>> terms;
    double offset = 0.0;
};

struct RewriteRule {
    std::string name;
    std::vector<PatternOp> pattern;
    std::vector<ReplacementOp> replacement;
};

/// Builds a rule after checking that pattern and replacement agree up to a
/// global phase on sampled angles. Throws InvalidArgument otherwise.
RewriteRule make_rule(std::string name, std::vector<PatternOp> pattern, std::vector<ReplacementOp> replacement);

struct RewriteOptions {
    std::size_t max_iterations = 1000;
    /// Re-check the circuit unitary after every rule application.
    bool verify_each_step = false;
};

/// Repeated left-to-right single passes until no rule fires. Throws
/// NonTerminatingRules when `max_iterations` passes still change the circuit.
Circuit peephole_rewrite(const Circuit &circuit, const std::vector<RewriteRule> &rules,
                         const RewriteOptions &options = {});

namespace rules {

/// H H, NOT NOT, CNOT CNOT (same wires) -> nothing.
std::vector<RewriteRule> cancellations();
/// SWAP(a,b) -> CNOT(a,b) CNOT(b,a) CNOT(a,b).
RewriteRule swap_to_cnots();
/// P(phi) -> Rz(-phi/2).
RewriteRule phase_to_rz();
/// H -> Rz(pi/4) Rx(pi/4) Rz(pi/4).
RewriteRule hadamard_to_zxz();
/// CNOT(a,b) -> H(b) C(pi)(a,b) H(b).
RewriteRule cnot_to_cphase();
/// Rx(x) Rx(y) -> Rx(x+y), and the same for Rz.
std::vector<RewriteRule> rotation_merges();

}  // namespace rules

}  // namespace spinnet
