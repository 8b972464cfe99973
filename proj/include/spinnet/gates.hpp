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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinnet/state.hpp"

namespace spinnet {

// Rotation convention used throughout the library:
//
//     Rx(theta) = exp(+i theta sigma_x) = cos(theta) I + i sin(theta) sigma_x
//     Rz(theta) = exp(+i theta sigma_z) = cos(theta) I + i sin(theta) sigma_z
//
// Note the sign and the missing factor 1/2 relative to the common
// exp(-i theta sigma / 2). A 50/50 beam splitter is Rx(pi/4), and
// NOT = sigma_x = -i Rx(pi/2).

enum class GateKind : std::uint8_t { P, H, Rx, Rz, NOT, Identity, Cphase, CNOT, SWAP };

const char *gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);
bool gate_takes_angle(GateKind kind);

/// Matrix of a gate kind in textbook ket order: for two-qubit kinds the basis
/// is |x y> with x the first qubit (the control of CNOT) as the most
/// significant bit, so CNOT = diag(1, 1, sigma_x). `embed_op` takes care of
/// the register's least-significant-first convention.
Unitary gate_unitary(GateKind kind, std::optional<double> angle = std::nullopt);

struct GateOp {
    GateKind kind = GateKind::Identity;
    std::optional<double> angle;
    /// Control first for CNOT and Cphase.
    std::vector<QubitRef> targets;

    /// Throws InvalidArgument if arity or angle presence is wrong.
    void validate() const;
    Unitary matrix() const {
        return gate_unitary(kind, angle);
    }

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

GateOp make_gate(GateKind kind, QubitRef target);
GateOp make_gate(GateKind kind, double angle, QubitRef target);
GateOp make_gate(GateKind kind, QubitRef a, QubitRef b);
GateOp make_gate(GateKind kind, double angle, QubitRef a, QubitRef b);

/// Full-register unitary of one op.
Unitary embed_op(const GateOp &op, std::size_t n_electrons);

/// Time-ordered gate list; ops.front() acts first.
struct Circuit {
    std::size_t n_electrons = 1;
    std::vector<GateOp> ops;

    Circuit &add(GateOp op);
    void validate() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// Ordered product of embedded gate unitaries, first op rightmost.
Unitary circuit_unitary(const Circuit &circuit);

/// Runs the circuit gate by gate on a state vector.
PureState run_circuit(const Circuit &circuit, const PureState &input);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

/// The six gate identities relating {P, H} and {Rx, Rz}, CNOT and C(phi),
/// and the two three-CNOT SWAP constructions. Compared with exact phases.
IdentityReport verify_identities(double tol);

}  // namespace spinnet
