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


#include "spinnet/gates.hpp"

#include <cmath>
#include <numbers>

#include "spinnet/errors.hpp"
#include "spinnet/rng.hpp"

namespace spinnet {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::vector<QubitRef> lsb_first_targets(const GateOp &op) {
    std::vector<QubitRef> t = op.targets;
    if (t.size() == 2) {
        std::swap(t[0], t[1]);
    }
    return t;
}

}  // namespace

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::P:
            return "p";
        case GateKind::H:
            return "h";
        case GateKind::Rx:
            return "rx";
        case GateKind::Rz:
            return "rz";
        case GateKind::NOT:
            return "not";
        case GateKind::Identity:
            return "id";
        case GateKind::Cphase:
            return "cphase";
        case GateKind::CNOT:
            return "cnot";
        case GateKind::SWAP:
            return "swap";
    }
    return "?";
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::Cphase:
        case GateKind::CNOT:
        case GateKind::SWAP:
            return 2;
        default:
            return 1;
    }
}

bool gate_takes_angle(GateKind kind) {
    return kind == GateKind::P || kind == GateKind::Rx || kind == GateKind::Rz || kind == GateKind::Cphase;
}

Unitary gate_unitary(GateKind kind, std::optional<double> angle) {
    if (gate_takes_angle(kind) != angle.has_value()) {
        throw Error(ErrorCode::InvalidArgument, std::string("gate '") + gate_name(kind) +
                                                    (angle ? "' takes no angle" : "' requires an angle"));
    }
    if (angle && !std::isfinite(*angle)) {
        throw Error(ErrorCode::InvalidArgument, "gate angle must be finite");
    }
    const Matrix id2 = Matrix::Identity(2, 2);
    switch (kind) {
        case GateKind::P: {
            Matrix m = id2;
            m(1, 1) = std::polar(1.0, *angle);
            return m;
        }
        case GateKind::H:
            return (pauli_x() + pauli_z()) / std::numbers::sqrt2;
        case GateKind::Rx:
            return std::cos(*angle) * id2 + kI * std::sin(*angle) * pauli_x();
        case GateKind::Rz:
            return std::cos(*angle) * id2 + kI * std::sin(*angle) * pauli_z();
        case GateKind::NOT:
            return pauli_x();
        case GateKind::Identity:
            return id2;
        case GateKind::Cphase: {
            Matrix m = Matrix::Identity(4, 4);
            m(3, 3) = std::polar(1.0, *angle);
            return m;
        }
        case GateKind::CNOT: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
            return m;
        }
        case GateKind::SWAP: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
            return m;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown gate kind");
}

void GateOp::validate() const {
    if (targets.size() != gate_arity(kind)) {
        throw Error(ErrorCode::InvalidArgument, std::string("gate '") + gate_name(kind) + "' expects " +
                                                    std::to_string(gate_arity(kind)) + " target(s)");
    }
    if (gate_takes_angle(kind) != angle.has_value()) {
        throw Error(ErrorCode::InvalidArgument, std::string("gate '") + gate_name(kind) + "' angle mismatch");
    }
    if (angle && !std::isfinite(*angle)) {
        throw Error(ErrorCode::InvalidArgument, "gate angle must be finite");
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw Error(ErrorCode::DuplicateTargets, std::string("gate '") + gate_name(kind) + "' has duplicate targets");
    }
}

GateOp make_gate(GateKind kind, QubitRef target) {
    GateOp op{kind, std::nullopt, {target}};
    op.validate();
    return op;
}

GateOp make_gate(GateKind kind, double angle, QubitRef target) {
    GateOp op{kind, angle, {target}};
    op.validate();
    return op;
}

GateOp make_gate(GateKind kind, QubitRef a, QubitRef b) {
    GateOp op{kind, std::nullopt, {a, b}};
    op.validate();
    return op;
}

GateOp make_gate(GateKind kind, double angle, QubitRef a, QubitRef b) {
    GateOp op{kind, angle, {a, b}};
    op.validate();
    return op;
}

Unitary embed_op(const GateOp &op, std::size_t n_electrons) {
    op.validate();
    std::vector<QubitRef> t = lsb_first_targets(op);
    return embed(op.matrix(), t, n_electrons);
}

Circuit &Circuit::add(GateOp op) {
    op.validate();
    ops.push_back(std::move(op));
    return *this;
}

void Circuit::validate() const {
    if (n_electrons == 0 || n_electrons > kMaxElectrons) {
        throw Error(ErrorCode::InvalidRegister, "circuit register size out of range");
    }
    for (const auto &op : ops) {
        op.validate();
        for (const auto &t : op.targets) {
            if (t.electron >= n_electrons) {
                throw Error(ErrorCode::TargetOutOfRange, "circuit target " + to_string(t) + " out of range");
            }
        }
    }
}

Unitary circuit_unitary(const Circuit &circuit) {
    circuit.validate();
    const Eigen::Index dim = Eigen::Index{1} << (2 * circuit.n_electrons);
    Unitary u = Unitary::Identity(dim, dim);
    for (const auto &op : circuit.ops) {
        u = embed_op(op, circuit.n_electrons) * u;
    }
    return u;
}

PureState run_circuit(const Circuit &circuit, const PureState &input) {
    circuit.validate();
    if (input.n_electrons() != circuit.n_electrons) {
        throw Error(ErrorCode::DimensionMismatch, "circuit and state register sizes differ");
    }
    PureState s = input;
    for (const auto &op : circuit.ops) {
        if (op.kind == GateKind::Identity) {
            continue;
        }
        std::vector<QubitRef> t = lsb_first_targets(op);
        s = apply_gate(s, op.matrix(), t);
    }
    return s;
}

bool IdentityReport::all_passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return !checks.empty();
}

IdentityReport verify_identities(double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "verify_identities: tol must be positive");
    }
    using std::numbers::pi;
    std::vector<double> angles = {0.0, pi / 7, pi / 4, 1.0, pi / 2};
    Rng rng(20260101);
    for (int i = 0; i < 10; ++i) {
        angles.push_back((2.0 * rng.uniform() - 1.0) * pi);
    }

    const Matrix h = gate_unitary(GateKind::H);
    const Matrix id2 = Matrix::Identity(2, 2);
    IdentityReport report;
    auto record = [&](std::string name, double err) {
        report.checks.push_back({std::move(name), err <= tol, err});
    };
    auto maxabs = [](const Matrix &m) { return m.cwiseAbs().maxCoeff(); };

    // (a) P(phi) = e^{i phi/2} Rz(-phi/2)
    double err = 0.0;
    for (double phi : angles) {
        Matrix rhs = std::polar(1.0, phi / 2) * gate_unitary(GateKind::Rz, -phi / 2);
        err = std::max(err, maxabs(gate_unitary(GateKind::P, phi) - rhs));
    }
    record("P(phi) = e^{i phi/2} Rz(-phi/2)", err);

    // (b) H = -i Rz(pi/4) Rx(pi/4) Rz(pi/4)
    Matrix zxz = gate_unitary(GateKind::Rz, pi / 4) * gate_unitary(GateKind::Rx, pi / 4) *
                 gate_unitary(GateKind::Rz, pi / 4);
    record("H = -i Rz(pi/4) Rx(pi/4) Rz(pi/4)", maxabs(h - (-kI) * zxz));

    // (c) e^{i theta sigma_x} = H e^{i theta sigma_z} H
    err = 0.0;
    for (double theta : angles) {
        err = std::max(err,
                       maxabs(gate_unitary(GateKind::Rx, theta) - h * gate_unitary(GateKind::Rz, theta) * h));
    }
    record("exp(i theta X) = H exp(i theta Z) H", err);

    // (d) sigma_x = -i Rx(pi/2)
    record("NOT = -i Rx(pi/2)", maxabs(gate_unitary(GateKind::NOT) - (-kI) * gate_unitary(GateKind::Rx, pi / 2)));

    // (e) CNOT = (1 (x) H) C(pi) (1 (x) H)
    Matrix ih = kron(id2, h);
    record("CNOT = (1 x H) C(pi) (1 x H)",
           maxabs(gate_unitary(GateKind::CNOT) - ih * gate_unitary(GateKind::Cphase, pi) * ih));

    // (f) SWAP from three CNOTs, both orientations.
    Matrix cnot_ij = gate_unitary(GateKind::CNOT);
    Matrix swap = gate_unitary(GateKind::SWAP);
    Matrix cnot_ji = swap * cnot_ij * swap;
    double e1 = maxabs(swap - cnot_ij * cnot_ji * cnot_ij);
    double e2 = maxabs(swap - cnot_ji * cnot_ij * cnot_ji);
    record("SWAP = CNOT(i,j)CNOT(j,i)CNOT(i,j) = CNOT(j,i)CNOT(i,j)CNOT(j,i)", std::max(e1, e2));

    return report;
}

}  // namespace spinnet
