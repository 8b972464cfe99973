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


#include "spinnet/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinnet/errors.hpp"
#include "spinnet/rng.hpp"

namespace spinnet {

namespace {

std::size_t dim_for(std::size_t n_electrons) {
    return std::size_t{1} << (2 * n_electrons);
}

void check_targets(std::span<const QubitRef> targets, std::size_t n_electrons) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].electron >= n_electrons) {
            throw Error(ErrorCode::TargetOutOfRange,
                        "qubit " + to_string(targets[i]) + " is outside a register of " +
                            std::to_string(n_electrons) + " electrons");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw Error(ErrorCode::DuplicateTargets, "qubit " + to_string(targets[i]) + " targeted twice");
            }
        }
    }
}

// Gathers the bits of `b` at the flat positions of `targets` into a compact
// index with targets[0] as the least significant bit.
std::size_t gather(std::size_t b, std::span<const QubitRef> targets) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        out |= ((b >> targets[i].flat()) & 1u) << i;
    }
    return out;
}

std::size_t scatter(std::size_t b, std::size_t local, std::span<const QubitRef> targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        std::size_t bit = std::size_t{1} << targets[i].flat();
        b = ((local >> i) & 1u) ? (b | bit) : (b & ~bit);
    }
    return b;
}

}  // namespace

std::string to_string(const QubitRef &q) {
    return (q.dof == Dof::Spin ? "s" : "k") + std::to_string(q.electron);
}

PureState::PureState(std::size_t n_electrons, Vector amplitudes)
    : n_electrons_(n_electrons), amplitudes_(std::move(amplitudes)) {
    if (n_electrons == 0 || n_electrons > kMaxElectrons) {
        throw Error(ErrorCode::InvalidRegister,
                    "register must hold 1.." + std::to_string(kMaxElectrons) + " electrons, got " +
                        std::to_string(n_electrons));
    }
    if (static_cast<std::size_t>(amplitudes_.size()) != dim_for(n_electrons)) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude vector length does not equal 4^n_electrons");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) {
        throw Error(ErrorCode::UnnormalizedState, "state is not normalized");
    }
}

PureState PureState::basis(std::size_t n_electrons, std::size_t basis_index) {
    if (n_electrons == 0 || n_electrons > kMaxElectrons) {
        throw Error(ErrorCode::InvalidRegister, "invalid register size");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_for(n_electrons)));
    if (basis_index >= static_cast<std::size_t>(v.size())) {
        throw Error(ErrorCode::TargetOutOfRange, "basis index out of range");
    }
    v(static_cast<Eigen::Index>(basis_index)) = 1.0;
    return PureState(n_electrons, std::move(v));
}

std::string MeasurementRecord::outcome_string() const {
    std::string s;
    for (int bit : outcome) {
        s.push_back(bit ? '1' : '0');
    }
    return s;
}

PureState new_register(std::size_t n_electrons) {
    return PureState::basis(n_electrons, 0);
}

bool is_unitary(const Matrix &m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return false;
    }
    Matrix d = m * m.adjoint() - Matrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

PureState apply_gate(const PureState &state, const Unitary &gate, std::span<const QubitRef> targets) {
    if (targets.empty() || targets.size() > 2) {
        throw Error(ErrorCode::InvalidArgument, "apply_gate supports 1 or 2 targets");
    }
    check_targets(targets, state.n_electrons());
    const std::size_t local_dim = std::size_t{1} << targets.size();
    if (static_cast<std::size_t>(gate.rows()) != local_dim || gate.rows() != gate.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "gate dimension does not match number of targets");
    }
    if (!is_unitary(gate)) {
        throw Error(ErrorCode::NonUnitary, "gate is not unitary");
    }

    std::size_t target_mask = 0;
    for (const auto &t : targets) {
        target_mask |= std::size_t{1} << t.flat();
    }
    const Vector &in = state.amplitudes();
    Vector out(in.size());
    std::vector<Complex> local(local_dim);
    for (std::size_t base = 0; base < state.dim(); ++base) {
        if (base & target_mask) {
            continue;
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            local[r] = in(static_cast<Eigen::Index>(scatter(base, r, targets)));
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc = 0;
            for (std::size_t c = 0; c < local_dim; ++c) {
                acc += gate(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * local[c];
            }
            out(static_cast<Eigen::Index>(scatter(base, r, targets))) = acc;
        }
    }
    out /= out.norm();
    return PureState(state.n_electrons(), std::move(out));
}

PureState apply_gate(const PureState &state, const Unitary &gate, std::initializer_list<QubitRef> targets) {
    return apply_gate(state, gate, std::span<const QubitRef>(targets.begin(), targets.size()));
}

Unitary embed(const Unitary &gate, std::span<const QubitRef> targets, std::size_t n_electrons) {
    if (n_electrons == 0 || n_electrons > kMaxElectrons) {
        throw Error(ErrorCode::InvalidRegister, "invalid register size");
    }
    check_targets(targets, n_electrons);
    const std::size_t local_dim = std::size_t{1} << targets.size();
    if (static_cast<std::size_t>(gate.rows()) != local_dim) {
        throw Error(ErrorCode::DimensionMismatch, "gate dimension does not match number of targets");
    }
    const std::size_t dim = dim_for(n_electrons);
    Unitary u = Unitary::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t c_local = gather(col, targets);
        for (std::size_t r_local = 0; r_local < local_dim; ++r_local) {
            Complex g = gate(static_cast<Eigen::Index>(r_local), static_cast<Eigen::Index>(c_local));
            if (g != Complex{0.0, 0.0}) {
                u(static_cast<Eigen::Index>(scatter(col, r_local, targets)), static_cast<Eigen::Index>(col)) = g;
            }
        }
    }
    return u;
}

PureState apply_unitary(const PureState &state, const Unitary &u) {
    if (static_cast<std::size_t>(u.rows()) != state.dim() || u.rows() != u.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "unitary dimension does not match the register");
    }
    Vector out = u * state.amplitudes();
    out /= out.norm();
    return PureState(state.n_electrons(), std::move(out));
}

std::vector<double> outcome_probabilities(const PureState &state, std::span<const QubitRef> targets) {
    if (targets.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty measurement target list");
    }
    check_targets(targets, state.n_electrons());
    std::vector<double> probs(std::size_t{1} << targets.size(), 0.0);
    for (std::size_t b = 0; b < state.dim(); ++b) {
        probs[gather(b, targets)] += std::norm(state[b]);
    }
    return probs;
}

MeasurementRecord project(const PureState &state, std::span<const QubitRef> targets, std::span<const int> outcome) {
    if (targets.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty measurement target list");
    }
    check_targets(targets, state.n_electrons());
    if (outcome.size() != targets.size()) {
        throw Error(ErrorCode::InvalidArgument, "outcome length does not match targets");
    }
    std::size_t want = 0;
    for (std::size_t i = 0; i < outcome.size(); ++i) {
        want |= static_cast<std::size_t>(outcome[i] != 0) << i;
    }
    Vector projected = Vector::Zero(state.amplitudes().size());
    for (std::size_t b = 0; b < state.dim(); ++b) {
        if (gather(b, targets) == want) {
            projected(static_cast<Eigen::Index>(b)) = state[b];
        }
    }
    const double p = projected.squaredNorm();
    if (p <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "projection onto a zero-probability outcome");
    }
    projected /= std::sqrt(p);
    MeasurementRecord rec{
        .measured = {targets.begin(), targets.end()},
        .outcome = {},
        .probability = p,
        .post_state = PureState(state.n_electrons(), std::move(projected)),
        .seed = 0,
    };
    for (std::size_t i = 0; i < targets.size(); ++i) {
        rec.outcome.push_back(static_cast<int>((want >> i) & 1u));
    }
    return rec;
}

MeasurementRecord measure(const PureState &state, std::span<const QubitRef> targets, std::uint64_t seed) {
    std::vector<double> probs = outcome_probabilities(state, targets);
    Rng rng(seed);
    double u = rng.uniform();
    std::size_t chosen = probs.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) {
            continue;
        }
        acc += probs[i];
        chosen = i;
        if (u < acc) {
            break;
        }
    }
    std::vector<int> bits;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        bits.push_back(static_cast<int>((chosen >> i) & 1u));
    }
    MeasurementRecord rec = project(state, targets, bits);
    rec.seed = seed;
    return rec;
}

bool equiv_global_phase(const Matrix &u, const Matrix &v, double tol, double *phase_out) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "equiv_global_phase: dimension mismatch");
    }
    Eigen::Index r = 0, c = 0;
    v.cwiseAbs().maxCoeff(&r, &c);
    double lambda = 0.0;
    if (std::abs(v(r, c)) > 0.0 && std::abs(u(r, c)) > 0.0) {
        lambda = std::arg(u(r, c) / v(r, c));
    }
    if (phase_out != nullptr) {
        *phase_out = lambda;
    }
    return (u - std::polar(1.0, lambda) * v).cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix reduced_density(const PureState &state, std::span<const QubitRef> keep) {
    if (keep.empty() || keep.size() >= state.n_qubits()) {
        throw Error(ErrorCode::InvalidArgument, "reduced_density: keep must be a nonempty proper subset");
    }
    check_targets(keep, state.n_electrons());

    std::vector<QubitRef> traced;
    for (std::size_t q = 0; q < state.n_qubits(); ++q) {
        QubitRef ref = QubitRef::from_flat(q);
        if (std::find(keep.begin(), keep.end(), ref) == keep.end()) {
            traced.push_back(ref);
        }
    }
    // rho = A A^dagger with A[kept, traced] = amplitude.
    const Eigen::Index kd = Eigen::Index{1} << keep.size();
    const Eigen::Index td = Eigen::Index{1} << traced.size();
    Matrix a = Matrix::Zero(kd, td);
    for (std::size_t b = 0; b < state.dim(); ++b) {
        a(static_cast<Eigen::Index>(gather(b, keep)), static_cast<Eigen::Index>(gather(b, traced))) = state[b];
    }
    return a * a.adjoint();
}

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::remainder(a, two_pi);
    if (w <= -std::numbers::pi + 1e-15) {
        w += two_pi;
    }
    return w;
}

double fidelity(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "fidelity: dimension mismatch");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace spinnet
