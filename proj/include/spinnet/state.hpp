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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinnet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense unitary on 2^m qubits. The unitarity invariant is checked at every
/// API boundary that accepts one (see `is_unitary`).
using Unitary = Matrix;
using DensityMatrix = Matrix;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kMatrixTol = 1e-10;
inline constexpr std::size_t kMaxElectrons = 10;

enum class Dof : std::uint8_t { Spin = 0, Mode = 1 };

/// One of the two qubits carried by an electron.
///
/// Flat qubit index is 2*electron + dof, so electron e occupies the contiguous
/// bit pair (2e, 2e+1) with spin as the lower bit.
struct QubitRef {
    std::size_t electron = 0;
    Dof dof = Dof::Spin;

    constexpr std::size_t flat() const noexcept {
        return 2 * electron + static_cast<std::size_t>(dof);
    }
    static constexpr QubitRef from_flat(std::size_t q) noexcept {
        return QubitRef{q / 2, (q % 2 == 0) ? Dof::Spin : Dof::Mode};
    }
    friend constexpr bool operator==(const QubitRef &, const QubitRef &) = default;
};

constexpr QubitRef spin(std::size_t electron) noexcept {
    return {electron, Dof::Spin};
}
constexpr QubitRef mode(std::size_t electron) noexcept {
    return {electron, Dof::Mode};
}

/// "s0", "k3", ...
std::string to_string(const QubitRef &q);

/// Normalized amplitude vector over 2 qubits per electron.
///
/// Basis index b stores qubit j in bit j (qubit 0 least significant). Spin up
/// and mode 0 are bit value 0; spin down and mode 1 are bit value 1.
class PureState {
   public:
    /// Validates dimension (4^n) and normalization within `kNormTol`.
    PureState(std::size_t n_electrons, Vector amplitudes);

    std::size_t n_electrons() const noexcept {
        return n_electrons_;
    }
    std::size_t n_qubits() const noexcept {
        return 2 * n_electrons_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    const Vector &amplitudes() const noexcept {
        return amplitudes_;
    }
    Complex operator[](std::size_t basis_index) const {
        return amplitudes_(static_cast<Eigen::Index>(basis_index));
    }
    double norm() const {
        return amplitudes_.norm();
    }

    /// Computational basis state |basis_index>.
    static PureState basis(std::size_t n_electrons, std::size_t basis_index);

   private:
    std::size_t n_electrons_;
    Vector amplitudes_;
};

struct MeasurementRecord {
    std::vector<QubitRef> measured;
    /// One bit per measured qubit, in the order of `measured`.
    std::vector<int> outcome;
    double probability = 0.0;
    PureState post_state;
    std::uint64_t seed = 0;

    std::string outcome_string() const;
};

/// Every electron in |up; 0>.
PureState new_register(std::size_t n_electrons);

bool is_unitary(const Matrix &m, double tol = kMatrixTol);

/// Applies a 1- or 2-qubit gate. The first target is the least significant
/// bit of the gate's own basis.
PureState apply_gate(const PureState &state, const Unitary &gate, std::span<const QubitRef> targets);
PureState apply_gate(const PureState &state, const Unitary &gate, std::initializer_list<QubitRef> targets);

/// Full-register operator for `gate` on `targets` (identity elsewhere).
Unitary embed(const Unitary &gate, std::span<const QubitRef> targets, std::size_t n_electrons);

/// Applies a full-register unitary of dimension 4^n.
PureState apply_unitary(const PureState &state, const Unitary &u);

/// Born probability of each outcome bit string on `targets`, indexed with
/// targets[0] as the least significant bit.
std::vector<double> outcome_probabilities(const PureState &state, std::span<const QubitRef> targets);

/// Projects onto a fixed outcome. Throws if the outcome has zero probability.
MeasurementRecord project(const PureState &state, std::span<const QubitRef> targets, std::span<const int> outcome);

/// Samples a projective computational-basis measurement with the Born rule.
MeasurementRecord measure(const PureState &state, std::span<const QubitRef> targets, std::uint64_t seed);

/// True iff max|U - e^{i lambda} V| <= tol, with lambda taken from the
/// largest-magnitude entry of V. `phase_out` receives lambda when non-null.
bool equiv_global_phase(const Matrix &u, const Matrix &v, double tol, double *phase_out = nullptr);

/// Partial trace keeping `keep`; keep[0] becomes the least significant bit.
DensityMatrix reduced_density(const PureState &state, std::span<const QubitRef> keep);

double fidelity(const PureState &a, const PureState &b);

/// Maps an angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace spinnet
