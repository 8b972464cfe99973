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


#include "spinnet/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinnet/errors.hpp"
#include "spinnet/hardware.hpp"
#include "spinnet/metrics.hpp"
#include "spinnet/synthesis.hpp"

namespace spinnet {

namespace {

using std::numbers::pi;

void require_two_electrons(const PureState &state, const char *what) {
    if (state.n_electrons() != 2) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs a two-electron register");
    }
}

}  // namespace

const char *bell_state_name(BellState b) {
    switch (b) {
        case BellState::PhiPlus:
            return "phi+";
        case BellState::PhiMinus:
            return "phi-";
        case BellState::PsiPlus:
            return "psi+";
        case BellState::PsiMinus:
            return "psi-";
    }
    return "?";
}

Vector bell_vector(BellState b) {
    // Index = bit(first) + 2 * bit(second).
    Vector v = Vector::Zero(4);
    const double r = 1.0 / std::numbers::sqrt2;
    switch (b) {
        case BellState::PhiPlus:
            v(0) = r;
            v(3) = r;
            break;
        case BellState::PhiMinus:
            v(0) = r;
            v(3) = -r;
            break;
        case BellState::PsiPlus:
            v(1) = r;
            v(2) = r;
            break;
        case BellState::PsiMinus:
            v(2) = r;
            v(1) = -r;
            break;
    }
    return v;
}

BellState bell_from_bits(int b1, int b2) {
    if (b2 == 0) {
        return b1 == 0 ? BellState::PhiPlus : BellState::PhiMinus;
    }
    return b1 == 0 ? BellState::PsiPlus : BellState::PsiMinus;
}

PureState run_on_layer(const Circuit &circuit, const PureState &input, Layer layer) {
    if (layer == Layer::Gate) {
        return run_circuit(circuit, input);
    }
    return apply_netlist(lower_to_netlist(circuit), input);
}

PureState spin_mode_entangler(const PureState &state, std::size_t electron, Layer layer) {
    Circuit c{.n_electrons = state.n_electrons(), .ops = {}};
    c.add(make_gate(GateKind::Rx, pi / 4, mode(electron)));
    c.add(make_gate(GateKind::CNOT, mode(electron), spin(electron)));
    return run_on_layer(c, state, layer);
}

ProtocolResult mode_mode_entangler(double phi, Layer layer) {
    Circuit c{.n_electrons = 2, .ops = {}};
    c.add(make_gate(GateKind::Rx, pi / 4, mode(0)));
    c.add(make_gate(GateKind::Rx, pi / 4, mode(1)));
    c.add(make_gate(GateKind::Cphase, phi, mode(0), mode(1)));
    c.add(make_gate(GateKind::Rx, pi / 4, mode(1)));
    ProtocolResult r{run_on_layer(c, new_register(2), layer), {}, {}};

    // i |Psi+> on (k0, k1) with both spins up: bits 1 and 3.
    Vector target = Vector::Zero(16);
    target(2) = Complex(0.0, 1.0 / std::numbers::sqrt2);
    target(8) = Complex(0.0, 1.0 / std::numbers::sqrt2);
    r.derived["phi"] = phi;
    r.derived["mode_entropy"] = entanglement_entropy(r.final_state, {mode(0)});
    r.derived["spin_entropy"] = entanglement_entropy(r.final_state, {spin(0)});
    r.derived["fidelity_i_psi_plus"] = fidelity(r.final_state, PureState(2, target));
    return r;
}

BellMeasurement bell_measure(const PureState &state, QubitRef q1, QubitRef q2, std::uint64_t seed, Layer layer) {
    if (q1 == q2) {
        throw Error(ErrorCode::DuplicateTargets, "bell_measure needs two distinct qubits");
    }
    Circuit c{.n_electrons = state.n_electrons(), .ops = {}};
    c.add(make_gate(GateKind::CNOT, q1, q2));
    c.add(make_gate(GateKind::H, q1));
    const PureState rotated = run_on_layer(c, state, layer);
    const std::array<QubitRef, 2> targets = {q1, q2};
    MeasurementRecord rec = measure(rotated, targets, seed);
    BellOutcome outcome{bell_from_bits(rec.outcome[0], rec.outcome[1]), {rec.outcome[0], rec.outcome[1]}};
    PureState post = rec.post_state;
    return {outcome, std::move(post), std::move(rec)};
}

ProtocolResult entanglement_swapping(std::uint64_t seed, Layer layer) {
    PureState s = spin_mode_entangler(new_register(2), 0, layer);
    s = spin_mode_entangler(s, 1, layer);
    BellMeasurement bm = bell_measure(s, mode(0), mode(1), seed, layer);

    ProtocolResult r{bm.post_state, {bm.record}, {}};
    const std::array<QubitRef, 2> spins = {spin(0), spin(1)};
    const DensityMatrix rho = reduced_density(r.final_state, spins);
    r.derived["outcome"] = static_cast<double>(bm.outcome.which);
    r.derived["probability"] = bm.record.probability;
    r.derived["spin_entropy"] = entanglement_entropy(r.final_state, {spin(0)});
    r.derived["spin_concurrence"] = concurrence(rho);

    int best = 0;
    double best_f = -1.0;
    for (int b = 0; b < 4; ++b) {
        const Vector v = bell_vector(static_cast<BellState>(b));
        const double f = std::real((v.adjoint() * rho * v)(0, 0));
        if (f > best_f) {
            best_f = f;
            best = b;
        }
    }
    r.derived["spin_bell_state"] = best;
    r.derived["spin_bell_fidelity"] = best_f;
    return r;
}

PureState entanglement_transfer(const PureState &state, Layer layer) {
    require_two_electrons(state, "entanglement_transfer");
    Circuit c{.n_electrons = 2, .ops = {}};
    c.add(make_gate(GateKind::SWAP, spin(0), mode(0)));
    c.add(make_gate(GateKind::SWAP, spin(1), mode(1)));
    return run_on_layer(c, state, layer);
}

PureState hyper_entangler(const PureState &state, Layer layer) {
    require_two_electrons(state, "hyper_entangler");
    Circuit c{.n_electrons = 2, .ops = {}};
    c.add(make_gate(GateKind::SWAP, mode(0), mode(1)));
    c.add(make_gate(GateKind::SWAP, spin(0), mode(0)));
    return run_on_layer(c, state, layer);
}

std::array<Complex, 2> polarized_spin(double theta0) {
    return {Complex(std::cos(theta0 / 2), 0.0), Complex(0.0, std::sin(theta0 / 2))};
}

double stern_gerlach_p_up(double theta, Complex alpha, Complex beta, Layer layer) {
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-10) {
        throw Error(ErrorCode::UnnormalizedState, "Stern-Gerlach input spin is not normalized");
    }
    Vector amps = Vector::Zero(4);
    amps(0) = alpha;
    amps(1) = beta;
    amps /= std::sqrt(n2);
    Circuit c{.n_electrons = 1, .ops = {}};
    c.add(make_gate(GateKind::Rx, -theta / 2, spin(0)));
    c.add(make_gate(GateKind::CNOT, spin(0), mode(0)));
    const PureState out = run_on_layer(c, PureState(1, amps), layer);
    const std::array<QubitRef, 1> k = {mode(0)};
    return outcome_probabilities(out, k)[0];
}

double stern_gerlach_p_up_unpolarized(double theta, Layer layer) {
    return 0.5 * (stern_gerlach_p_up(theta, 1.0, 0.0, layer) + stern_gerlach_p_up(theta, 0.0, 1.0, layer));
}

std::vector<SternGerlachPoint> stern_gerlach_sweep(double theta0, std::size_t points, bool half_angle) {
    if (points < 2) {
        throw Error(ErrorCode::InvalidArgument, "a sweep needs at least 2 points");
    }
    const double scale = half_angle ? 2.0 : 1.0;
    const double span = 2.0 * pi / scale;
    const auto spin_in = polarized_spin(scale * theta0);
    std::vector<SternGerlachPoint> out;
    out.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double theta = span * static_cast<double>(i) / static_cast<double>(points - 1);
        out.push_back({theta, stern_gerlach_p_up(scale * theta, spin_in[0], spin_in[1])});
    }
    return out;
}

double chsh_correlation(const PureState &state, double theta1, double theta2) {
    require_two_electrons(state, "chsh_correlation");
    auto sigma_n = [](double t) {
        Matrix m(2, 2);
        m << std::cos(t), Complex(0.0, -std::sin(t)), Complex(0.0, std::sin(t)), -std::cos(t);
        return m;
    };
    PureState s = apply_gate(state, sigma_n(theta1), {spin(0)});
    s = apply_gate(s, sigma_n(theta2), {spin(1)});
    return std::clamp(std::real(state.amplitudes().dot(s.amplitudes())), -1.0, 1.0);
}

double chsh_s(const PureState &state, double a, double a_prime, double b, double b_prime) {
    return chsh_correlation(state, a, b) - chsh_correlation(state, a, b_prime) + chsh_correlation(state, a_prime, b) +
           chsh_correlation(state, a_prime, b_prime);
}

PureState transfer_input() {
    Vector v = Vector::Zero(16);
    v(0) = 1.0 / std::numbers::sqrt2;
    v(10) = 1.0 / std::numbers::sqrt2;
    return PureState(2, v);
}

PureState hyper_input() {
    PureState s = spin_mode_entangler(new_register(2), 0);
    return spin_mode_entangler(s, 1);
}

}  // namespace spinnet
