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


#include "spinnet/hardware.hpp"

#include <cmath>
#include <numbers>

#include "spinnet/errors.hpp"
#include "spinnet/gates.hpp"
#include "spinnet/rng.hpp"

namespace spinnet {

namespace {

Unitary rotation(Axis axis, double theta) {
    return gate_unitary(axis == Axis::X ? GateKind::Rx : GateKind::Rz, theta);
}

void require_electron(std::size_t e, std::size_t n) {
    if (e >= n) {
        throw Error(ErrorCode::TargetOutOfRange,
                    "electron " + std::to_string(e) + " outside a register of " + std::to_string(n));
    }
}

}  // namespace

void HardwareElement::validate(std::size_t n_electrons) const {
    require_electron(electron, n_electrons);
    if (kind == ElementKind::CoulombCoupler) {
        require_electron(electron2, n_electrons);
        if (electron2 == electron) {
            throw Error(ErrorCode::InvalidArgument, "Coulomb coupler needs two distinct electrons");
        }
    }
    if (!std::isfinite(angle)) {
        throw Error(ErrorCode::InvalidArgument, "element angle must be finite");
    }
}

HardwareElement beam_splitter(std::size_t electron, double theta) {
    return {.kind = ElementKind::BeamSplitter, .electron = electron, .angle = theta};
}

HardwareElement ab_phase(std::size_t electron, double phi) {
    return {.kind = ElementKind::ABPhase, .electron = electron, .angle = phi};
}

HardwareElement rashba(std::size_t electron, Axis axis, double theta, ModeMask mask) {
    return {.kind = ElementKind::Rashba, .electron = electron, .angle = theta, .axis = axis, .mask = mask};
}

HardwareElement coulomb_coupler(std::size_t e1, std::size_t e2, double phi) {
    return {.kind = ElementKind::CoulombCoupler, .electron = e1, .electron2 = e2, .angle = phi};
}

HardwareElement detector(std::size_t electron, DetectorTarget target) {
    return {.kind = ElementKind::Detector, .electron = electron, .detector = target};
}

Netlist &Netlist::add(HardwareElement e) {
    e.validate(n_electrons);
    elements.push_back(e);
    return *this;
}

void Netlist::validate() const {
    if (n_electrons == 0 || n_electrons > kMaxElectrons) {
        throw Error(ErrorCode::InvalidRegister, "netlist register size out of range");
    }
    for (const auto &e : elements) {
        e.validate(n_electrons);
    }
}

bool Netlist::has_detectors() const {
    for (const auto &e : elements) {
        if (e.kind == ElementKind::Detector) {
            return true;
        }
    }
    return false;
}

double physical_to_angle(const HardwareParams &params, AngleSource which) {
    switch (which) {
        case AngleSource::AB:
            return 2.0 * std::numbers::pi * params.flux;
        case AngleSource::BS:
            return -params.tunneling_integral;
        case AngleSource::Rashba:
            return params.alpha * params.field * params.length;
    }
    return 0.0;
}

namespace {

struct LocalOp {
    Matrix matrix;
    std::vector<QubitRef> targets;
};

LocalOp element_local_op(const HardwareElement &elem) {
    const QubitRef s = spin(elem.electron);
    const QubitRef k = mode(elem.electron);
    switch (elem.kind) {
        case ElementKind::BeamSplitter:
            return {gate_unitary(GateKind::Rx, elem.angle), {k}};
        case ElementKind::ABPhase:
            return {gate_unitary(GateKind::P, elem.angle), {k}};
        case ElementKind::Rashba: {
            if (elem.mask == ModeMask::Both) {
                return {rotation(elem.axis, elem.angle), {s}};
            }
            // Local basis index = spin + 2 * mode: rotate only the mode-1 block.
            Matrix m = Matrix::Identity(4, 4);
            m.block(2, 2, 2, 2) = rotation(elem.axis, elem.angle);
            return {m, {s, k}};
        }
        case ElementKind::CoulombCoupler:
            return {gate_unitary(GateKind::Cphase, elem.angle), {k, mode(elem.electron2)}};
        case ElementKind::Detector:
            break;
    }
    throw Error(ErrorCode::NotAUnitaryElement, "detector has no unitary; use simulate");
}

}  // namespace

Unitary element_unitary(const HardwareElement &elem, std::size_t n_electrons) {
    elem.validate(n_electrons);
    LocalOp op = element_local_op(elem);
    return embed(op.matrix, op.targets, n_electrons);
}

Unitary netlist_unitary(const Netlist &netlist) {
    netlist.validate();
    if (netlist.has_detectors()) {
        throw Error(ErrorCode::NotAUnitaryElement, "netlist contains detectors; use simulate");
    }
    const Eigen::Index dim = Eigen::Index{1} << (2 * netlist.n_electrons);
    Unitary u = Unitary::Identity(dim, dim);
    for (const auto &e : netlist.elements) {
        u = element_unitary(e, netlist.n_electrons) * u;
    }
    return u;
}

PureState apply_netlist(const Netlist &netlist, const PureState &input) {
    netlist.validate();
    if (input.n_electrons() != netlist.n_electrons) {
        throw Error(ErrorCode::DimensionMismatch, "netlist and state register sizes differ");
    }
    PureState s = input;
    for (const auto &e : netlist.elements) {
        if (e.kind == ElementKind::Detector) {
            throw Error(ErrorCode::NotAUnitaryElement, "netlist contains detectors; use simulate");
        }
        LocalOp op = element_local_op(e);
        s = apply_gate(s, op.matrix, op.targets);
    }
    return s;
}

std::string ShotResult::outcome_key() const {
    std::string key;
    for (std::size_t i = 0; i < records.size(); ++i) {
        key += (i == 0 ? "" : "|") + records[i].outcome_string();
    }
    return key;
}

ShotResult simulate_shot(const Netlist &netlist, const PureState &input, std::uint64_t seed) {
    netlist.validate();
    if (input.n_electrons() != netlist.n_electrons) {
        throw Error(ErrorCode::DimensionMismatch, "netlist and state register sizes differ");
    }
    Rng rng(seed);
    ShotResult shot{input, {}};
    for (const auto &e : netlist.elements) {
        if (e.kind != ElementKind::Detector) {
            LocalOp op = element_local_op(e);
            shot.final_state = apply_gate(shot.final_state, op.matrix, op.targets);
            continue;
        }
        std::vector<QubitRef> targets;
        if (e.detector == DetectorTarget::Full) {
            targets.push_back(spin(e.electron));
        }
        targets.push_back(mode(e.electron));
        MeasurementRecord rec = measure(shot.final_state, targets, rng.next());
        shot.final_state = rec.post_state;
        shot.records.push_back(std::move(rec));
    }
    return shot;
}

Unitary pbs_behavioral() {
    return embed_op(make_gate(GateKind::CNOT, spin(0), mode(0)), 1);
}

Netlist pbs_hardware_netlist(std::size_t electron, std::size_t n_electrons) {
    Netlist n{.n_electrons = n_electrons, .elements = {}};
    n.add(beam_splitter(electron, kPbsSplitterIn));
    n.add(rashba(electron, Axis::Z, kPbsRashba, ModeMask::Mode1Only));
    n.add(ab_phase(electron, kPbsAbPhase));
    n.add(beam_splitter(electron, kPbsSplitterOut));
    return n;
}

std::vector<HardwareElement> pbs_phase_trim(std::size_t electron) {
    using std::numbers::pi;
    return {
        rashba(electron, Axis::Z, pi / 4, ModeMask::Both),
        rashba(electron, Axis::Z, pi / 2, ModeMask::Mode1Only),
        ab_phase(electron, pi / 2),
    };
}

PbsEquivalenceReport pbs_equivalence_report(double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "pbs_equivalence_report: tol must be positive");
    }
    const Unitary hw = netlist_unitary(pbs_hardware_netlist());
    const Unitary cnot = pbs_behavioral();

    PbsEquivalenceReport r;
    r.global_phase_equal = equiv_global_phase(hw, cnot, tol, &r.global_phase);

    // CNOT is a real permutation, so CNOT^T * hw isolates the residual.
    const Matrix residual = cnot.transpose() * hw;
    Matrix expected = Matrix::Zero(4, 4);
    for (int b = 0; b < 4; ++b) {
        r.residual_phases[b] = wrap_angle(std::arg(residual(b, b)));
        expected(b, b) = std::polar(1.0, kPbsResidualPhases[b]);
    }
    r.diagonal_equal = (hw - cnot * expected).cwiseAbs().maxCoeff() <= tol;

    r.routing_ok = true;
    for (int s = 0; s < 2; ++s) {
        for (int k = 0; k < 2; ++k) {
            const int in = s + 2 * k;
            const int out_mode = s == 0 ? k : 1 - k;
            double p = 0.0;
            for (int s_out = 0; s_out < 2; ++s_out) {
                p += std::norm(hw(s_out + 2 * out_mode, in));
            }
            r.routing[s][k] = p;
            r.routing_ok = r.routing_ok && std::abs(p - 1.0) <= tol;
        }
    }

    Netlist trimmed = pbs_hardware_netlist();
    for (const auto &e : pbs_phase_trim(0)) {
        trimmed.add(e);
    }
    r.trimmed_global_phase_equal = equiv_global_phase(netlist_unitary(trimmed), cnot, tol);
    return r;
}

}  // namespace spinnet
