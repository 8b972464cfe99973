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


#include "spinnet/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>

#include "spinnet/errors.hpp"
#include "spinnet/rng.hpp"

namespace spinnet {

namespace {

using std::numbers::pi;

constexpr double kAngleMatchTol = 1e-12;
constexpr double kRuleCheckTol = 1e-9;

// Shift into (-pi/2, pi/2]; returns the number of pi steps taken.
int fold_half_pi(double &a) {
    int steps = 0;
    while (a > pi / 2) {
        a -= pi;
        ++steps;
    }
    while (a <= -pi / 2) {
        a += pi;
        ++steps;
    }
    return steps;
}

bool is_multiple_of(double angle, double period) {
    const double r = angle / period;
    return std::abs(r - std::round(r)) <= kAngleMatchTol;
}

}  // namespace

Unitary EulerZXZ::reconstruct() const {
    return std::polar(1.0, global_phase) * gate_unitary(GateKind::Rz, theta1) * gate_unitary(GateKind::Rx, theta2) *
           gate_unitary(GateKind::Rz, theta3);
}

EulerZXZ euler_zxz(const Unitary &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "euler_zxz expects a 2x2 matrix");
    }
    if (!is_unitary(u)) {
        throw Error(ErrorCode::NonUnitary, "euler_zxz: matrix is not unitary");
    }
    EulerZXZ r;
    r.global_phase = std::arg(u.determinant()) / 2;
    const Matrix v = std::polar(1.0, -r.global_phase) * u;
    const Complex alpha = v(0, 0);
    const Complex beta = v(0, 1);
    r.theta2 = std::atan2(std::abs(beta), std::abs(alpha));

    double a = 0.0;
    double c = 0.0;
    if (std::abs(beta) <= kAngleMatchTol) {
        a = std::arg(alpha);
    } else if (std::abs(alpha) <= kAngleMatchTol) {
        a = std::arg(beta) - pi / 2;
    } else {
        const double sum = std::arg(alpha);
        const double diff = std::arg(beta) - pi / 2;
        a = (sum + diff) / 2;
        c = (sum - diff) / 2;
    }
    // Rz(x + pi) = -Rz(x): every pi step flips the sign, absorbed by the phase.
    const int steps = fold_half_pi(a) + fold_half_pi(c);
    r.global_phase = wrap_angle(r.global_phase + steps * pi);
    r.theta1 = a;
    r.theta3 = c;
    return r;
}

Circuit swap_sigma_k_circuit(SwapVariant variant, std::size_t electron, std::size_t n_electrons) {
    const QubitRef s = spin(electron);
    const QubitRef k = mode(electron);
    Circuit c{.n_electrons = n_electrons, .ops = {}};
    if (variant == SwapVariant::PbsHeavy) {
        c.add(make_gate(GateKind::CNOT, s, k));
        c.add(make_gate(GateKind::CNOT, k, s));
        c.add(make_gate(GateKind::CNOT, s, k));
    } else {
        c.add(make_gate(GateKind::CNOT, k, s));
        c.add(make_gate(GateKind::CNOT, s, k));
        c.add(make_gate(GateKind::CNOT, k, s));
    }
    c.validate();
    return c;
}

// ---------------------------------------------------------------------------
// Lowering

namespace {

struct Fragment {
    std::vector<HardwareElement> core;
    /// Phase-trim elements, dropped in Device mode.
    std::vector<HardwareElement> trim;
};

[[noreturn]] void unsupported(const GateOp &op, const std::string &why) {
    std::string targets;
    for (const auto &t : op.targets) {
        targets += (targets.empty() ? "" : ", ") + to_string(t);
    }
    throw Error(ErrorCode::UnsupportedGate,
                std::string("cannot lower '") + gate_name(op.kind) + "' on (" + targets + "): " + why);
}

void append(std::vector<HardwareElement> &dst, const std::vector<HardwareElement> &src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<HardwareElement> mode_hadamard(std::size_t e) {
    return {ab_phase(e, -pi / 2), beam_splitter(e, pi / 4), ab_phase(e, -pi / 2)};
}

std::vector<HardwareElement> pbs_elements(std::size_t e) {
    return pbs_hardware_netlist(e, e + 1).elements;
}

Fragment lower_single(const GateOp &op) {
    const QubitRef q = op.targets[0];
    const std::size_t e = q.electron;
    const double angle = op.angle.value_or(0.0);
    Fragment f;
    if (q.dof == Dof::Spin) {
        switch (op.kind) {
            case GateKind::Rx:
                f.core = {rashba(e, Axis::X, angle)};
                break;
            case GateKind::Rz:
                f.core = {rashba(e, Axis::Z, angle)};
                break;
            case GateKind::NOT:
                f.core = {rashba(e, Axis::X, pi / 2)};
                break;
            case GateKind::P:
                f.core = {rashba(e, Axis::Z, -angle / 2)};
                break;
            case GateKind::H:
                f.core = {rashba(e, Axis::Z, pi / 4), rashba(e, Axis::X, pi / 4), rashba(e, Axis::Z, pi / 4)};
                break;
            default:
                break;
        }
        return f;
    }
    switch (op.kind) {
        case GateKind::Rx:
            f.core = {beam_splitter(e, angle)};
            break;
        case GateKind::P:
            f.core = {ab_phase(e, angle)};
            break;
        case GateKind::Rz:
            f.core = {ab_phase(e, -2 * angle)};
            break;
        case GateKind::NOT:
            f.core = {beam_splitter(e, pi / 2)};
            break;
        case GateKind::H:
            f.core = mode_hadamard(e);
            break;
        default:
            break;
    }
    return f;
}

Fragment lower_pair(const GateOp &op) {
    const QubitRef a = op.targets[0];
    const QubitRef b = op.targets[1];
    Fragment f;
    if (a.electron == b.electron) {
        const std::size_t e = a.electron;
        if (op.kind == GateKind::CNOT && a.dof == Dof::Mode) {
            f.core = {rashba(e, Axis::X, pi / 2, ModeMask::Mode1Only)};
            f.trim = {ab_phase(e, -pi / 2)};
        } else if (op.kind == GateKind::CNOT) {
            f.core = pbs_elements(e);
            f.trim = pbs_phase_trim(e);
        } else if (op.kind == GateKind::Cphase) {
            f.core = {rashba(e, Axis::Z, -*op.angle / 2, ModeMask::Mode1Only)};
            f.trim = {ab_phase(e, *op.angle / 2)};
        } else {
            unsupported(op, "no single-electron device");
        }
        return f;
    }
    if (a.dof == Dof::Spin || b.dof == Dof::Spin) {
        unsupported(op, "no hardware element couples the spin of one electron to another electron");
    }
    if (op.kind == GateKind::Cphase) {
        f.core = {coulomb_coupler(a.electron, b.electron, *op.angle)};
    } else if (op.kind == GateKind::CNOT) {
        f.core = mode_hadamard(b.electron);
        f.core.push_back(coulomb_coupler(a.electron, b.electron, pi));
        append(f.core, mode_hadamard(b.electron));
    } else {
        unsupported(op, "no two-electron device");
    }
    return f;
}

bool is_not_heavy_triple(std::span<const GateOp> ops) {
    if (ops.size() < 3) {
        return false;
    }
    const std::size_t e = ops[0].targets.empty() ? 0 : ops[0].targets[0].electron;
    const GateOp ks = make_gate(GateKind::CNOT, mode(e), spin(e));
    const GateOp sk = make_gate(GateKind::CNOT, spin(e), mode(e));
    return ops[0] == ks && ops[1] == sk && ops[2] == ks;
}

Fragment swap_template(std::size_t e) {
    Fragment f;
    f.core.push_back(rashba(e, Axis::X, -pi / 2, ModeMask::Mode1Only));
    append(f.core, pbs_elements(e));
    f.core.push_back(rashba(e, Axis::X, -pi / 2, ModeMask::Mode1Only));
    return f;
}

// SWAPs become CNOT triples before lowering.
std::vector<GateOp> expand_swaps(const std::vector<GateOp> &ops) {
    std::vector<GateOp> out;
    for (const auto &op : ops) {
        if (op.kind != GateKind::SWAP) {
            out.push_back(op);
            continue;
        }
        QubitRef a = op.targets[0];
        QubitRef b = op.targets[1];
        if (a.electron == b.electron) {
            const QubitRef s = spin(a.electron);
            const QubitRef k = mode(a.electron);
            out.push_back(make_gate(GateKind::CNOT, k, s));
            out.push_back(make_gate(GateKind::CNOT, s, k));
            out.push_back(make_gate(GateKind::CNOT, k, s));
        } else if (a.dof == Dof::Mode && b.dof == Dof::Mode) {
            out.push_back(make_gate(GateKind::CNOT, a, b));
            out.push_back(make_gate(GateKind::CNOT, b, a));
            out.push_back(make_gate(GateKind::CNOT, a, b));
        } else {
            unsupported(op, "no hardware element couples the spin of one electron to another electron");
        }
    }
    return out;
}

// Relabels the electrons touched by `ops` onto 0..m-1.
std::map<std::size_t, std::size_t> compact_electrons(std::span<const GateOp> ops) {
    std::map<std::size_t, std::size_t> remap;
    for (const auto &op : ops) {
        for (const auto &t : op.targets) {
            remap.emplace(t.electron, 0);
        }
    }
    std::size_t next = 0;
    for (auto &kv : remap) {
        kv.second = next++;
    }
    return remap;
}

// Global phase gamma with U_elements = e^{i gamma} U_ops, computed on a compact register.
double fragment_phase(std::span<const GateOp> ops, const std::vector<HardwareElement> &elements) {
    const auto remap = compact_electrons(ops);
    const std::size_t m = std::max<std::size_t>(remap.size(), 1);
    Circuit c{.n_electrons = m, .ops = {}};
    for (GateOp op : ops) {
        for (auto &t : op.targets) {
            t.electron = remap.at(t.electron);
        }
        c.add(op);
    }
    Netlist n{.n_electrons = m, .elements = {}};
    for (HardwareElement el : elements) {
        el.electron = remap.at(el.electron);
        if (el.kind == ElementKind::CoulombCoupler) {
            el.electron2 = remap.at(el.electron2);
        }
        n.add(el);
    }
    double phase = 0.0;
    if (!equiv_global_phase(netlist_unitary(n), circuit_unitary(c), kRuleCheckTol, &phase)) {
        throw std::logic_error("lowering produced a non-equivalent fragment");
    }
    return phase;
}

// Merges `next` into `prev` when both are the same generator on the same wires.
bool try_merge(HardwareElement &prev, const HardwareElement &next) {
    if (prev.kind != next.kind || prev.kind == ElementKind::Detector || prev.electron != next.electron) {
        return false;
    }
    if (prev.kind == ElementKind::Rashba && (prev.axis != next.axis || prev.mask != next.mask)) {
        return false;
    }
    if (prev.kind == ElementKind::CoulombCoupler && prev.electron2 != next.electron2) {
        return false;
    }
    prev.angle += next.angle;
    return true;
}

// When `el` is e^{i gamma} I, returns gamma.
std::optional<double> trivial_phase(const HardwareElement &el) {
    switch (el.kind) {
        case ElementKind::BeamSplitter:
            if (is_multiple_of(el.angle, pi)) {
                return std::round(el.angle / pi) * pi;
            }
            break;
        case ElementKind::Rashba:
            if (el.mask == ModeMask::Both && is_multiple_of(el.angle, pi)) {
                return std::round(el.angle / pi) * pi;
            }
            if (el.mask == ModeMask::Mode1Only && is_multiple_of(el.angle, 2 * pi)) {
                return 0.0;
            }
            break;
        case ElementKind::ABPhase:
        case ElementKind::CoulombCoupler:
            if (is_multiple_of(el.angle, 2 * pi)) {
                return 0.0;
            }
            break;
        case ElementKind::Detector:
            break;
    }
    return std::nullopt;
}

Netlist simplify_impl(const Netlist &netlist, double *removed_phase) {
    Netlist out{.n_electrons = netlist.n_electrons, .elements = {}};
    double phase = 0.0;
    for (const auto &el : netlist.elements) {
        if (out.elements.empty() || !try_merge(out.elements.back(), el)) {
            out.elements.push_back(el);
        }
        if (auto g = trivial_phase(out.elements.back())) {
            phase += *g;
            out.elements.pop_back();
        }
    }
    if (removed_phase != nullptr) {
        *removed_phase = phase;
    }
    return out;
}

}  // namespace

Netlist simplify_netlist(const Netlist &netlist) {
    netlist.validate();
    return simplify_impl(netlist, nullptr);
}

std::size_t hardware_cost(const Netlist &netlist) {
    return static_cast<std::size_t>(std::count_if(netlist.elements.begin(), netlist.elements.end(),
                                                  [](const HardwareElement &e) {
                                                      return e.kind != ElementKind::Detector;
                                                  }));
}

LoweredNetlist lower_with_ledger(const Circuit &circuit, const LoweringOptions &options) {
    circuit.validate();
    const bool exact = options.phase == PhaseMode::Exact;
    const std::vector<GateOp> ops = expand_swaps(circuit.ops);

    LoweredNetlist result;
    result.netlist.n_electrons = circuit.n_electrons;
    double phase = 0.0;
    for (std::size_t i = 0; i < ops.size();) {
        std::size_t used = 1;
        Fragment f;
        if (is_not_heavy_triple(std::span(ops).subspan(i))) {
            f = swap_template(ops[i].targets[0].electron);
            used = 3;
        } else if (ops[i].kind == GateKind::Identity) {
            ++i;
            continue;
        } else if (ops[i].targets.size() == 1) {
            f = lower_single(ops[i]);
        } else {
            f = lower_pair(ops[i]);
        }
        std::vector<HardwareElement> elements = f.core;
        if (exact) {
            append(elements, f.trim);
            phase += fragment_phase(std::span(ops).subspan(i, used), elements);
        }
        for (const auto &el : elements) {
            result.netlist.add(el);
        }
        i += used;
    }
    if (options.simplify) {
        double removed = 0.0;
        result.netlist = simplify_impl(result.netlist, &removed);
        phase -= removed;
    }
    if (exact) {
        result.global_phase = wrap_angle(phase);
    }
    return result;
}

Netlist lower_to_netlist(const Circuit &circuit, const LoweringOptions &options) {
    return lower_with_ledger(circuit, options).netlist;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

struct Match {
    std::map<std::size_t, QubitRef> slots;
    std::map<std::size_t, double> vars;
};

bool match_at(const RewriteRule &rule, std::span<const GateOp> ops, Match &m) {
    if (ops.size() < rule.pattern.size()) {
        return false;
    }
    m = {};
    for (std::size_t j = 0; j < rule.pattern.size(); ++j) {
        const PatternOp &p = rule.pattern[j];
        const GateOp &op = ops[j];
        if (op.kind != p.kind) {
            return false;
        }
        for (std::size_t t = 0; t < p.slots.size(); ++t) {
            auto [it, inserted] = m.slots.emplace(p.slots[t], op.targets[t]);
            if (!inserted && !(it->second == op.targets[t])) {
                return false;
            }
            if (inserted) {
                for (const auto &[slot, q] : m.slots) {
                    if (slot != p.slots[t] && q == op.targets[t]) {
                        return false;
                    }
                }
            }
        }
        if (p.angle && std::abs(*p.angle - *op.angle) > kAngleMatchTol) {
            return false;
        }
        if (p.capture) {
            auto [it, inserted] = m.vars.emplace(*p.capture, *op.angle);
            if (!inserted && std::abs(it->second - *op.angle) > kAngleMatchTol) {
                return false;
            }
        }
    }
    return true;
}

GateOp instantiate(const ReplacementOp &r, const Match &m) {
    GateOp op{.kind = r.kind, .angle = std::nullopt, .targets = {}};
    for (std::size_t s : r.slots) {
        op.targets.push_back(m.slots.at(s));
    }
    if (gate_takes_angle(r.kind)) {
        double a = r.offset;
        for (const auto &[var, coef] : r.terms) {
            a += coef * m.vars.at(var);
        }
        op.angle = a;
    }
    return op;
}

void check_rule_shape(const std::string &name, const std::vector<PatternOp> &pattern,
                      const std::vector<ReplacementOp> &replacement) {
    auto fail = [&](const std::string &why) {
        throw Error(ErrorCode::InvalidArgument, "rule '" + name + "': " + why);
    };
    if (pattern.empty()) {
        fail("empty pattern");
    }
    std::map<std::size_t, bool> slots;
    std::map<std::size_t, bool> vars;
    for (const auto &p : pattern) {
        if (p.slots.size() != gate_arity(p.kind)) {
            fail(std::string("pattern '") + gate_name(p.kind) + "' has wrong slot count");
        }
        if (p.slots.size() == 2 && p.slots[0] == p.slots[1]) {
            fail("pattern op binds one slot twice");
        }
        if (p.angle && p.capture) {
            fail("pattern op has both a fixed angle and a capture");
        }
        if (gate_takes_angle(p.kind) != (p.angle || p.capture)) {
            fail(std::string("pattern '") + gate_name(p.kind) + "' angle mismatch");
        }
        for (std::size_t s : p.slots) {
            slots[s] = true;
        }
        if (p.capture) {
            vars[*p.capture] = true;
        }
    }
    if (slots.size() > 6) {
        fail("more than six slots");
    }
    for (const auto &r : replacement) {
        if (r.slots.size() != gate_arity(r.kind)) {
            fail(std::string("replacement '") + gate_name(r.kind) + "' has wrong slot count");
        }
        if (r.slots.size() == 2 && r.slots[0] == r.slots[1]) {
            fail("replacement op binds one slot twice");
        }
        for (std::size_t s : r.slots) {
            if (!slots.count(s)) {
                fail("replacement uses an unbound slot");
            }
        }
        if (!gate_takes_angle(r.kind) && (!r.terms.empty() || r.offset != 0.0)) {
            fail(std::string("replacement '") + gate_name(r.kind) + "' takes no angle");
        }
        for (const auto &[var, coef] : r.terms) {
            if (!vars.count(var)) {
                fail("replacement uses an uncaptured angle");
            }
        }
    }
}

// Instantiates the rule on slot i -> flat qubit i with sampled captures.
bool rule_holds(const RewriteRule &rule, Rng &rng) {
    std::map<std::size_t, std::size_t> slot_index;
    std::map<std::size_t, double> vars;
    for (const auto &p : rule.pattern) {
        for (std::size_t s : p.slots) {
            slot_index.emplace(s, 0);
        }
        if (p.capture) {
            vars.emplace(*p.capture, (2.0 * rng.uniform() - 1.0) * pi);
        }
    }
    std::size_t next = 0;
    for (auto &kv : slot_index) {
        kv.second = next++;
    }
    const std::size_t n = std::max<std::size_t>(1, (slot_index.size() + 1) / 2);
    Match m;
    for (const auto &[slot, idx] : slot_index) {
        m.slots.emplace(slot, QubitRef::from_flat(idx));
    }
    m.vars = vars;

    Circuit lhs{.n_electrons = n, .ops = {}};
    for (const auto &p : rule.pattern) {
        GateOp op{.kind = p.kind, .angle = std::nullopt, .targets = {}};
        for (std::size_t s : p.slots) {
            op.targets.push_back(m.slots.at(s));
        }
        if (p.angle) {
            op.angle = *p.angle;
        } else if (p.capture) {
            op.angle = vars.at(*p.capture);
        }
        lhs.add(op);
    }
    Circuit rhs{.n_electrons = n, .ops = {}};
    for (const auto &r : rule.replacement) {
        rhs.add(instantiate(r, m));
    }
    return equiv_global_phase(circuit_unitary(lhs), circuit_unitary(rhs), kRuleCheckTol);
}

}  // namespace

RewriteRule make_rule(std::string name, std::vector<PatternOp> pattern, std::vector<ReplacementOp> replacement) {
    check_rule_shape(name, pattern, replacement);
    RewriteRule rule{std::move(name), std::move(pattern), std::move(replacement)};
    Rng rng(0x5eed);
    for (int trial = 0; trial < 4; ++trial) {
        if (!rule_holds(rule, rng)) {
            throw Error(ErrorCode::InvalidArgument,
                        "rule '" + rule.name + "': replacement is not equivalent to the pattern");
        }
    }
    return rule;
}

Circuit peephole_rewrite(const Circuit &circuit, const std::vector<RewriteRule> &rules,
                         const RewriteOptions &options) {
    circuit.validate();
    const bool verify = options.verify_each_step && circuit.n_electrons <= 4;
    Unitary reference;
    if (verify) {
        reference = circuit_unitary(circuit);
    }
    Circuit current = circuit;
    for (std::size_t pass = 0; pass < options.max_iterations; ++pass) {
        bool changed = false;
        std::vector<GateOp> out;
        const std::span<const GateOp> ops(current.ops);
        std::size_t i = 0;
        while (i < ops.size()) {
            bool fired = false;
            for (const auto &rule : rules) {
                Match m;
                if (!match_at(rule, ops.subspan(i), m)) {
                    continue;
                }
                for (const auto &r : rule.replacement) {
                    out.push_back(instantiate(r, m));
                }
                i += rule.pattern.size();
                fired = true;
                changed = true;
                if (verify) {
                    Circuit probe{.n_electrons = current.n_electrons, .ops = out};
                    probe.ops.insert(probe.ops.end(), ops.begin() + static_cast<std::ptrdiff_t>(i), ops.end());
                    if (!equiv_global_phase(circuit_unitary(probe), reference, kRuleCheckTol)) {
                        throw std::logic_error("rule '" + rule.name + "' changed the circuit unitary");
                    }
                }
                break;
            }
            if (!fired) {
                out.push_back(ops[i]);
                ++i;
            }
        }
        current.ops = std::move(out);
        if (!changed) {
            return current;
        }
    }
    throw Error(ErrorCode::NonTerminatingRules,
                "rewrite did not reach a fixpoint within " + std::to_string(options.max_iterations) + " passes");
}

namespace rules {

namespace {

PatternOp pat(GateKind kind, std::vector<std::size_t> slots) {
    return {.kind = kind, .slots = std::move(slots), .angle = std::nullopt, .capture = std::nullopt};
}

PatternOp pat_capture(GateKind kind, std::vector<std::size_t> slots, std::size_t var) {
    return {.kind = kind, .slots = std::move(slots), .angle = std::nullopt, .capture = var};
}

ReplacementOp rep(GateKind kind, std::vector<std::size_t> slots, std::vector<std::pair<std::size_t, double>> terms = {},
                  double offset = 0.0) {
    return {.kind = kind, .slots = std::move(slots), .terms = std::move(terms), .offset = offset};
}

}  // namespace

std::vector<RewriteRule> cancellations() {
    return {
        make_rule("h-h", {pat(GateKind::H, {0}), pat(GateKind::H, {0})}, {}),
        make_rule("not-not", {pat(GateKind::NOT, {0}), pat(GateKind::NOT, {0})}, {}),
        make_rule("cnot-cnot", {pat(GateKind::CNOT, {0, 1}), pat(GateKind::CNOT, {0, 1})}, {}),
    };
}

RewriteRule swap_to_cnots() {
    return make_rule("swap-cnots", {pat(GateKind::SWAP, {0, 1})},
                     {rep(GateKind::CNOT, {0, 1}), rep(GateKind::CNOT, {1, 0}), rep(GateKind::CNOT, {0, 1})});
}

RewriteRule phase_to_rz() {
    return make_rule("p-rz", {pat_capture(GateKind::P, {0}, 0)}, {rep(GateKind::Rz, {0}, {{0, -0.5}})});
}

RewriteRule hadamard_to_zxz() {
    return make_rule("h-zxz", {pat(GateKind::H, {0})},
                     {rep(GateKind::Rz, {0}, {}, pi / 4), rep(GateKind::Rx, {0}, {}, pi / 4),
                      rep(GateKind::Rz, {0}, {}, pi / 4)});
}

RewriteRule cnot_to_cphase() {
    return make_rule("cnot-cphase", {pat(GateKind::CNOT, {0, 1})},
                     {rep(GateKind::H, {1}), rep(GateKind::Cphase, {0, 1}, {}, pi), rep(GateKind::H, {1})});
}

std::vector<RewriteRule> rotation_merges() {
    return {
        make_rule("rx-rx", {pat_capture(GateKind::Rx, {0}, 0), pat_capture(GateKind::Rx, {0}, 1)},
                  {rep(GateKind::Rx, {0}, {{0, 1.0}, {1, 1.0}})}),
        make_rule("rz-rz", {pat_capture(GateKind::Rz, {0}, 0), pat_capture(GateKind::Rz, {0}, 1)},
                  {rep(GateKind::Rz, {0}, {{0, 1.0}, {1, 1.0}})}),
    };
}

}  // namespace rules

}  // namespace spinnet
