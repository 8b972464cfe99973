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


#include "spinnet/cli.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/hardware.hpp"
#include "spinnet/io.hpp"
#include "spinnet/metrics.hpp"
#include "spinnet/protocols.hpp"
#include "spinnet/synthesis.hpp"

namespace spinnet {

namespace {

using std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rows = std::vector<std::vector<std::string>>;

void emit(const std::string &csv_path, const std::string &csv, std::ostream &out) {
    if (csv_path.empty()) {
        out << csv;
    } else {
        write_file(csv_path, csv);
    }
}

std::string load(const std::string &path) {
    try {
        return read_file(path);
    } catch (const std::runtime_error &e) {
        throw UsageError(e.what());
    }
}

Unitary load_unitary(const std::string &path, std::size_t &n_electrons) {
    const std::string text = load(path);
    if (looks_like_circuit(text)) {
        Circuit c = parse_circuit(text);
        n_electrons = c.n_electrons;
        return circuit_unitary(c);
    }
    Netlist n = parse_netlist(text);
    n_electrons = n.n_electrons;
    return netlist_unitary(n);
}

Layer parse_layer(const std::string &s) {
    return s == "hardware" ? Layer::Hardware : Layer::Gate;
}

std::string basis_label(std::size_t index, std::size_t n_electrons) {
    std::string s;
    for (std::size_t e = 0; e < n_electrons; ++e) {
        s += (e == 0 ? "" : ",");
        s += ((index >> (2 * e)) & 1U) ? 'd' : 'u';
        s += ((index >> (2 * e + 1)) & 1U) ? '1' : '0';
    }
    return s;
}

std::string derived_csv(const std::map<std::string, double> &derived) {
    Rows rows;
    for (const auto &[k, v] : derived) {
        rows.push_back({k, format_csv(v)});
    }
    return csv_table({"quantity", "value"}, rows);
}

// --- simulate --------------------------------------------------------------

struct SimulateArgs {
    std::string netlist;
    std::string input;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::string csv;
};

int cmd_simulate(const SimulateArgs &a, std::ostream &out) {
    Netlist net = parse_netlist(load(a.netlist));
    const PureState input = parse_state_spec(a.input, net.n_electrons);
    if (a.shots == 0) {
        if (net.has_detectors()) {
            throw Error(ErrorCode::NotAUnitaryElement, "netlist has detectors; pass --shots N");
        }
        const PureState s = apply_netlist(net, input);
        Rows rows;
        for (std::size_t b = 0; b < s.dim(); ++b) {
            const Complex amp = s[b];
            if (std::abs(amp) <= 1e-15) {
                continue;
            }
            rows.push_back({std::to_string(b), "\"" + basis_label(b, net.n_electrons) + "\"",
                            format_csv(amp.real()), format_csv(amp.imag()), format_csv(std::norm(amp))});
        }
        emit(a.csv, csv_table({"basis", "state", "re", "im", "probability"}, rows), out);
        return kExitOk;
    }
    if (!net.has_detectors()) {
        for (std::size_t e = 0; e < net.n_electrons; ++e) {
            net.add(detector(e, DetectorTarget::Full));
        }
    }
    std::map<std::string, std::size_t> counts;
    for (std::size_t i = 0; i < a.shots; ++i) {
        ++counts[simulate_shot(net, input, a.seed + i).outcome_key()];
    }
    Rows rows;
    for (const auto &[key, count] : counts) {
        rows.push_back({key, std::to_string(count),
                        format_csv(static_cast<double>(count) / static_cast<double>(a.shots))});
    }
    emit(a.csv, csv_table({"outcome", "count", "frequency"}, rows), out);
    return kExitOk;
}

// --- equiv -----------------------------------------------------------------

int cmd_equiv(const std::string &path_a, const std::string &path_b, double tol, bool up_to_diagonal,
              std::ostream &out) {
    if (!(tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    std::size_t na = 0;
    std::size_t nb = 0;
    const Unitary ua = load_unitary(path_a, na);
    const Unitary ub = load_unitary(path_b, nb);
    if (na != nb) {
        throw Error(ErrorCode::DimensionMismatch, "registers differ: " + std::to_string(na) + " vs " +
                                                      std::to_string(nb) + " electrons");
    }
    double phase = 0.0;
    if (equiv_global_phase(ua, ub, tol, &phase)) {
        out << "equivalent up to global phase " << format_csv(phase) << '\n';
        return kExitOk;
    }
    if (up_to_diagonal) {
        // A = B D with D diagonal unitary.
        const Matrix d = ub.adjoint() * ua;
        Matrix off = d;
        off.diagonal().setZero();
        bool ok = off.cwiseAbs().maxCoeff() <= tol;
        for (Eigen::Index i = 0; ok && i < d.rows(); ++i) {
            ok = std::abs(std::abs(d(i, i)) - 1.0) <= tol;
        }
        if (ok) {
            out << "equivalent up to input-side diagonal phases:";
            for (Eigen::Index i = 0; i < d.rows(); ++i) {
                out << ' ' << format_csv(std::arg(d(i, i)));
            }
            out << '\n';
            return kExitOk;
        }
    }
    double best = (ua - std::polar(1.0, phase) * ub).cwiseAbs().maxCoeff();
    out << "not equivalent (max deviation " << format_csv(best) << ")\n";
    return kExitNotEquivalent;
}

// --- synth -----------------------------------------------------------------

int cmd_euler(const std::vector<double> &v, std::ostream &out) {
    if (v.size() != 8) {
        throw UsageError("synth euler expects 8 numbers: re/im of u00 u01 u10 u11");
    }
    Matrix u(2, 2);
    u << Complex(v[0], v[1]), Complex(v[2], v[3]), Complex(v[4], v[5]), Complex(v[6], v[7]);
    const EulerZXZ r = euler_zxz(u);
    out << "lambda=" << format_csv(r.global_phase) << '\n'
        << "theta1=" << format_csv(r.theta1) << '\n'
        << "theta2=" << format_csv(r.theta2) << '\n'
        << "theta3=" << format_csv(r.theta3) << '\n';
    return kExitOk;
}

// --- lower -----------------------------------------------------------------

int cmd_lower(const std::string &path, const std::string &out_path, const std::string &phase, bool no_simplify,
              std::ostream &out) {
    const Circuit c = parse_circuit(load(path));
    LoweringOptions opts;
    opts.phase = phase == "device" ? PhaseMode::Device : PhaseMode::Exact;
    opts.simplify = !no_simplify;
    const LoweredNetlist lowered = lower_with_ledger(c, opts);
    const std::string text = print_netlist(lowered.netlist);
    if (out_path.empty()) {
        out << text;
        return kExitOk;
    }
    write_file(out_path, text);
    out << "elements=" << hardware_cost(lowered.netlist) << '\n';
    if (lowered.global_phase) {
        out << "global_phase=" << format_csv(*lowered.global_phase) << '\n';
    }
    return kExitOk;
}

// --- protocol --------------------------------------------------------------

struct ProtocolArgs {
    std::string name;
    std::uint64_t seed = 1;
    std::size_t shots = 1;
    std::string layer = "gate";
    std::string csv;
    double phi = kModeModePhiStar;
    double theta0 = 0.0;
};

std::map<std::string, double> run_protocol(const ProtocolArgs &a) {
    const Layer layer = parse_layer(a.layer);
    std::map<std::string, double> d;
    if (a.name == "spin-mode-entangle") {
        const PureState s = spin_mode_entangler(new_register(1), 0, layer);
        d["amp_u0_re"] = s[0].real();
        d["amp_u0_im"] = s[0].imag();
        d["amp_d1_re"] = s[3].real();
        d["amp_d1_im"] = s[3].imag();
        d["spin_mode_entropy"] = entanglement_entropy(s, {spin(0)});
    } else if (a.name == "mode-mode-entangle") {
        d = mode_mode_entangler(a.phi, layer).derived;
    } else if (a.name == "entanglement-swap") {
        if (a.shots == 0) {
            throw UsageError("--shots must be at least 1");
        }
        std::map<int, std::size_t> counts;
        double min_conc = 1.0;
        double min_entropy = 1.0;
        for (std::size_t i = 0; i < a.shots; ++i) {
            const ProtocolResult r = entanglement_swapping(a.seed + i, layer);
            ++counts[static_cast<int>(r.derived.at("outcome"))];
            min_conc = std::min(min_conc, r.derived.at("spin_concurrence"));
            min_entropy = std::min(min_entropy, r.derived.at("spin_entropy"));
        }
        for (int b = 0; b < 4; ++b) {
            d[std::string("freq_") + bell_state_name(static_cast<BellState>(b))] =
                static_cast<double>(counts[b]) / static_cast<double>(a.shots);
        }
        d["shots"] = static_cast<double>(a.shots);
        d["min_spin_concurrence"] = min_conc;
        d["min_spin_entropy"] = min_entropy;
    } else if (a.name == "entanglement-transfer") {
        const PureState in = transfer_input();
        const PureState s = entanglement_transfer(in, layer);
        const std::array<QubitRef, 1> k0 = {mode(0)};
        const std::array<QubitRef, 1> s0 = {spin(0)};
        d["mode_entropy_before"] = entanglement_entropy(in, k0);
        d["mode_entropy_after"] = entanglement_entropy(s, k0);
        d["spin_entropy_before"] = entanglement_entropy(in, s0);
        d["spin_entropy_after"] = entanglement_entropy(s, s0);
    } else if (a.name == "hyper-entangle") {
        const PureState in = hyper_input();
        const PureState s = hyper_entangler(in, layer);
        d["ebits_before"] = entanglement_entropy(in, {spin(0)}) + entanglement_entropy(in, {spin(1)});
        d["spin_spin_ebits_after"] = entanglement_entropy(s, {spin(0)});
        d["mode_mode_ebits_after"] = entanglement_entropy(s, {mode(0)});
        d["spins_vs_modes_entropy_after"] = entanglement_entropy(s, {spin(0), spin(1)});
    } else if (a.name == "stern-gerlach") {
        const auto spin_in = polarized_spin(a.theta0);
        std::vector<PolarizationSample> samples;
        double law_error = 0.0;
        double unpolarized_error = 0.0;
        for (int i = 0; i < 37; ++i) {
            const double theta = 2.0 * pi * i / 36.0;
            const double p = stern_gerlach_p_up(theta, spin_in[0], spin_in[1], layer);
            const double c = std::cos((theta - a.theta0) / 2);
            law_error = std::max(law_error, std::abs(p - c * c));
            unpolarized_error = std::max(unpolarized_error, std::abs(stern_gerlach_p_up_unpolarized(theta, layer) - 0.5));
            // Half-angle view.
            samples.push_back({theta / 2, p});
        }
        const PolarizationFit fit = fit_polarization(samples);
        d["max_law_error"] = law_error;
        d["max_unpolarized_error"] = unpolarized_error;
        d["fit_degree"] = fit.degree;
        d["fit_theta0_half_angle"] = fit.theta0;
        d["fit_residual"] = fit.residual;
    } else if (a.name == "chsh") {
        const PureState bell = entanglement_transfer(transfer_input(), layer);
        const auto &t = kChshOptimalAngles;
        d["S_bell"] = chsh_s(bell, t[0], t[1], t[2], t[3]);
        d["S_product"] = chsh_s(new_register(2), t[0], t[1], t[2], t[3]);
        d["tsirelson_bound"] = 2.0 * std::numbers::sqrt2;
    } else {
        throw UsageError("unknown protocol '" + a.name + "'");
    }
    return d;
}

// --- sweep -----------------------------------------------------------------

int cmd_sweep_sg(double theta0, std::size_t points, bool half_angle, bool unpolarized, const std::string &csv,
                 std::ostream &out) {
    if (points < 2) {
        throw UsageError("--points must be at least 2");
    }
    Rows rows;
    for (const auto &pt : stern_gerlach_sweep(theta0, points, half_angle)) {
        double p = pt.p_up;
        double expected = 0.0;
        if (unpolarized) {
            p = stern_gerlach_p_up_unpolarized(half_angle ? 2 * pt.theta : pt.theta);
            expected = 0.5;
        } else {
            const double c = half_angle ? std::cos(pt.theta - theta0) : std::cos((pt.theta - theta0) / 2);
            expected = c * c;
        }
        rows.push_back({format_csv(pt.theta), format_csv(p), format_csv(expected)});
    }
    emit(csv, csv_table({"theta", "p_up", "expected"}, rows), out);
    return kExitOk;
}

int cmd_sweep_chsh(const std::vector<double> &angles, const std::string &csv, std::ostream &out) {
    if (angles.size() != 4) {
        throw UsageError("--angles expects a,a',b,b'");
    }
    const PureState bell = entanglement_transfer(transfer_input());
    const double a = angles[0], ap = angles[1], b = angles[2], bp = angles[3];
    Rows rows;
    auto row = [&](const char *name, double t1, double t2) {
        rows.push_back({name, format_csv(t1), format_csv(t2), format_csv(chsh_correlation(bell, t1, t2))});
    };
    row("P(a;b)", a, b);
    row("P(a;b')", a, bp);
    row("P(a';b)", ap, b);
    row("P(a';b')", ap, bp);
    rows.push_back({"S", "", "", format_csv(chsh_s(bell, a, ap, b, bp))});
    emit(csv, csv_table({"term", "theta1", "theta2", "value"}, rows), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Spin/mode quantum network simulator and hardware compiler", "spinnet"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Run a netlist on an input state");
    simulate->add_option("netlist", sim.netlist, "Netlist file")->required();
    simulate->add_option("--input", sim.input, "State spec such as u0,d1");
    simulate->add_option("--shots", sim.shots, "Number of sampled runs (0: exact amplitudes)");
    simulate->add_option("--seed", sim.seed, "Seed of shot 0; shot i uses seed + i");
    simulate->add_option("--csv", sim.csv, "Write the table here instead of stdout");

    std::string eq_a, eq_b;
    double eq_tol = kMatrixTol;
    bool eq_diag = false;
    auto *equiv = app.add_subcommand("equiv", "Compare two netlists or circuits up to global phase");
    equiv->add_option("a", eq_a, "Netlist or circuit file")->required();
    equiv->add_option("b", eq_b, "Netlist or circuit file")->required();
    equiv->add_option("--tol", eq_tol, "Entry-wise tolerance");
    equiv->add_flag("--up-to-diagonal", eq_diag, "Also accept A = B D with D a diagonal phase matrix");

    std::vector<double> euler_values;
    auto *synth = app.add_subcommand("synth", "Gate synthesis");
    synth->require_subcommand(1);
    auto *euler = synth->add_subcommand("euler", "Z-X-Z decomposition of a 2x2 unitary");
    euler->add_option("values", euler_values, "re/im of u00 u01 u10 u11")->required()->allow_extra_args();

    std::string lower_in, lower_out, lower_phase = "exact";
    bool lower_no_simplify = false;
    auto *lower = app.add_subcommand("lower", "Lower a gate circuit to a hardware netlist");
    lower->add_option("circuit", lower_in, "Circuit file")->required();
    lower->add_option("--out", lower_out, "Output netlist (stdout when omitted)");
    lower->add_option("--phase", lower_phase, "exact: phase-trimmed; device: bare devices")
        ->check(CLI::IsMember({"exact", "device"}));
    lower->add_flag("--no-simplify", lower_no_simplify, "Keep adjacent mergeable elements");

    ProtocolArgs proto;
    auto *protocol = app.add_subcommand("protocol", "Run a named protocol and print derived quantities");
    protocol->add_option("name", proto.name, "Protocol name")
        ->required()
        ->check(CLI::IsMember({"spin-mode-entangle", "mode-mode-entangle", "entanglement-swap",
                               "entanglement-transfer", "hyper-entangle", "stern-gerlach", "chsh"}));
    protocol->add_option("--seed", proto.seed, "Seed of shot 0; shot i uses seed + i");
    protocol->add_option("--shots", proto.shots, "Repetitions of sampled protocols");
    protocol->add_option("--layer", proto.layer, "gate or hardware")->check(CLI::IsMember({"gate", "hardware"}));
    protocol->add_option("--csv", proto.csv, "Write the table here instead of stdout");
    protocol->add_option("--phi", proto.phi, "Coulomb phase for mode-mode-entangle");
    protocol->add_option("--theta0", proto.theta0, "Input polarization for stern-gerlach");

    auto *sweep = app.add_subcommand("sweep", "Parameter sweeps");
    sweep->require_subcommand(1);
    double sg_theta0 = 0.0;
    std::size_t sg_points = 37;
    bool sg_half = false, sg_unpolarized = false;
    std::string sg_csv;
    auto *sg = sweep->add_subcommand("stern-gerlach", "p_up against the analyzer angle");
    sg->add_option("--theta0", sg_theta0, "Input polarization angle");
    sg->add_option("--points", sg_points, "Number of angles, endpoints included");
    sg->add_flag("--paper-angle", sg_half, "Use half-angles so that p_up = cos^2(theta - theta0)");
    sg->add_flag("--unpolarized", sg_unpolarized, "Unpolarized input");
    sg->add_option("--csv", sg_csv, "Write the table here instead of stdout");
    std::vector<double> chsh_angles(kChshOptimalAngles.begin(), kChshOptimalAngles.end());
    std::string chsh_csv;
    auto *chsh = sweep->add_subcommand("chsh", "Correlations and S on the spin Bell state");
    chsh->add_option("--angles", chsh_angles, "a,a',b,b'")->delimiter(',')->expected(4);
    chsh->add_option("--csv", chsh_csv, "Write the table here instead of stdout");

    std::vector<std::string> argv_store;
    argv_store.emplace_back("spinnet");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : argv_store) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(sim, out);
        }
        if (equiv->parsed()) {
            return cmd_equiv(eq_a, eq_b, eq_tol, eq_diag, out);
        }
        if (euler->parsed()) {
            return cmd_euler(euler_values, out);
        }
        if (lower->parsed()) {
            return cmd_lower(lower_in, lower_out, lower_phase, lower_no_simplify, out);
        }
        if (protocol->parsed()) {
            emit(proto.csv, derived_csv(run_protocol(proto)), out);
            return kExitOk;
        }
        if (sg->parsed()) {
            return cmd_sweep_sg(sg_theta0, sg_points, sg_half, sg_unpolarized, sg_csv, out);
        }
        if (chsh->parsed()) {
            return cmd_sweep_chsh(chsh_angles, chsh_csv, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return e.is_parse_error() ? kExitParse : kExitNumeric;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "usage error: no command\n";
    return kExitUsage;
}

}  // namespace spinnet
