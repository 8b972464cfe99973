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


#include "spinnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

struct Statement {
    std::size_t line = 0;
    std::vector<std::string> words;
};

std::vector<Statement> tokenize(std::string_view text) {
    std::vector<Statement> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream in{std::string(line)};
        Statement st{line_no, {}};
        for (std::string w; in >> w;) {
            st.words.push_back(w);
        }
        if (!st.words.empty()) {
            out.push_back(std::move(st));
        }
        pos = end + 1;
    }
    return out;
}

double parse_float(const std::string &s, std::size_t line) {
    double v = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (!s.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(v)) {
        throw Error(ErrorCode::MalformedFloat, "malformed number '" + s + "'", line);
    }
    return v;
}

std::size_t parse_index(std::string_view digits, const std::string &word, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::MalformedLine, "malformed index in '" + word + "'", line);
    }
    return v;
}

std::size_t parse_header(const std::vector<Statement> &st) {
    if (st.empty() || st[0].words[0] != "electrons") {
        throw Error(ErrorCode::MissingHeader, "expected 'electrons <n>' first", st.empty() ? 1 : st[0].line);
    }
    const Statement &h = st[0];
    if (h.words.size() != 2) {
        throw Error(ErrorCode::MalformedLine, "expected 'electrons <n>'", h.line);
    }
    const std::size_t n = parse_index(h.words[1], h.words[1], h.line);
    if (n == 0 || n > kMaxElectrons) {
        throw Error(ErrorCode::MalformedLine,
                    "electron count must be between 1 and " + std::to_string(kMaxElectrons), h.line);
    }
    return n;
}

// Positional words followed by key=value attributes.
class Fields {
   public:
    Fields(const Statement &st, std::size_t positional, std::vector<std::string> keys) : st_(st) {
        std::size_t i = 1;
        for (; i < st.words.size() && st.words[i].find('=') == std::string::npos; ++i) {
            pos_.push_back(st.words[i]);
        }
        if (pos_.size() != positional) {
            throw Error(ErrorCode::MalformedLine,
                        "'" + st.words[0] + "' expects " + std::to_string(positional) + " operand(s)", st.line);
        }
        for (; i < st.words.size(); ++i) {
            const std::string &w = st.words[i];
            const auto eq = w.find('=');
            if (eq == std::string::npos) {
                throw Error(ErrorCode::MalformedLine, "operand '" + w + "' after attributes", st.line);
            }
            std::string key = w.substr(0, eq);
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                throw Error(ErrorCode::UnknownKeyword, "unknown attribute '" + key + "' for '" + st.words[0] + "'",
                            st.line);
            }
            if (!attrs_.emplace(key, w.substr(eq + 1)).second) {
                throw Error(ErrorCode::MalformedLine, "attribute '" + key + "' given twice", st.line);
            }
        }
        for (const auto &k : keys) {
            if (!attrs_.count(k)) {
                throw Error(ErrorCode::MalformedLine, "'" + st.words[0] + "' requires " + k + "=", st.line);
            }
        }
    }

    const std::string &positional(std::size_t i) const {
        return pos_[i];
    }
    const std::string &attr(const std::string &k) const {
        return attrs_.at(k);
    }
    double number(const std::string &k) const {
        return parse_float(attr(k), st_.line);
    }

   private:
    const Statement &st_;
    std::vector<std::string> pos_;
    std::map<std::string, std::string> attrs_;
};

std::size_t parse_electron(const std::string &w, std::size_t n, std::size_t line) {
    if (w.size() < 2 || w[0] != 'e') {
        throw Error(ErrorCode::MalformedLine, "expected an electron like e0, got '" + w + "'", line);
    }
    const std::size_t e = parse_index(std::string_view(w).substr(1), w, line);
    if (e >= n) {
        throw Error(ErrorCode::ElectronOutOfRange,
                    "electron " + w + " outside a register of " + std::to_string(n), line);
    }
    return e;
}

QubitRef parse_qubit(const std::string &w, std::size_t n, std::size_t line) {
    if (w.size() < 2 || (w[0] != 's' && w[0] != 'k')) {
        throw Error(ErrorCode::MalformedLine, "expected a qubit like s0 or k1, got '" + w + "'", line);
    }
    const std::size_t e = parse_index(std::string_view(w).substr(1), w, line);
    if (e >= n) {
        throw Error(ErrorCode::ElectronOutOfRange,
                    "qubit " + w + " outside a register of " + std::to_string(n), line);
    }
    return w[0] == 's' ? spin(e) : mode(e);
}

std::optional<GateKind> gate_keyword(const std::string &w) {
    static const std::map<std::string, GateKind> kinds = {
        {"h", GateKind::H},     {"p", GateKind::P},           {"rx", GateKind::Rx},     {"rz", GateKind::Rz},
        {"not", GateKind::NOT}, {"cphase", GateKind::Cphase}, {"cnot", GateKind::CNOT}, {"swap", GateKind::SWAP},
    };
    auto it = kinds.find(w);
    if (it == kinds.end()) {
        return std::nullopt;
    }
    return it->second;
}

const char *angle_key(GateKind kind) {
    return (kind == GateKind::P || kind == GateKind::Cphase) ? "phi" : "theta";
}

}  // namespace

Netlist parse_netlist(std::string_view text) {
    const std::vector<Statement> st = tokenize(text);
    Netlist net{.n_electrons = parse_header(st), .elements = {}};
    const std::size_t n = net.n_electrons;
    for (std::size_t i = 1; i < st.size(); ++i) {
        const Statement &s = st[i];
        const std::string &kw = s.words[0];
        if (kw == "bs") {
            Fields f(s, 1, {"theta"});
            net.elements.push_back(beam_splitter(parse_electron(f.positional(0), n, s.line), f.number("theta")));
        } else if (kw == "abphase") {
            Fields f(s, 1, {"phi"});
            net.elements.push_back(ab_phase(parse_electron(f.positional(0), n, s.line), f.number("phi")));
        } else if (kw == "rashba") {
            Fields f(s, 1, {"axis", "theta", "mode"});
            const std::string &axis = f.attr("axis");
            const std::string &mask = f.attr("mode");
            if (axis != "x" && axis != "z") {
                throw Error(ErrorCode::MalformedLine, "axis must be x or z", s.line);
            }
            if (mask != "both" && mask != "1") {
                throw Error(ErrorCode::MalformedLine, "mode must be both or 1", s.line);
            }
            net.elements.push_back(rashba(parse_electron(f.positional(0), n, s.line),
                                          axis == "x" ? Axis::X : Axis::Z, f.number("theta"),
                                          mask == "both" ? ModeMask::Both : ModeMask::Mode1Only));
        } else if (kw == "coulomb") {
            Fields f(s, 2, {"phi"});
            const std::size_t a = parse_electron(f.positional(0), n, s.line);
            const std::size_t b = parse_electron(f.positional(1), n, s.line);
            if (a == b) {
                throw Error(ErrorCode::DistinctElectronsRequired, "coulomb needs two distinct electrons", s.line);
            }
            net.elements.push_back(coulomb_coupler(a, b, f.number("phi")));
        } else if (kw == "detector") {
            Fields f(s, 1, {"target"});
            const std::string &t = f.attr("target");
            if (t != "mode" && t != "full") {
                throw Error(ErrorCode::MalformedLine, "target must be mode or full", s.line);
            }
            net.elements.push_back(detector(parse_electron(f.positional(0), n, s.line),
                                            t == "mode" ? DetectorTarget::Mode : DetectorTarget::Full));
        } else if (kw == "electrons") {
            throw Error(ErrorCode::MalformedLine, "duplicate 'electrons' header", s.line);
        } else {
            throw Error(ErrorCode::UnknownKeyword, "unknown element '" + kw + "'", s.line);
        }
    }
    return net;
}

std::string print_netlist(const Netlist &netlist) {
    netlist.validate();
    std::ostringstream out;
    out << "electrons " << netlist.n_electrons << '\n';
    for (const auto &el : netlist.elements) {
        const std::string e = "e" + std::to_string(el.electron);
        switch (el.kind) {
            case ElementKind::BeamSplitter:
                out << "bs " << e << " theta=" << format_exact(el.angle);
                break;
            case ElementKind::ABPhase:
                out << "abphase " << e << " phi=" << format_exact(el.angle);
                break;
            case ElementKind::Rashba:
                out << "rashba " << e << " axis=" << (el.axis == Axis::X ? "x" : "z")
                    << " theta=" << format_exact(el.angle) << " mode=" << (el.mask == ModeMask::Both ? "both" : "1");
                break;
            case ElementKind::CoulombCoupler:
                out << "coulomb " << e << " e" << el.electron2 << " phi=" << format_exact(el.angle);
                break;
            case ElementKind::Detector:
                out << "detector " << e << " target=" << (el.detector == DetectorTarget::Mode ? "mode" : "full");
                break;
        }
        out << '\n';
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    const std::vector<Statement> st = tokenize(text);
    Circuit c{.n_electrons = parse_header(st), .ops = {}};
    for (std::size_t i = 1; i < st.size(); ++i) {
        const Statement &s = st[i];
        const std::optional<GateKind> kind = gate_keyword(s.words[0]);
        if (!kind) {
            if (s.words[0] == "electrons") {
                throw Error(ErrorCode::MalformedLine, "duplicate 'electrons' header", s.line);
            }
            throw Error(ErrorCode::UnknownKeyword, "unknown gate '" + s.words[0] + "'", s.line);
        }
        std::vector<std::string> keys;
        if (gate_takes_angle(*kind)) {
            keys.emplace_back(angle_key(*kind));
        }
        Fields f(s, gate_arity(*kind), keys);
        GateOp op{.kind = *kind, .angle = std::nullopt, .targets = {}};
        for (std::size_t t = 0; t < gate_arity(*kind); ++t) {
            op.targets.push_back(parse_qubit(f.positional(t), c.n_electrons, s.line));
        }
        if (op.targets.size() == 2 && op.targets[0] == op.targets[1]) {
            throw Error(ErrorCode::MalformedLine, "gate acts twice on " + to_string(op.targets[0]), s.line);
        }
        if (!keys.empty()) {
            op.angle = f.number(keys[0]);
        }
        c.ops.push_back(std::move(op));
    }
    return c;
}

std::string print_circuit(const Circuit &circuit) {
    circuit.validate();
    std::ostringstream out;
    out << "electrons " << circuit.n_electrons << '\n';
    for (const auto &op : circuit.ops) {
        if (op.kind == GateKind::Identity) {
            continue;
        }
        out << gate_name(op.kind);
        for (const auto &t : op.targets) {
            out << ' ' << to_string(t);
        }
        if (op.angle) {
            out << ' ' << angle_key(op.kind) << '=' << format_exact(*op.angle);
        }
        out << '\n';
    }
    return out.str();
}

bool looks_like_circuit(std::string_view text) {
    const std::vector<Statement> st = tokenize(text);
    return st.size() > 1 && gate_keyword(st[1].words[0]).has_value();
}

PureState parse_state_spec(std::string_view spec, std::size_t n_electrons) {
    if (spec.empty()) {
        return new_register(n_electrons);
    }
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != n_electrons) {
        throw Error(ErrorCode::MalformedLine, "state spec has " + std::to_string(parts.size()) +
                                                  " entries for " + std::to_string(n_electrons) + " electron(s)");
    }
    std::size_t index = 0;
    for (std::size_t e = 0; e < parts.size(); ++e) {
        const std::string &p = parts[e];
        if (p.size() != 2 || (p[0] != 'u' && p[0] != 'd') || (p[1] != '0' && p[1] != '1')) {
            throw Error(ErrorCode::MalformedLine, "state spec entry '" + p + "' is not u0, u1, d0 or d1");
        }
        if (p[0] == 'd') {
            index |= std::size_t{1} << (2 * e);
        }
        if (p[1] == '1') {
            index |= std::size_t{1} << (2 * e + 1);
        }
    }
    return PureState::basis(n_electrons, index);
}

std::string format_exact(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_csv(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_table(const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows) {
    std::string out;
    auto emit = [&out](const std::vector<std::string> &row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i == 0 ? "" : ",") + row[i];
        }
        out += '\n';
    };
    emit(header);
    for (const auto &r : rows) {
        emit(r);
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << content;
}

}  // namespace spinnet
