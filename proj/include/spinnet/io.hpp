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

#include <string>
#include <string_view>
#include <vector>

#include "spinnet/gates.hpp"
#include "spinnet/hardware.hpp"
#include "spinnet/state.hpp"

namespace spinnet {

// Netlist text format, one element per line, '#' to end of line is a comment:
//
//   electrons <n>                                  (first non-comment line)
//   bs e<i> theta=<float>
//   abphase e<i> phi=<float>
//   rashba e<i> axis=<x|z> theta=<float> mode=<both|1>
//   coulomb e<i> e<j> phi=<float>
//   detector e<i> target=<mode|full>
//
// Circuit text format uses the same header and line discipline:
//
//   h|not <q>          rx|rz <q> theta=<float>       p <q> phi=<float>
//   cnot|swap <q> <q>  cphase <q> <q> phi=<float>
//
// with qubits written s<i> (spin) or k<i> (mode). Angles are radians.
// Errors are spinnet::Error with a parse error code and a 1-based line.

Netlist parse_netlist(std::string_view text);
std::string print_netlist(const Netlist &netlist);

Circuit parse_circuit(std::string_view text);
std::string print_circuit(const Circuit &circuit);

/// True when the first statement after the header is a gate keyword.
bool looks_like_circuit(std::string_view text);

/// "u0,d1": per electron spin u|d and mode 0|1. An empty spec means every
/// electron in u0.
PureState parse_state_spec(std::string_view spec, std::size_t n_electrons);

/// Shortest text that reads back to the same double.
std::string format_exact(double v);

/// printf("%.12g").
std::string format_csv(double v);

/// Header row plus rows, comma-separated, LF line endings.
std::string csv_table(const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace spinnet
