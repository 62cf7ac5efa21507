// Copyright 2026 The pauli-dla Authors
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

#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdla/pauli.hpp"

namespace pdla {

class InstanceParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator list read from text: one Pauli per line, '#' starts a comment
/// line, and an optional "n=<count>" header pads every word to n qubits.
struct Instance {
  std::size_t qubits = 0;
  std::vector<PauliString> generators;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance read_instance(const std::string& path);
std::string format_instance(std::span<const PauliString> generators, const std::string& comment = "");

// Generator families. Qubits, edges and subsets are 1-based.

/// iX_l on every qubit and iZ_jZ_{j+1} along the path.
std::vector<PauliString> qaoa_path(std::size_t n);
/// The path family plus the closing iZ_1Z_n.
std::vector<PauliString> qaoa_cycle(std::size_t n);
/// iX_l on every qubit and iZ_jZ_k per interaction edge {j, k}.
std::vector<PauliString> qaoa_graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);
/// iX_l and iZ_l on every qubit, then iZ_S for every subset S.
std::vector<PauliString> parity_basis(std::size_t n, std::span<const std::vector<std::size_t>> subsets);
/// Uniform anti-Hermitian Paulis other than multiples of the identity.
std::vector<PauliString> random_generators(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// "1-2,2-3" -> {{1,2},{2,3}}.
std::vector<std::pair<std::size_t, std::size_t>> parse_edge_list(const std::string& text);
/// "1,2,3;3,4" -> {{1,2,3},{3,4}}.
std::vector<std::vector<std::size_t>> parse_subsets(const std::string& text);

}  // namespace pdla
