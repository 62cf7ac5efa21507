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

#include "pdla/instance.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace pdla {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InstanceParseError("malformed " + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(sep, start);
    const auto piece = trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (!piece.empty()) out.push_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

PauliString letters(std::size_t n, std::span<const std::size_t> qubits, char letter) {
  BitVector x(n);
  BitVector z(n);
  for (std::size_t q : qubits) {
    if (q == 0 || q > n) throw std::invalid_argument("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    if (letter == 'X') x.set(q - 1);
    if (letter == 'Z') z.set(q - 1);
  }
  // A pure X or Z string times i squares to -1.
  return PauliString(std::move(x), std::move(z), 1);
}

void require_qubits(std::size_t n) {
  if (n == 0) throw std::invalid_argument("need at least one qubit");
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance out;
  std::optional<std::size_t> header;
  std::vector<std::pair<std::size_t, std::string>> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (text.starts_with("n=") || text.starts_with("n =")) {
      if (header || !words.empty()) {
        throw InstanceParseError("line " + std::to_string(line_no) + ": header must precede generators");
      }
      header = parse_count(trim(text.substr(text.find('=') + 1)), "qubit count");
      continue;
    }
    words.emplace_back(line_no, std::string(text));
  }

  std::size_t n = header.value_or(0);
  if (!header) {
    for (const auto& [no, w] : words) {
      const std::size_t letters_len = w.size() - std::min(w.find_first_not_of("+-i"), w.size());
      if (n != 0 && letters_len != n) {
        throw InstanceParseError("line " + std::to_string(no) + ": '" + w + "' has " + std::to_string(letters_len) +
                                 " letters, expected " + std::to_string(n) + " (add an n= header to pad)");
      }
      n = letters_len;
    }
  }
  out.qubits = n;
  for (const auto& [no, w] : words) {
    try {
      out.generators.push_back(parse_pauli(w, n));
    } catch (const PauliParseError& e) {
      throw InstanceParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceParseError("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string format_instance(std::span<const PauliString> generators, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  if (!generators.empty()) out += "n=" + std::to_string(generators.front().qubits()) + "\n";
  for (const auto& g : generators) out += render_pauli(g) + "\n";
  return out;
}

std::vector<PauliString> qaoa_path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 1; j < n; ++j) edges.emplace_back(j, j + 1);
  return qaoa_graph(n, edges);
}

std::vector<PauliString> qaoa_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 qubits");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 1; j < n; ++j) edges.emplace_back(j, j + 1);
  edges.emplace_back(1, n);
  return qaoa_graph(n, edges);
}

std::vector<PauliString> qaoa_graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  require_qubits(n);
  std::vector<PauliString> out;
  for (std::size_t l = 1; l <= n; ++l) out.push_back(letters(n, std::array{l}, 'X'));
  for (const auto& [j, k] : edges) {
    if (j == k) throw std::invalid_argument("interaction edge " + std::to_string(j) + "-" + std::to_string(k) + " is a loop");
    out.push_back(letters(n, std::array{j, k}, 'Z'));
  }
  return out;
}

std::vector<PauliString> parity_basis(std::size_t n, std::span<const std::vector<std::size_t>> subsets) {
  require_qubits(n);
  std::vector<PauliString> out;
  for (std::size_t l = 1; l <= n; ++l) {
    out.push_back(letters(n, std::array{l}, 'X'));
    out.push_back(letters(n, std::array{l}, 'Z'));
  }
  for (const auto& s : subsets) {
    if (s.empty()) throw std::invalid_argument("empty parity subset");
    out.push_back(letters(n, s, 'Z'));
  }
  return out;
}

std::vector<PauliString> random_generators(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  require_qubits(n);
  std::vector<PauliString> out;
  out.reserve(m);
  while (out.size() < m) {
    BitVector x(n);
    BitVector z(n);
    for (std::size_t j = 0; j < n; j += 32) {
      const std::uint64_t bits = rng();
      for (std::size_t b = 0; b < 32 && j + b < n; ++b) {
        if ((bits >> (2 * b)) & 1U) x.set(j + b);
        if ((bits >> (2 * b + 1)) & 1U) z.set(j + b);
      }
    }
    if (x.is_zero() && z.is_zero()) continue;
    const unsigned sign = (rng() & 1U) ? 2U : 0U;
    // Phase parity must differ from x.z for the string to square to -1.
    const unsigned phase = (dot(x, z) ? 0U : 1U) + sign;
    out.emplace_back(std::move(x), std::move(z), phase);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw InstanceParseError("malformed edge '" + std::string(item) + "'");
    out.emplace_back(parse_count(trim(item.substr(0, dash)), "edge endpoint"),
                     parse_count(trim(item.substr(dash + 1)), "edge endpoint"));
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_subsets(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  for (auto group : split(text, ';')) {
    std::vector<std::size_t> subset;
    for (auto item : split(group, ',')) subset.push_back(parse_count(item, "subset member"));
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace pdla
