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

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdla/bit_vector.hpp"
#include "pdla/graph.hpp"
#include "pdla/pauli.hpp"
#include "pdla/quadratic_space.hpp"

namespace pdla {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for generators that cannot enter a dynamical Lie algebra: the
/// identity (up to phase), Hermitian strings in strict mode, empty input.
class InvalidGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SummandKind { SU, SP, SO_POW2, SO_N };

/// 2^r copies of one simple (or abelian) algebra.
///
/// | kind    | algebra       | dimension          |
/// |---------|---------------|--------------------|
/// | SU      | su(2^k)       | 4^k - 1            |
/// | SP      | sp(2^(k-1))   | 2^(k-1) (2^k + 1)  |
/// | SO_POW2 | so(2^k)       | 2^(k-1) (2^k - 1)  |
/// | SO_N    | so(k)         | k (k - 1) / 2      |
struct Summand {
  SummandKind kind = SummandKind::SO_N;
  std::size_t k = 0;
  std::size_t r = 0;

  BigInt dimension() const;
  BigInt copies() const;
  BigInt total_dimension() const { return copies() * dimension(); }
  /// e.g. "su(8)", "sp(4)", "so(6)"; exponents past 2^20 print as "su(2^k)".
  std::string label() const;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

enum class Branch { Line, Natural, Isolated };
enum class Resolution { Formula, Closure };

const char* to_string(SummandKind kind);
const char* to_string(Branch branch);
const char* to_string(Resolution resolution);

struct ComponentDiagnostics {
  std::optional<std::size_t> omega_size;
  std::optional<std::size_t> omega_prime_size;
  std::size_t dim_W = 0;
  std::optional<std::size_t> dim_W0;
  std::optional<std::size_t> rad_f_dim;
  std::optional<std::size_t> rad_q_dim;
  std::optional<FormType> form_type;
  std::optional<Resolution> resolved_by;
};

struct ComponentReport {
  /// Indices into the caller's generator list.
  std::vector<std::size_t> generators;
  Branch branch = Branch::Isolated;
  Summand summand;
  ComponentDiagnostics diagnostics;
  std::optional<RootCertificate> root;
};

struct Classification {
  std::size_t qubits = 0;
  /// Generators after lifting and deduplication, in input order.
  std::vector<PauliString> generators;
  /// Position of each kept generator in the original input.
  std::vector<std::size_t> input_index;
  std::vector<ComponentReport> components;
  std::vector<Summand> canonical;
  BigInt total_dim = 0;
  std::vector<std::string> warnings;

  /// Canonical decomposition, e.g. "so(6) ⊕ so(6)" or "su(2)^⊕8".
  std::string canonical_string() const;
};

struct ClassifyOptions {
  /// Reject Hermitian generators instead of multiplying them by i.
  bool strict = false;
  /// Largest point set the classifier will enumerate when resolving the
  /// standard-embedding case by closure.
  std::size_t closure_cap = 1'000'000;
};

Classification classify(std::span<const PauliString> generators, const ClassifyOptions& options = {});

/// `gens` are the vectors of one connected component, in component order.
ComponentReport classify_line_component(std::span<const BitVector> gens, const QuadraticForm& form,
                                        const RootCertificate& cert, std::size_t closure_cap = 1'000'000);
ComponentReport classify_natural_component(std::span<const BitVector> gens, const QuadraticForm& form);

/// Rewrites so(3), so(4), so(5), so(6) and sp(1) into their preferred
/// labels, writes so(2^k) as so(N) while N is printable, and sorts by
/// dimension. Idempotent.
std::vector<Summand> canonicalize(std::span<const Summand> summands);
std::string render_summands(std::span<const Summand> summands);

/// First 6-subset (lexicographic) with a connected frustration graph whose
/// span is a nondegenerate 6-space of minus type.
std::optional<std::array<std::size_t, 6>> forbidden_witness(std::span<const BitVector> gens,
                                                             const QuadraticForm& form);

struct FullGenerationReport {
  bool full = false;
  bool connected = false;
  bool spans = false;
  bool witness = false;
};

/// Whether the generators produce all of su(2^n).
FullGenerationReport check_generates_full(std::span<const PauliString> generators, std::size_t qubits);

/// Partition of `points` by cosets of Rad(Q_W), W the span of the points.
/// Classes are ordered by their first member.
std::vector<std::vector<std::size_t>> equiv_classes(std::span<const BitVector> points,
                                                    const QuadraticForm& form);

}  // namespace pdla
