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

#include <optional>
#include <span>
#include <string>

#include "pdla/classifier.hpp"
#include "pdla/oracle.hpp"
#include "pdla/pauli.hpp"

namespace pdla {

/// JSON report with keys n, generators, warnings, components, decomposition,
/// canonical, canonical_summands, total_dim and (when given) verified.
std::string json_report(std::span<const PauliString> input, const Classification& c,
                        const std::optional<VerificationReport>& verification = std::nullopt);

/// Human-readable summary of the same report.
std::string plain_report(std::span<const PauliString> input, const Classification& c,
                         const std::optional<VerificationReport>& verification = std::nullopt);

}  // namespace pdla
