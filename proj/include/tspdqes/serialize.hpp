// Copyright 2026 The tspdqes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Text formats for polynomials, spectra, landscapes, traces and reports.
 *
 * Exact values are written as JSON integers when integral and as "p/q"
 * strings otherwise. Doubles use the shortest round-trip representation.
 * Bitstrings list qubit 0 first. Every JSON document ends with a newline.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tspdqes/audit.hpp"
#include "tspdqes/dqes.hpp"
#include "tspdqes/encoder.hpp"
#include "tspdqes/graph.hpp"
#include "tspdqes/ising.hpp"
#include "tspdqes/oracle.hpp"
#include "tspdqes/vqe.hpp"

namespace tspdqes {

/// Shortest text that reads back as the same double.
std::string format_double(double value);

/// {"layout", "nodes", "variables", "constant",
///  "linear": [[[v,t], c], ...], "quadratic": [[[v,t], [v,t], c], ...]}
std::string polynomial_to_json(const PseudoBooleanPolynomial &poly);
PseudoBooleanPolynomial polynomial_from_json(std::string_view text);

/// {"layout", "nodes", "n", "constant",
///  "fields": [[i, h], ...], "couplings": [[i, j, J], ...]}
std::string ising_to_json(const IsingPolynomial &ising);
IsingPolynomial ising_from_json(std::string_view text);

/// "bitstring,energy" header, one row per entry in the given order.
std::string spectrum_to_csv(const IsingPolynomial &ising,
                            std::span<const SpectrumEntry> entries);

/// "index,positions,basis,element,energy" header; positions as "a-b-c".
std::string landscape_to_csv(std::span<const LandscapeRecord> records);

/// {"init", "energies", "final_energy", "converged", "best_bitstring", "seed",
///  plus "initial_energy", "evaluations", "evaluations_to_converge",
///  "final_parameters"}
std::string trace_to_json(const VqeTrace &trace, int qubits,
                          std::uint64_t seed);

std::string solution_to_json(const ProblemInstance &instance,
                             const TspSolution &solution);

std::string audit_to_json(const ProblemInstance &instance,
                          const AuditReport &report);

/// `timestamp` is emitted only when given, so reports stay byte-identical
/// across reruns otherwise.
std::string experiment_to_json(const ExperimentReport &report,
                               const std::optional<std::string> &timestamp);

} // namespace tspdqes
