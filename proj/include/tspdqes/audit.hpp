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
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tspdqes/encoder.hpp"
#include "tspdqes/oracle.hpp"

namespace tspdqes {

/// Outcome of brute-forcing the full-layout tsp Hamiltonian.
struct AuditReport {
    Penalties penalties;
    bool lucas_condition = false;
    bool safe_condition = false;

    Rational minimum;
    /// Every assignment attaining the minimum, ascending as bit masks.
    std::vector<std::uint64_t> minimizers;
    /// Decoded tour per minimizer; nullopt where the table is invalid.
    std::vector<std::optional<Tour>> minimizer_tours;
    /// Violations of the first minimizer (empty when it decodes).
    std::vector<Violation> first_minimizer_violations;
    /// True iff every minimizer decodes to a valid tour.
    bool minimum_valid = false;

    /// Lowest Hamiltonian value over assignments that decode to tours.
    std::optional<Rational> best_valid_value;
    std::optional<Tour> best_valid_tour;
};

inline constexpr std::size_t kDefaultAuditCap = 24;

/// Throws SizeCapError when N^2 exceeds `cap`.
AuditReport audit_penalties(const ProblemInstance &instance,
                            std::size_t cap = kDefaultAuditCap,
                            unsigned threads = 1);

} // namespace tspdqes
