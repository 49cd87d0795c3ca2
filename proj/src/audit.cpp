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
#include "tspdqes/audit.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "tspdqes/error.hpp"
#include "tspdqes/parallel.hpp"

namespace tspdqes {
namespace {

// Quick one-hot screen on the N x N full table before full validation.
bool is_permutation_table(std::uint64_t mask, int n) {
    const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
    std::uint64_t columns = 0;
    for (int v = 0; v < n; ++v) {
        const auto row = (mask >> (v * n)) & row_mask;
        if (std::popcount(row) != 1 || (columns & row) != 0) {
            return false;
        }
        columns |= row;
    }
    return true;
}

} // namespace

AuditReport audit_penalties(const ProblemInstance &instance, std::size_t cap,
                            unsigned threads) {
    const int n = instance.node_count();
    const std::size_t bits = variable_count(Layout::full, n);
    if (bits > cap || bits >= 64) {
        throw SizeCapError("audit enumerates 2^" + std::to_string(bits) +
                           " assignments, above the cap of 2^" +
                           std::to_string(cap));
    }
    const auto poly = encode_tsp_hamiltonian(instance);
    const auto compiled = poly.compile();
    const std::size_t states = std::size_t{1} << bits;
    std::vector<std::int64_t> values(states);
    parallel_for(states, threads,
                 [&](std::size_t z) { values[z] = compiled.value(z); });

    AuditReport report;
    report.penalties = {instance.penalty_a(), instance.penalty_b()};
    report.lucas_condition = satisfies_lucas_condition(instance);
    report.safe_condition = satisfies_safe_condition(instance);

    const auto best = *std::min_element(values.begin(), values.end());
    report.minimum = compiled.exact(best);
    std::int64_t best_valid = std::numeric_limits<std::int64_t>::max();
    std::uint64_t best_valid_mask = 0;
    for (std::size_t z = 0; z < states; ++z) {
        if (values[z] == best) {
            report.minimizers.push_back(z);
        }
        if (values[z] < best_valid && is_permutation_table(z, n)) {
            const auto check =
                validate_bitstring(instance, Layout::full, bits_from_mask(z, bits));
            if (check.valid()) {
                best_valid = values[z];
                best_valid_mask = z;
            }
        }
    }
    report.minimum_valid = true;
    for (auto z : report.minimizers) {
        auto check =
            validate_bitstring(instance, Layout::full, bits_from_mask(z, bits));
        if (report.minimizer_tours.empty()) {
            report.first_minimizer_violations = check.violations;
        }
        report.minimum_valid = report.minimum_valid && check.valid();
        report.minimizer_tours.push_back(std::move(check.tour));
    }
    if (best_valid != std::numeric_limits<std::int64_t>::max()) {
        report.best_valid_value = compiled.exact(best_valid);
        report.best_valid_tour =
            validate_bitstring(instance, Layout::full,
                               bits_from_mask(best_valid_mask, bits))
                .tour;
    }
    return report;
}

} // namespace tspdqes
