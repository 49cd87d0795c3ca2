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
#include "tspdqes/dqes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tspdqes/encoder.hpp"
#include "tspdqes/error.hpp"
#include "tspdqes/parallel.hpp"

namespace tspdqes {
namespace {

constexpr double kRankTolerance = 1e-9;

std::vector<std::array<int, 3>> triples(int n) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

} // namespace

std::vector<LandscapeRecord> compute_landscape(const IsingPolynomial &ising,
                                               unsigned threads, int cap) {
    const int n = static_cast<int>(ising.spin_count());
    if (n < 3) {
        throw std::invalid_argument("landscape needs at least 3 qubits, got " +
                                    std::to_string(n));
    }
    if (n > cap || n > 63) {
        throw SizeCapError("landscape on " + std::to_string(n) +
                           " qubits exceeds the cap of " + std::to_string(cap));
    }
    const auto compiled = ising.compile();
    const auto scale = static_cast<double>(compiled.scale());
    const auto &mubs = build_mubs_3q();
    const auto positions = triples(n);
    constexpr int per_triple = MubLibrary::kBases * MubLibrary::kElements;
    std::vector<LandscapeRecord> records(positions.size() * per_triple);

    // Only the 8 basis states on the chosen triple carry amplitude, visited
    // in increasing index order like a full-state expectation.
    parallel_for(positions.size(), threads, [&](std::size_t t) {
        const auto &triple = positions[t];
        std::array<double, 8> energies{};
        for (unsigned k = 0; k < 8; ++k) {
            std::uint64_t mask = 0;
            for (unsigned j = 0; j < 3; ++j) {
                if (((k >> j) & 1U) != 0) {
                    mask |= std::uint64_t{1} << triple[j];
                }
            }
            energies[k] = static_cast<double>(compiled.value(mask)) / scale;
        }
        for (int b = 0; b < MubLibrary::kBases; ++b) {
            for (int e = 0; e < MubLibrary::kElements; ++e) {
                const auto &state = mubs.state(b, e);
                double energy = 0.0;
                for (unsigned k = 0; k < 8; ++k) {
                    const double p = std::norm(state[k]);
                    if (p != 0.0) {
                        energy += p * energies[k];
                    }
                }
                auto &record = records[t * per_triple + b * MubLibrary::kElements + e];
                record.positions = triple;
                record.basis = b;
                record.element = e;
                record.energy = energy;
            }
        }
    });

    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return records[a].energy < records[b].energy;
    });
    int rank = 0;
    double previous = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto &record = records[order[i]];
        if (i == 0 || record.energy - previous > kRankTolerance) {
            ++rank;
        }
        previous = record.energy;
        record.rank = rank;
    }
    return records;
}

std::vector<LandscapeRecord> best_k(const std::vector<LandscapeRecord> &records,
                                    std::size_t k) {
    if (k < 1 || k > records.size()) {
        throw std::out_of_range("best_k needs 1 <= k <= " +
                                std::to_string(records.size()) + ", got " +
                                std::to_string(k));
    }
    auto sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const LandscapeRecord &a, const LandscapeRecord &b) {
                         return a.energy < b.energy;
                     });
    sorted.resize(k);
    return sorted;
}

MubInit initial_state_of(const LandscapeRecord &record) {
    return MubInit{record.basis, record.element, record.positions};
}

std::string_view experiment_mode_name(ExperimentMode mode) {
    switch (mode) {
    case ExperimentMode::zeros:
        return "zeros";
    case ExperimentMode::best_mubs:
        return "best-mubs";
    case ExperimentMode::random:
        return "random";
    }
    return "?";
}

ExperimentMode parse_experiment_mode(std::string_view name) {
    if (name == "zeros") {
        return ExperimentMode::zeros;
    }
    if (name == "best-mubs" || name == "best_mubs") {
        return ExperimentMode::best_mubs;
    }
    if (name == "random") {
        return ExperimentMode::random;
    }
    throw std::invalid_argument("unknown init mode '" + std::string(name) +
                                "' (expected zeros, best-mubs or random)");
}

ExperimentReport run_experiment(const ProblemInstance &instance,
                                const ExperimentConfig &config) {
    if (config.runs < 1 && config.mode != ExperimentMode::zeros) {
        throw std::invalid_argument("run count must be positive");
    }
    ExperimentReport report;
    report.config = config;

    const auto ising = to_ising(encode_efficient(instance));
    report.qubits = static_cast<int>(ising.spin_count());
    if (report.qubits > kMaxQubits) {
        throw SizeCapError("VQE on " + std::to_string(report.qubits) +
                           " qubits exceeds the cap of " +
                           std::to_string(kMaxQubits));
    }
    const AnsatzConfig ansatz{report.qubits, config.layers, config.entangler};
    report.parameters = ansatz.parameter_count();

    const auto solution = solve_exact_tsp(instance);
    report.optimal_cost = solution.optimal_cost;
    report.ground_energy =
        ground_states(ising, kDefaultEnumerationCap, config.threads).energy;
    report.target_energy =
        report.optimal_cost ? to_double(instance.penalty_b() * *report.optimal_cost)
                            : to_double(report.ground_energy);

    std::vector<InitialState> inits;
    std::vector<std::optional<LandscapeRecord>> sources;
    switch (config.mode) {
    case ExperimentMode::zeros:
        inits.emplace_back(ZerosInit{});
        sources.emplace_back();
        break;
    case ExperimentMode::best_mubs: {
        const auto landscape = compute_landscape(ising, config.threads);
        for (const auto &record :
             best_k(landscape, static_cast<std::size_t>(config.runs))) {
            inits.emplace_back(initial_state_of(record));
            sources.emplace_back(record);
        }
        break;
    }
    case ExperimentMode::random:
        for (int i = 0; i < config.runs; ++i) {
            inits.emplace_back(RandomInit{config.seed + static_cast<std::uint64_t>(i)});
            sources.emplace_back();
        }
        break;
    }

    report.runs.resize(inits.size());
    parallel_for(inits.size(), config.threads, [&](std::size_t i) {
        auto &run = report.runs[i];
        run.trace = run_vqe(ising, inits[i], ansatz, config.optimizer,
                            report.target_energy);
        run.source = sources[i];
        run.decoded = validate_bitstring(
            instance, Layout::efficient,
            bits_from_mask(run.trace.best_bitstring, ising.spin_count()));
    });

    double total = 0.0;
    for (const auto &run : report.runs) {
        if (run.trace.converged) {
            ++report.converged_count;
            total += run.trace.evaluations_to_converge.value_or(run.trace.evaluations);
        }
    }
    if (report.converged_count > 0) {
        report.mean_evaluations_to_converge = total / report.converged_count;
    }
    return report;
}

} // namespace tspdqes
