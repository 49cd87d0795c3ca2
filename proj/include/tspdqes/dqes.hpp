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
 * Partial DQES: energies of every 3-qubit MUB state embedded on every qubit
 * triple (other qubits in |0>), best-k selection and VQE batches started
 * from zeros, best MUB states or random product states.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tspdqes/graph.hpp"
#include "tspdqes/ising.hpp"
#include "tspdqes/oracle.hpp"
#include "tspdqes/vqe.hpp"

namespace tspdqes {

struct LandscapeRecord {
    std::array<int, 3> positions{};
    int basis = 0;
    int element = 0;
    double energy = 0.0;
    /// Dense rank of the energy, 1 for the lowest; energies within 1e-9 of
    /// their predecessor in sorted order share a rank.
    int rank = 0;
};

inline constexpr int kMaxLandscapeQubits = 24;

/**
 * C(n,3) * 72 records ordered by positions (lexicographic), then basis,
 * then element. Throws SizeCapError above `cap` qubits and
 * std::invalid_argument below 3.
 */
std::vector<LandscapeRecord> compute_landscape(const IsingPolynomial &ising,
                                               unsigned threads = 1,
                                               int cap = kMaxLandscapeQubits);

/// The k lowest-energy records; equal energies keep landscape order.
std::vector<LandscapeRecord> best_k(const std::vector<LandscapeRecord> &records,
                                    std::size_t k);

MubInit initial_state_of(const LandscapeRecord &record);

enum class ExperimentMode { zeros, best_mubs, random };

std::string_view experiment_mode_name(ExperimentMode mode);
ExperimentMode parse_experiment_mode(std::string_view name);

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::zeros;
    /// Number of runs for best_mubs and random; zeros always runs once.
    int runs = 10;
    int layers = 2;
    Entangler entangler = Entangler::linear_rzz;
    OptimizerConfig optimizer;
    /// Random run i uses seed + i.
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct ExperimentRun {
    VqeTrace trace;
    /// Landscape record the run started from (best_mubs only).
    std::optional<LandscapeRecord> source;
    /// Decode of the final most probable bitstring.
    BitstringCheck decoded;
};

struct ExperimentReport {
    ExperimentConfig config;
    int qubits = 0;
    int parameters = 0;
    std::optional<Rational> optimal_cost;
    Rational ground_energy{0};
    /// B * optimal cost, or the ground energy when no tour exists.
    double target_energy = 0.0;
    std::vector<ExperimentRun> runs;
    int converged_count = 0;
    /// Mean evaluations-to-target over converged runs.
    std::optional<double> mean_evaluations_to_converge;
};

/// Efficient layout, Ising form, then the VQE batch.
ExperimentReport run_experiment(const ProblemInstance &instance,
                                const ExperimentConfig &config);

} // namespace tspdqes
