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
 * Variational eigensolver on the dense simulator: an identity-at-zero
 * rotation/ZZ ansatz, a derivative-free trust-region optimizer and
 * per-evaluation energy traces.
 */
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tspdqes/ising.hpp"
#include "tspdqes/quantum.hpp"

namespace tspdqes {

enum class Entangler { linear_rzz, ring_rzz };

std::string_view entangler_name(Entangler entangler);
Entangler parse_entangler(std::string_view name);

/**
 * @brief Layered ansatz.
 *
 * Each layer applies Ry(a_q) Rz(b_q) to every qubit, then Rzz(c_k) on the
 * pairs (q, q+1) (plus (n-1, 0) for the ring). A last Ry/Rz layer follows.
 * Every gate is exp(-i theta G / 2), so all-zero parameters are the
 * identity and the initial state is left untouched.
 */
struct AnsatzConfig {
    int qubits = 0;
    int layers = 2;
    Entangler entangler = Entangler::linear_rzz;

    [[nodiscard]] int entangler_count() const;
    [[nodiscard]] int parameter_count() const;
};

void apply_ansatz(const AnsatzConfig &ansatz, std::span<const double> parameters,
                  QuantumState &state);

struct OptimizerConfig {
    double rho_start = 0.5;
    double rho_end = 1e-4;
    int max_evaluations = 2000;
};

struct OptimizationResult {
    std::vector<double> best_parameters;
    double best_value = 0.0;
    /// Best value seen after each evaluation (non-increasing).
    std::vector<double> history;
    int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/**
 * @brief Derivative-free minimization with linear models on a simplex.
 *
 * Keeps n+1 interpolation points, fits the linear model through them and
 * steps a distance rho downhill from the best point. rho starts at
 * rho_start and shrinks toward rho_end when steps stop paying off; the
 * simplex is repaired whenever it gets too long or too flat. The search is
 * fully deterministic.
 */
OptimizationResult optimize(const Objective &objective,
                            std::vector<double> initial,
                            const OptimizerConfig &config);

struct ZerosInit {};
struct RandomInit {
    std::uint64_t seed = 0;
};
struct MubInit {
    int basis = 0;
    int element = 0;
    std::array<int, 3> positions{0, 1, 2};
};
using InitialState = std::variant<ZerosInit, RandomInit, MubInit>;

std::string describe(const InitialState &init);

/// |0...0>, a seeded product of Ry(alpha) Rz(beta) rotations with
/// alpha ~ U[0, pi) and beta ~ U[0, 2 pi), or an embedded MUB state.
QuantumState prepare_initial_state(const InitialState &init, int qubits);

struct VqeTrace {
    InitialState init;
    /// Best energy after each evaluation; entry 0 is the initial state.
    std::vector<double> energies;
    double initial_energy = 0.0;
    double final_energy = 0.0;
    std::vector<double> final_parameters;
    std::uint64_t best_bitstring = 0;
    int evaluations = 0;
    bool converged = false;
    /// 1-based evaluation count at which the target was first reached.
    std::optional<int> evaluations_to_converge;
};

/// |energy - target| <= 1e-6 * max(1, |target|).
bool within_convergence_tolerance(double energy, double target);

/// When `target_energy` is given, `converged` records whether the final
/// energy reaches it.
VqeTrace run_vqe(const IsingPolynomial &ising, const InitialState &init,
                 const AnsatzConfig &ansatz, const OptimizerConfig &optimizer,
                 std::optional<double> target_energy = std::nullopt);

} // namespace tspdqes
