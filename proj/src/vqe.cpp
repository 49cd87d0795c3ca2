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
#include "tspdqes/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tspdqes {
namespace {

// Same value on every platform, unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

std::string_view entangler_name(Entangler entangler) {
    return entangler == Entangler::ring_rzz ? "ring" : "linear";
}

Entangler parse_entangler(std::string_view name) {
    if (name == "linear" || name == "linear_rzz") {
        return Entangler::linear_rzz;
    }
    if (name == "ring" || name == "ring_rzz") {
        return Entangler::ring_rzz;
    }
    throw std::invalid_argument("unknown entangler '" + std::string(name) +
                                "' (expected linear or ring)");
}

int AnsatzConfig::entangler_count() const {
    if (qubits < 2) {
        return 0;
    }
    if (entangler == Entangler::ring_rzz && qubits > 2) {
        return qubits;
    }
    return qubits - 1;
}

int AnsatzConfig::parameter_count() const {
    return layers * (2 * qubits + entangler_count()) + 2 * qubits;
}

void apply_ansatz(const AnsatzConfig &ansatz, std::span<const double> parameters,
                  QuantumState &state) {
    if (ansatz.qubits != state.qubit_count()) {
        throw std::invalid_argument("ansatz and state qubit counts differ");
    }
    if (ansatz.layers < 0) {
        throw std::invalid_argument("layer count must be non-negative");
    }
    if (parameters.size() != static_cast<std::size_t>(ansatz.parameter_count())) {
        throw std::invalid_argument(
            "ansatz expects " + std::to_string(ansatz.parameter_count()) +
            " parameters, got " + std::to_string(parameters.size()));
    }
    const int n = ansatz.qubits;
    std::size_t next = 0;
    auto rotations = [&] {
        for (int q = 0; q < n; ++q) {
            state.apply_ry(q, parameters[next++]);
            state.apply_rz(q, parameters[next++]);
        }
    };
    for (int layer = 0; layer < ansatz.layers; ++layer) {
        rotations();
        const int pairs = ansatz.entangler_count();
        for (int k = 0; k < pairs; ++k) {
            state.apply_rzz(k, (k + 1) % n, parameters[next++]);
        }
    }
    rotations();
}

std::string describe(const InitialState &init) {
    return std::visit(
        Overloaded{
            [](const ZerosInit &) { return std::string("zeros"); },
            [](const RandomInit &r) {
                return "random(seed=" + std::to_string(r.seed) + ")";
            },
            [](const MubInit &m) {
                return "mub(basis=" + std::to_string(m.basis) +
                       ",element=" + std::to_string(m.element) + ",positions=" +
                       std::to_string(m.positions[0]) + "-" +
                       std::to_string(m.positions[1]) + "-" +
                       std::to_string(m.positions[2]) + ")";
            },
        },
        init);
}

QuantumState prepare_initial_state(const InitialState &init, int qubits) {
    return std::visit(
        Overloaded{
            [&](const ZerosInit &) { return QuantumState(qubits); },
            [&](const RandomInit &r) {
                QuantumState state(qubits);
                std::mt19937_64 rng(r.seed);
                for (int q = 0; q < qubits; ++q) {
                    const double alpha = std::numbers::pi * unit_uniform(rng);
                    const double beta = 2.0 * std::numbers::pi * unit_uniform(rng);
                    state.apply_ry(q, alpha);
                    state.apply_rz(q, beta);
                }
                return state;
            },
            [&](const MubInit &m) {
                if (m.basis < 0 || m.basis >= MubLibrary::kBases || m.element < 0 ||
                    m.element >= MubLibrary::kElements) {
                    throw std::invalid_argument("MUB index out of range");
                }
                return embed_state(build_mubs_3q().state(m.basis, m.element),
                                   m.positions, qubits);
            },
        },
        init);
}

bool within_convergence_tolerance(double energy, double target) {
    return std::abs(energy - target) <= 1e-6 * std::max(1.0, std::abs(target));
}

VqeTrace run_vqe(const IsingPolynomial &ising, const InitialState &init,
                 const AnsatzConfig &ansatz, const OptimizerConfig &optimizer,
                 std::optional<double> target_energy) {
    const int n = static_cast<int>(ising.spin_count());
    if (ansatz.qubits != n) {
        throw std::invalid_argument("ansatz qubit count does not match the "
                                    "Hamiltonian");
    }
    const DiagonalHamiltonian hamiltonian(ising);
    const QuantumState start = prepare_initial_state(init, n);

    auto objective = [&](std::span<const double> parameters) {
        QuantumState state = start;
        apply_ansatz(ansatz, parameters, state);
        return hamiltonian.expectation(state);
    };
    std::vector<double> zeros(static_cast<std::size_t>(ansatz.parameter_count()),
                              0.0);
    auto result = optimize(objective, std::move(zeros), optimizer);

    VqeTrace trace;
    trace.init = init;
    trace.energies = std::move(result.history);
    trace.initial_energy = trace.energies.front();
    trace.final_energy = result.best_value;
    trace.final_parameters = std::move(result.best_parameters);
    trace.evaluations = result.evaluations;
    QuantumState final_state = start;
    apply_ansatz(ansatz, trace.final_parameters, final_state);
    trace.best_bitstring = final_state.most_probable();
    if (target_energy) {
        trace.converged = within_convergence_tolerance(trace.final_energy, *target_energy);
        for (std::size_t i = 0; i < trace.energies.size(); ++i) {
            if (within_convergence_tolerance(trace.energies[i], *target_energy)) {
                trace.evaluations_to_converge = static_cast<int>(i) + 1;
                break;
            }
        }
    }
    return trace;
}

} // namespace tspdqes
