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
 * Dense state vectors, a small gate set, the 3-qubit mutually unbiased
 * bases and expectation values of diagonal (Ising) Hamiltonians.
 *
 * Bit i of an amplitude index is qubit i, which is variable i of the
 * Hamiltonian's variable order (bit 0 least significant).
 */
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tspdqes/ising.hpp"

namespace tspdqes {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;

class QuantumState {
  public:
    /// |0...0> on n qubits.
    explicit QuantumState(int qubits);
    /// Computational basis state |index>.
    static QuantumState basis(int qubits, std::uint64_t index);
    /// Throws std::invalid_argument when the size is not 2^n or the norm is
    /// off by more than tolerance.
    static QuantumState from_amplitudes(std::vector<Complex> amplitudes,
                                        double tolerance = 1e-10);

    [[nodiscard]] int qubit_count() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] double norm() const;
    /// Index of the largest probability, lowest index on ties.
    [[nodiscard]] std::uint64_t most_probable() const;

    void apply_h(int q);
    void apply_s(int q);
    void apply_x(int q);
    void apply_cx(int control, int target);
    void apply_cz(int a, int b);
    /// exp(-i theta Y / 2)
    void apply_ry(int q, double theta);
    /// exp(-i theta Z / 2)
    void apply_rz(int q, double theta);
    /// exp(-i theta Z_a Z_b / 2)
    void apply_rzz(int a, int b, double theta);

  private:
    QuantumState(int qubits, std::vector<Complex> amplitudes);
    void check_qubit(int q) const;
    void check_pair(int a, int b) const;

    int qubits_;
    std::vector<Complex> amplitudes_;
};

enum class GateKind { h, s, x, cx, cz, ry, rz, rzz };

struct Gate {
    GateKind kind;
    std::array<int, 2> qubits{0, 0};
    double angle = 0.0;
};

void apply_gate(QuantumState &state, const Gate &gate);
[[nodiscard]] QuantumState with_gate(QuantumState state, const Gate &gate);

/// 3-qubit Pauli X^x Z^z, made Hermitian by the phase i^{|x & z|}. Bit j of
/// x / z acts on qubit j.
struct PauliString {
    std::uint8_t x = 0;
    std::uint8_t z = 0;

    friend bool operator==(const PauliString &, const PauliString &) = default;
};

/// "XZI": character j acts on qubit j.
std::string format_pauli(PauliString pauli);
PauliString parse_pauli(std::string_view text);
bool commutes(PauliString a, PauliString b);
/// Applies the Hermitian Pauli to a 3-qubit state.
std::array<Complex, 8> apply_pauli(PauliString pauli,
                                   const std::array<Complex, 8> &state);

struct MubBasis {
    std::array<PauliString, 3> generators;
    /// The 7 non-identity elements of the stabilizer group.
    std::array<PauliString, 7> stabilizers;
    /// Element k has eigenvalue (-1)^{bit j of k} under generator j.
    std::array<std::array<Complex, 8>, 8> states;

    [[nodiscard]] std::string label() const;
};

/**
 * @brief The 9 mutually unbiased bases of 3 qubits.
 *
 * Each basis is the joint eigenbasis of one class in a fixed partition of
 * the 63 non-identity Paulis into maximal commuting sets. Basis 0 is the
 * computational basis, so element 7 of basis 0 is |111>. Each state's
 * global phase makes its first nonzero amplitude real and positive.
 */
class MubLibrary {
  public:
    static constexpr int kBases = 9;
    static constexpr int kElements = 8;

    [[nodiscard]] const MubBasis &basis(int index) const {
        return bases_.at(static_cast<std::size_t>(index));
    }
    [[nodiscard]] const std::array<Complex, 8> &state(int basis_index,
                                                      int element) const {
        return basis(basis_index).states.at(static_cast<std::size_t>(element));
    }

  private:
    friend const MubLibrary &build_mubs_3q();
    std::array<MubBasis, kBases> bases_{};
};

/// Built once on first use from the embedded class table.
const MubLibrary &build_mubs_3q();

/// Generator and member strings of the embedded class table, one entry per
/// basis, in the order of data/mub3_classes.txt.
struct MubClassRow {
    std::array<std::string_view, 3> generators;
    std::array<std::string_view, 7> members;
};
std::span<const MubClassRow> mub_class_table();

/// Places a 3-qubit state on `positions` (local bit j -> qubit positions[j])
/// with every other qubit in |0>.
QuantumState embed_state(const std::array<Complex, 8> &local,
                         const std::array<int, 3> &positions, int qubits);

/// Sum over nonzero amplitudes of |a_z|^2 * energy_of_bitstring(z).
double expectation(const IsingPolynomial &ising, const QuantumState &state);

/// Precomputed diagonal of an Ising Hamiltonian for repeated expectations.
class DiagonalHamiltonian {
  public:
    explicit DiagonalHamiltonian(const IsingPolynomial &ising);

    [[nodiscard]] int qubit_count() const noexcept { return qubits_; }
    [[nodiscard]] std::span<const double> energies() const noexcept {
        return energies_;
    }
    [[nodiscard]] double expectation(const QuantumState &state) const;

  private:
    int qubits_;
    std::vector<double> energies_;
};

} // namespace tspdqes
