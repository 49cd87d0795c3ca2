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
 * Spin form of the binary Hamiltonians.
 *
 * Convention: bit 0 <-> |0> <-> s = +1 and bit 1 <-> |1> <-> s = -1, i.e.
 * x = (1 - s) / 2, matching Pauli-Z eigenvalues. The constant term is kept,
 * so Ising energies equal binary values exactly.
 */
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tspdqes/encoder.hpp"
#include "tspdqes/rational.hpp"
#include "tspdqes/scaled.hpp"

namespace tspdqes {

class IsingPolynomial {
  public:
    using FieldTerms = std::map<std::size_t, Rational>;
    using CouplingTerms = std::map<std::pair<std::size_t, std::size_t>, Rational>;

    IsingPolynomial(Layout layout, int node_count, Rational constant,
                    FieldTerms fields, CouplingTerms couplings);

    [[nodiscard]] std::size_t spin_count() const noexcept { return order_.size(); }
    [[nodiscard]] Layout layout() const noexcept { return layout_; }
    [[nodiscard]] int node_count() const noexcept { return node_count_; }
    [[nodiscard]] const std::vector<VariableIndex> &variable_order() const noexcept {
        return order_;
    }
    [[nodiscard]] const Rational &constant() const noexcept { return constant_; }
    [[nodiscard]] const FieldTerms &fields() const noexcept { return fields_; }
    [[nodiscard]] const CouplingTerms &couplings() const noexcept {
        return couplings_;
    }

    /// Energy on spins s_i in {-1, +1}.
    [[nodiscard]] Rational evaluate_spins(std::span<const int> spins) const;
    [[nodiscard]] ScaledQuadratic compile() const;

  private:
    Layout layout_;
    int node_count_;
    std::vector<VariableIndex> order_;
    Rational constant_;
    FieldTerms fields_;
    CouplingTerms couplings_;
};

/// Exact substitution x = (1 - s) / 2 with like terms gathered.
/// Throws ValidationError if the polynomial has degree above 2.
IsingPolynomial to_ising(const PseudoBooleanPolynomial &poly);

/// Energy of a computational-basis state, s_i = 1 - 2 bit_i.
Rational energy_of_bitstring(const IsingPolynomial &ising,
                             std::span<const std::uint8_t> bits);
Rational energy_of_bitstring(const IsingPolynomial &ising, std::uint64_t mask);

struct SpectrumEntry {
    std::uint64_t bits;
    Rational energy;
};

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// All 2^n energies sorted ascending, ties by bitstring value.
/// Throws SizeCapError when n > cap.
std::vector<SpectrumEntry> spectrum(const IsingPolynomial &ising,
                                    std::size_t cap = kDefaultEnumerationCap,
                                    unsigned threads = 1);

/// Minimum energy and every basis state attaining it, in ascending order.
struct GroundStates {
    Rational energy;
    std::vector<std::uint64_t> states;
};
GroundStates ground_states(const IsingPolynomial &ising,
                           std::size_t cap = kDefaultEnumerationCap,
                           unsigned threads = 1);

} // namespace tspdqes
