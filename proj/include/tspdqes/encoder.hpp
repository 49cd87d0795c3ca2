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
 * Binary penalty Hamiltonians over the visit variables x_{v,t}
 * ("node v is visited at step t").
 *
 * Bit layouts:
 *  - full / fixed_start_full: N x N table, bit = (v-1)*N + (t-1). Step N+1
 *    is identified with step 1.
 *  - efficient: node 1 pinned to step 1, so only v,t in 2..N remain,
 *    bit = (v-2)*(N-1) + (t-2).
 *  - extended_table: explicit N x (N+1) table, bit = (v-1)*(N+1) + (t-1).
 *    Only used for decoding and validation; no encoder emits it.
 */
#pragma once

#include <compare>
#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tspdqes/bits.hpp"
#include "tspdqes/graph.hpp"
#include "tspdqes/rational.hpp"
#include "tspdqes/scaled.hpp"

namespace tspdqes {

enum class Layout { full, fixed_start_full, efficient, extended_table };

std::string_view layout_name(Layout layout);
/// Accepts the names above plus the short forms "fixed" and "extended".
Layout parse_layout(std::string_view name);

struct VariableIndex {
    int v = 0;
    int t = 0;

    friend auto operator<=>(const VariableIndex &,
                            const VariableIndex &) = default;
};

std::size_t variable_count(Layout layout, int node_count);
/// Variables listed in bit order.
std::vector<VariableIndex> variable_order(Layout layout, int node_count);
/// Throws std::out_of_range when (v, t) is not a variable of the layout.
std::size_t bit_index(Layout layout, int node_count, VariableIndex var);

/**
 * @brief Quadratic pseudo-Boolean polynomial with exact coefficients.
 *
 * Terms are keyed by bit position. Zero coefficients are never stored and
 * x*x collapses to x, so the degree is at most 2 by construction.
 */
class PseudoBooleanPolynomial {
  public:
    using LinearTerms = std::map<std::size_t, Rational>;
    using QuadraticTerms = std::map<std::pair<std::size_t, std::size_t>, Rational>;

    PseudoBooleanPolynomial(Layout layout, int node_count);

    [[nodiscard]] Layout layout() const noexcept { return layout_; }
    [[nodiscard]] int node_count() const noexcept { return node_count_; }
    [[nodiscard]] std::size_t variable_count() const noexcept {
        return order_.size();
    }
    [[nodiscard]] const std::vector<VariableIndex> &variable_order() const noexcept {
        return order_;
    }
    [[nodiscard]] const Rational &constant() const noexcept { return constant_; }
    [[nodiscard]] const LinearTerms &linear() const noexcept { return linear_; }
    [[nodiscard]] const QuadraticTerms &quadratic() const noexcept {
        return quadratic_;
    }
    [[nodiscard]] int degree() const noexcept;

    void add_constant(const Rational &value);
    void add_linear(VariableIndex var, const Rational &value);
    void add_quadratic(VariableIndex a, VariableIndex b, const Rational &value);
    /// weight * (1 - sum(vars))^2, expanded with x^2 = x.
    void add_one_hot_penalty(std::span<const VariableIndex> vars,
                             const Rational &weight);

    PseudoBooleanPolynomial &operator+=(const PseudoBooleanPolynomial &other);

    /// Exact value at a 0/1 assignment given in bit order.
    [[nodiscard]] Rational evaluate(std::span<const std::uint8_t> bits) const;
    [[nodiscard]] Rational evaluate(std::uint64_t mask) const;
    [[nodiscard]] ScaledQuadratic compile() const;

  private:
    void add_linear_bit(std::size_t bit, const Rational &value);
    void add_quadratic_bits(std::size_t a, std::size_t b, const Rational &value);

    Layout layout_;
    int node_count_;
    std::vector<VariableIndex> order_;
    Rational constant_{0};
    LinearTerms linear_;
    QuadraticTerms quadratic_;
};

/// Row/column one-hot and missing-edge penalties on the full layout.
/// Transitions wrap N -> 1 except for the path variant, which stops at N-1.
PseudoBooleanPolynomial encode_cycle_hamiltonian(const ProblemInstance &instance);
/// Cycle penalties plus B * cost for every existing step. Requires tsp.
PseudoBooleanPolynomial encode_tsp_hamiltonian(const ProblemInstance &instance);
/// Adds A * (1 - x_{1,1})^2. Requires tsp or cycle.
PseudoBooleanPolynomial encode_fixed_start(const ProblemInstance &instance);
/// (N-1)^2 variables after pinning node 1 to step 1. Requires tsp or cycle
/// and N >= 2.
PseudoBooleanPolynomial encode_efficient(const ProblemInstance &instance);
/// Dispatches on layout; full uses the tsp form for tsp instances.
PseudoBooleanPolynomial encode(const ProblemInstance &instance, Layout layout);

/// Fills in the pinned cells of an efficient assignment, returning the
/// fixed-start full-layout table: x_{1,1} = 1, x_{1,t} = 0 for t > 1 and
/// x_{v,1} = 0 for v > 1.
Bitstring expand_efficient_assignment(int node_count,
                                      std::span<const std::uint8_t> bits);

enum class PenaltyMode { lucas, safe };

struct Penalties {
    Rational a;
    Rational b;

    friend bool operator==(const Penalties &, const Penalties &) = default;
};

/// B = 1 with A = max cost + 1 (lucas) or N * max cost + 1 (safe).
Penalties suggest_penalties(const ProblemInstance &instance, PenaltyMode mode);
/// 0 < B * max(c) < A
bool satisfies_lucas_condition(const ProblemInstance &instance);
/// 0 < N * B * max(c) < A
bool satisfies_safe_condition(const ProblemInstance &instance);

} // namespace tspdqes
