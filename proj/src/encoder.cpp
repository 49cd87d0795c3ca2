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
#include "tspdqes/encoder.hpp"

#include <stdexcept>
#include <string>

#include "tspdqes/error.hpp"

namespace tspdqes {

std::string_view layout_name(Layout layout) {
    switch (layout) {
    case Layout::full:
        return "full";
    case Layout::fixed_start_full:
        return "fixed_start_full";
    case Layout::efficient:
        return "efficient";
    case Layout::extended_table:
        return "extended_table";
    }
    return "full";
}

Layout parse_layout(std::string_view name) {
    if (name == "full") {
        return Layout::full;
    }
    if (name == "fixed" || name == "fixed_start_full") {
        return Layout::fixed_start_full;
    }
    if (name == "efficient") {
        return Layout::efficient;
    }
    if (name == "extended" || name == "extended_table") {
        return Layout::extended_table;
    }
    throw std::invalid_argument("unknown layout '" + std::string(name) + "'");
}

namespace {

struct Grid {
    int first_node;
    int first_step;
    int rows;
    int columns;
};

Grid grid_of(Layout layout, int n) {
    switch (layout) {
    case Layout::full:
    case Layout::fixed_start_full:
        return {1, 1, n, n};
    case Layout::efficient:
        return {2, 2, n - 1, n - 1};
    case Layout::extended_table:
        return {1, 1, n, n + 1};
    }
    return {1, 1, n, n};
}

} // namespace

std::size_t variable_count(Layout layout, int node_count) {
    const auto grid = grid_of(layout, node_count);
    return static_cast<std::size_t>(std::max(grid.rows, 0)) *
           static_cast<std::size_t>(std::max(grid.columns, 0));
}

std::vector<VariableIndex> variable_order(Layout layout, int node_count) {
    const auto grid = grid_of(layout, node_count);
    std::vector<VariableIndex> order;
    order.reserve(variable_count(layout, node_count));
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.columns; ++c) {
            order.push_back({grid.first_node + r, grid.first_step + c});
        }
    }
    return order;
}

std::size_t bit_index(Layout layout, int node_count, VariableIndex var) {
    const auto grid = grid_of(layout, node_count);
    const int r = var.v - grid.first_node;
    const int c = var.t - grid.first_step;
    if (r < 0 || r >= grid.rows || c < 0 || c >= grid.columns) {
        throw std::out_of_range("x_{" + std::to_string(var.v) + "," +
                                std::to_string(var.t) + "} is not a " +
                                std::string(layout_name(layout)) +
                                " variable");
    }
    return static_cast<std::size_t>(r) * grid.columns + c;
}

PseudoBooleanPolynomial::PseudoBooleanPolynomial(Layout layout, int node_count)
    : layout_(layout), node_count_(node_count),
      order_(tspdqes::variable_order(layout, node_count)) {}

int PseudoBooleanPolynomial::degree() const noexcept {
    if (!quadratic_.empty()) {
        return 2;
    }
    return linear_.empty() ? 0 : 1;
}

void PseudoBooleanPolynomial::add_constant(const Rational &value) {
    constant_ += value;
}

void PseudoBooleanPolynomial::add_linear_bit(std::size_t bit,
                                             const Rational &value) {
    if (value == 0) {
        return;
    }
    auto [it, inserted] = linear_.try_emplace(bit, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            linear_.erase(it);
        }
    }
}

void PseudoBooleanPolynomial::add_quadratic_bits(std::size_t a, std::size_t b,
                                                 const Rational &value) {
    if (a == b) {
        add_linear_bit(a, value);
        return;
    }
    if (value == 0) {
        return;
    }
    auto key = a < b ? std::pair(a, b) : std::pair(b, a);
    auto [it, inserted] = quadratic_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            quadratic_.erase(it);
        }
    }
}

void PseudoBooleanPolynomial::add_linear(VariableIndex var,
                                         const Rational &value) {
    add_linear_bit(bit_index(layout_, node_count_, var), value);
}

void PseudoBooleanPolynomial::add_quadratic(VariableIndex a, VariableIndex b,
                                            const Rational &value) {
    add_quadratic_bits(bit_index(layout_, node_count_, a),
                       bit_index(layout_, node_count_, b), value);
}

void PseudoBooleanPolynomial::add_one_hot_penalty(
    std::span<const VariableIndex> vars, const Rational &weight) {
    // (1 - sum x)^2 = 1 - sum x + 2 sum_{i<j} x_i x_j  for binary x
    add_constant(weight);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        add_linear(vars[i], -weight);
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            add_quadratic(vars[i], vars[j], 2 * weight);
        }
    }
}

PseudoBooleanPolynomial &
PseudoBooleanPolynomial::operator+=(const PseudoBooleanPolynomial &other) {
    if (other.layout_ != layout_ || other.node_count_ != node_count_) {
        throw std::invalid_argument("cannot add polynomials over different "
                                    "layouts");
    }
    constant_ += other.constant_;
    for (const auto &[bit, value] : other.linear_) {
        add_linear_bit(bit, value);
    }
    for (const auto &[key, value] : other.quadratic_) {
        add_quadratic_bits(key.first, key.second, value);
    }
    return *this;
}

Rational
PseudoBooleanPolynomial::evaluate(std::span<const std::uint8_t> bits) const {
    if (bits.size() != order_.size()) {
        throw std::invalid_argument(
            "assignment has " + std::to_string(bits.size()) + " bits, expected " +
            std::to_string(order_.size()));
    }
    Rational total = constant_;
    for (const auto &[bit, value] : linear_) {
        if (bits[bit] != 0) {
            total += value;
        }
    }
    for (const auto &[key, value] : quadratic_) {
        if (bits[key.first] != 0 && bits[key.second] != 0) {
            total += value;
        }
    }
    return total;
}

Rational PseudoBooleanPolynomial::evaluate(std::uint64_t mask) const {
    return evaluate(bits_from_mask(mask, order_.size()));
}

ScaledQuadratic PseudoBooleanPolynomial::compile() const {
    return {ScaledQuadratic::Domain::binary, constant_, linear_, quadratic_};
}

namespace {

// Adds weight * x_{u,t} x_{v,t+1} for every ordered pair of distinct nodes,
// with weight = A when u -> v is not an edge and B * c_{uv} when it is
// (the cost group is skipped when include_costs is false).
void add_transitions(PseudoBooleanPolynomial &poly,
                     const ProblemInstance &instance, bool include_costs) {
    const int n = instance.node_count();
    const bool wrap = instance.variant() != Variant::hamiltonian_path;
    const int last_step = wrap ? n : n - 1;
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u == v) {
                continue;
            }
            const auto cost = instance.cost(u, v);
            Rational weight;
            if (!cost) {
                weight = instance.penalty_a();
            } else if (include_costs) {
                weight = instance.penalty_b() * *cost;
            } else {
                continue;
            }
            for (int t = 1; t <= last_step; ++t) {
                const int next = t == n ? 1 : t + 1;
                poly.add_quadratic({u, t}, {v, next}, weight);
            }
        }
    }
}

void add_one_hot_groups(PseudoBooleanPolynomial &poly, int first, int last,
                        const Rational &weight) {
    std::vector<VariableIndex> group;
    for (int v = first; v <= last; ++v) {
        group.clear();
        for (int t = first; t <= last; ++t) {
            group.push_back({v, t});
        }
        poly.add_one_hot_penalty(group, weight);
    }
    for (int t = first; t <= last; ++t) {
        group.clear();
        for (int v = first; v <= last; ++v) {
            group.push_back({v, t});
        }
        poly.add_one_hot_penalty(group, weight);
    }
}

PseudoBooleanPolynomial full_hamiltonian(const ProblemInstance &instance,
                                         Layout layout, bool include_costs) {
    PseudoBooleanPolynomial poly(layout, instance.node_count());
    add_one_hot_groups(poly, 1, instance.node_count(), instance.penalty_a());
    add_transitions(poly, instance, include_costs);
    return poly;
}

} // namespace

PseudoBooleanPolynomial encode_cycle_hamiltonian(const ProblemInstance &instance) {
    return full_hamiltonian(instance, Layout::full, false);
}

PseudoBooleanPolynomial encode_tsp_hamiltonian(const ProblemInstance &instance) {
    if (instance.variant() != Variant::tsp) {
        throw ValidationError("the tsp Hamiltonian needs a tsp instance, got '" +
                              std::string(variant_name(instance.variant())) +
                              "'");
    }
    return full_hamiltonian(instance, Layout::full, true);
}

PseudoBooleanPolynomial encode_fixed_start(const ProblemInstance &instance) {
    if (instance.variant() == Variant::hamiltonian_path) {
        throw ValidationError("fixed-start encoding needs a tsp or cycle "
                              "instance");
    }
    auto poly = full_hamiltonian(instance, Layout::fixed_start_full,
                                 instance.variant() == Variant::tsp);
    // A (1 - x_{1,1})^2 = A - A x_{1,1}
    poly.add_constant(instance.penalty_a());
    poly.add_linear({1, 1}, -instance.penalty_a());
    return poly;
}

PseudoBooleanPolynomial encode_efficient(const ProblemInstance &instance) {
    if (instance.variant() == Variant::hamiltonian_path) {
        throw ValidationError("efficient encoding needs a tsp or cycle instance");
    }
    const int n = instance.node_count();
    if (n < 2) {
        throw ValidationError("efficient encoding needs at least 2 nodes");
    }
    const bool with_costs = instance.variant() == Variant::tsp;
    const Rational &a = instance.penalty_a();
    const Rational &b = instance.penalty_b();

    PseudoBooleanPolynomial poly(Layout::efficient, n);
    add_one_hot_groups(poly, 2, n, a);

    // Steps between the free nodes, t = 2 .. N-1.
    for (int u = 2; u <= n; ++u) {
        for (int v = 2; v <= n; ++v) {
            if (u == v) {
                continue;
            }
            const auto cost = instance.cost(u, v);
            if (cost && !with_costs) {
                continue;
            }
            const Rational weight = cost ? b * *cost : a;
            for (int t = 2; t <= n - 1; ++t) {
                poly.add_quadratic({u, t}, {v, t + 1}, weight);
            }
        }
    }

    // Leaving node 1 at step 1 and returning to it after step N.
    for (int v = 2; v <= n; ++v) {
        const auto out = instance.cost(1, v);
        if (!out) {
            poly.add_linear({v, 2}, a);
        } else if (with_costs) {
            poly.add_linear({v, 2}, b * *out);
        }
        const auto back = instance.cost(v, 1);
        if (!back) {
            poly.add_linear({v, n}, a);
        } else if (with_costs) {
            poly.add_linear({v, n}, b * *back);
        }
    }
    return poly;
}

PseudoBooleanPolynomial encode(const ProblemInstance &instance, Layout layout) {
    switch (layout) {
    case Layout::full:
        return instance.variant() == Variant::tsp
                   ? encode_tsp_hamiltonian(instance)
                   : encode_cycle_hamiltonian(instance);
    case Layout::fixed_start_full:
        return encode_fixed_start(instance);
    case Layout::efficient:
        return encode_efficient(instance);
    case Layout::extended_table:
        break;
    }
    throw ValidationError("no encoder emits the extended_table layout");
}

Bitstring expand_efficient_assignment(int node_count,
                                      std::span<const std::uint8_t> bits) {
    const int n = node_count;
    if (bits.size() != variable_count(Layout::efficient, n)) {
        throw std::invalid_argument("efficient assignment has wrong length");
    }
    Bitstring full(variable_count(Layout::full, n), 0);
    full[bit_index(Layout::full, n, {1, 1})] = 1;
    for (int v = 2; v <= n; ++v) {
        for (int t = 2; t <= n; ++t) {
            full[bit_index(Layout::full, n, {v, t})] =
                bits[bit_index(Layout::efficient, n, {v, t})];
        }
    }
    return full;
}

Penalties suggest_penalties(const ProblemInstance &instance, PenaltyMode mode) {
    const Rational max_cost = instance.max_cost();
    const Rational scale = mode == PenaltyMode::safe
                               ? Rational(instance.node_count())
                               : Rational(1);
    return {scale * max_cost + 1, Rational(1)};
}

bool satisfies_lucas_condition(const ProblemInstance &instance) {
    if (instance.edges().empty()) {
        return instance.penalty_b() > 0;
    }
    const Rational bound = instance.penalty_b() * instance.max_cost();
    return instance.penalty_b() > 0 && bound < instance.penalty_a();
}

bool satisfies_safe_condition(const ProblemInstance &instance) {
    if (instance.edges().empty()) {
        return instance.penalty_b() > 0;
    }
    const Rational bound =
        instance.node_count() * instance.penalty_b() * instance.max_cost();
    return instance.penalty_b() > 0 && bound < instance.penalty_a();
}

} // namespace tspdqes
