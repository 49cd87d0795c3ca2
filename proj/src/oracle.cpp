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
#include "tspdqes/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "tspdqes/error.hpp"

namespace tspdqes {

std::string format_tour(const Tour &tour, bool closed) {
    std::string out;
    for (std::size_t i = 0; i < tour.order.size(); ++i) {
        if (i > 0) {
            out += '-';
        }
        out += std::to_string(tour.order[i]);
    }
    if (closed && !tour.order.empty()) {
        out += '-' + std::to_string(tour.order.front());
    }
    return out;
}

Tour make_tour(const ProblemInstance &instance, std::vector<int> order) {
    Tour tour{std::move(order), Rational(0), true};
    const auto n = tour.order.size();
    if (n < 2) {
        return tour;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto step = instance.cost(tour.order[i], tour.order[(i + 1) % n]);
        if (!step) {
            tour.valid = false;
            continue;
        }
        tour.cost += *step;
    }
    return tour;
}

TspSolution solve_exact_tsp(const ProblemInstance &instance, int max_nodes) {
    const int n = instance.node_count();
    if (n > max_nodes) {
        throw SizeCapError("exact tour enumeration is capped at " +
                           std::to_string(max_nodes) + " nodes, got " +
                           std::to_string(n));
    }
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 2);
    TspSolution solution;
    do {
        std::vector<int> order{1};
        order.insert(order.end(), rest.begin(), rest.end());
        auto tour = make_tour(instance, std::move(order));
        if (!tour.valid) {
            continue;
        }
        if (!solution.optimal_cost || tour.cost < *solution.optimal_cost) {
            solution.optimal_cost = tour.cost;
            solution.tours.clear();
        }
        if (tour.cost == *solution.optimal_cost) {
            solution.tours.push_back(std::move(tour));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return solution;
}

std::string_view violation_kind_name(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::row:
        return "row";
    case Violation::Kind::column:
        return "column";
    case Violation::Kind::missing_edge:
        return "missing_edge";
    case Violation::Kind::wrap_column:
        return "wrap_column";
    case Violation::Kind::start_node:
        return "start_node";
    }
    return "row";
}

std::string describe(const Violation &violation) {
    const auto node = std::to_string(violation.node);
    const auto step = std::to_string(violation.step);
    switch (violation.kind) {
    case Violation::Kind::row:
        return "row " + node + ": visited " + std::to_string(violation.count) +
               " times";
    case Violation::Kind::column:
        return "column " + step + ": holds " + std::to_string(violation.count) +
               " nodes";
    case Violation::Kind::missing_edge:
        return "step " + step + ": no edge " + node + "->" +
               std::to_string(violation.other);
    case Violation::Kind::wrap_column:
        return "column " + step + ": node " + node +
               " disagrees with column 1";
    case Violation::Kind::start_node:
        return "node 1 is not at step 1";
    }
    return {};
}

namespace {

// Dense table view: cell(v, t) for v in 1..N, t in 1..columns.
class Table {
  public:
    Table(int nodes, int columns)
        : nodes_(nodes), columns_(columns),
          cells_(static_cast<std::size_t>(nodes) * columns, 0) {}

    [[nodiscard]] int nodes() const { return nodes_; }
    [[nodiscard]] int columns() const { return columns_; }
    [[nodiscard]] std::uint8_t at(int v, int t) const {
        return cells_[static_cast<std::size_t>(v - 1) * columns_ + (t - 1)];
    }
    void set(int v, int t, std::uint8_t value) {
        cells_[static_cast<std::size_t>(v - 1) * columns_ + (t - 1)] = value;
    }
    [[nodiscard]] int row_count(int v, int first, int last) const {
        int count = 0;
        for (int t = first; t <= last; ++t) {
            count += at(v, t);
        }
        return count;
    }
    [[nodiscard]] int column_count(int t) const {
        int count = 0;
        for (int v = 1; v <= nodes_; ++v) {
            count += at(v, t);
        }
        return count;
    }

  private:
    int nodes_;
    int columns_;
    std::vector<std::uint8_t> cells_;
};

Table table_from_bits(const ProblemInstance &instance, Layout layout,
                      std::span<const std::uint8_t> bits) {
    const int n = instance.node_count();
    if (bits.size() != variable_count(layout, n)) {
        throw std::invalid_argument(
            "assignment has " + std::to_string(bits.size()) + " bits, layout " +
            std::string(layout_name(layout)) + " needs " +
            std::to_string(variable_count(layout, n)));
    }
    if (layout == Layout::efficient) {
        const auto full = expand_efficient_assignment(n, bits);
        return table_from_bits(instance, Layout::fixed_start_full, full);
    }
    Table table(n, layout == Layout::extended_table ? n + 1 : n);
    for (const auto &var : variable_order(layout, n)) {
        table.set(var.v, var.t, bits[bit_index(layout, n, var)] != 0 ? 1 : 0);
    }
    return table;
}

} // namespace

BitstringCheck validate_bitstring(const ProblemInstance &instance,
                                  Layout layout,
                                  std::span<const std::uint8_t> bits) {
    const int n = instance.node_count();
    const Table table = table_from_bits(instance, layout, bits);
    const bool extended = layout == Layout::extended_table;
    const bool cyclic = instance.variant() != Variant::hamiltonian_path;
    BitstringCheck check;
    auto &violations = check.violations;

    if ((layout == Layout::fixed_start_full || layout == Layout::efficient) &&
        table.at(1, 1) == 0) {
        violations.push_back({Violation::Kind::start_node, 1, 1, 0, 0});
    }
    for (int v = 1; v <= n; ++v) {
        int count = table.row_count(v, 1, n);
        if (count == 1 && extended) {
            // The explicit closing column must keep every node once in the
            // shifted window 2..N+1 as well.
            count = table.row_count(v, 2, n + 1);
        }
        if (count != 1) {
            violations.push_back({Violation::Kind::row, v, 0, 0, count});
        }
    }
    for (int t = 1; t <= table.columns(); ++t) {
        const int count = table.column_count(t);
        if (count != 1) {
            violations.push_back({Violation::Kind::column, 0, t, 0, count});
        }
    }
    if (extended) {
        for (int v = 1; v <= n; ++v) {
            if (table.at(v, n + 1) != table.at(v, 1)) {
                violations.push_back(
                    {Violation::Kind::wrap_column, v, n + 1, 0, 0});
            }
        }
    }

    // Consecutive occupied cells must be joined by an edge.
    const int last_step = cyclic ? n : n - 1;
    for (int t = 1; t <= last_step; ++t) {
        const int next = extended ? t + 1 : (t == n ? 1 : t + 1);
        for (int u = 1; u <= n; ++u) {
            if (table.at(u, t) == 0) {
                continue;
            }
            for (int v = 1; v <= n; ++v) {
                if (u != v && table.at(v, next) != 0 && !instance.has_edge(u, v)) {
                    violations.push_back(
                        {Violation::Kind::missing_edge, u, t, v, 0});
                }
            }
        }
    }
    if (!violations.empty()) {
        return check;
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
        for (int v = 1; v <= n; ++v) {
            if (table.at(v, t) != 0) {
                order[static_cast<std::size_t>(t - 1)] = v;
            }
        }
    }
    if (!cyclic) {
        Tour path{order, Rational(0), true};
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            path.cost += *instance.cost(order[i], order[i + 1]);
        }
        check.tour = std::move(path);
        return check;
    }
    std::rotate(order.begin(), std::find(order.begin(), order.end(), 1),
                order.end());
    check.tour = make_tour(instance, std::move(order));
    return check;
}

} // namespace tspdqes
