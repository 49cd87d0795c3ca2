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
 * Classical ground truth: exact tour enumeration and assignment-table
 * validation. Nothing here touches the Hamiltonians, so it can certify them.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspdqes/encoder.hpp"
#include "tspdqes/graph.hpp"

namespace tspdqes {

/// A closed tour written from node 1; the return step to node 1 is implied.
/// Path-variant decodes are open paths and keep their own start node.
struct Tour {
    std::vector<int> order;
    Rational cost{0};
    bool valid = false;

    friend bool operator==(const Tour &, const Tour &) = default;
};

/// "1-2-4-3-1" for closed tours, "2-1-4-3" for paths.
std::string format_tour(const Tour &tour, bool closed = true);

/// Cost and validity of visiting `order` and returning to its first node.
Tour make_tour(const ProblemInstance &instance, std::vector<int> order);

struct TspSolution {
    std::optional<Rational> optimal_cost;
    /// Every optimal tour, in lexicographic order.
    std::vector<Tour> tours;
};

inline constexpr int kMaxExactTspNodes = 13;

/// Enumerates all (N-1)! orders starting at node 1. Throws SizeCapError
/// above `max_nodes`.
TspSolution solve_exact_tsp(const ProblemInstance &instance,
                            int max_nodes = kMaxExactTspNodes);

struct Violation {
    enum class Kind {
        row,          ///< node visited `count` times in its step window
        column,       ///< step holds `count` nodes
        missing_edge, ///< node -> other at step, with no such edge
        wrap_column,  ///< explicit step N+1 disagrees with step 1 for node
        start_node,   ///< fixed-start layout with x_{1,1} = 0
    };

    Kind kind;
    int node = 0;
    int step = 0;
    int other = 0;
    int count = 0;

    friend bool operator==(const Violation &, const Violation &) = default;
};

std::string_view violation_kind_name(Violation::Kind kind);
std::string describe(const Violation &violation);

struct BitstringCheck {
    std::optional<Tour> tour;
    std::vector<Violation> violations;

    [[nodiscard]] bool valid() const { return tour.has_value(); }
};

/**
 * @brief Decodes an assignment and checks it against the visit constraints.
 *
 * Efficient assignments are completed with node 1 pinned to step 1 first.
 * Every violated row, column, missing step or wrap conflict is reported;
 * a tour is returned only when there are none. No repair is attempted.
 */
BitstringCheck validate_bitstring(const ProblemInstance &instance,
                                  Layout layout,
                                  std::span<const std::uint8_t> bits);

} // namespace tspdqes
