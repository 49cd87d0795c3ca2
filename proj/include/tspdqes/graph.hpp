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
 * Weighted (di)graph instances for Hamiltonian-cycle, Hamiltonian-path and
 * traveling-salesman encodings, plus the JSON and edge-list file formats.
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tspdqes/rational.hpp"

namespace tspdqes {

enum class Variant { hamiltonian_cycle, hamiltonian_path, tsp };

/// "cycle", "path" or "tsp".
std::string_view variant_name(Variant variant);
Variant parse_variant(std::string_view name);

/// Node ids are 1-based everywhere in the public API.
struct Edge {
    int u = 0;
    int v = 0;
    Rational cost{0};

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * @brief A validated problem instance.
 *
 * Undirected edges are stored once with u < v, and the edge list is kept
 * sorted by (u, v). Instances are immutable after construction.
 */
class ProblemInstance {
  public:
    /// Validates and canonicalizes; throws ValidationError on bad node ids,
    /// self-loops, duplicate edges, negative costs or non-positive penalties.
    ProblemInstance(int node_count, bool directed, Variant variant,
                    std::vector<Edge> edges, Rational penalty_a,
                    Rational penalty_b);

    [[nodiscard]] int node_count() const noexcept { return node_count_; }
    [[nodiscard]] bool directed() const noexcept { return directed_; }
    [[nodiscard]] Variant variant() const noexcept { return variant_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept {
        return edges_;
    }
    [[nodiscard]] const Rational &penalty_a() const noexcept {
        return penalty_a_;
    }
    [[nodiscard]] const Rational &penalty_b() const noexcept {
        return penalty_b_;
    }

    /// Whether the ordered step u -> v is allowed. Undirected edges allow
    /// both orientations.
    [[nodiscard]] bool has_edge(int u, int v) const;
    /// Cost of the step u -> v, if the edge exists.
    [[nodiscard]] std::optional<Rational> cost(int u, int v) const;
    /// Largest edge cost; throws ValidationError when there are no edges.
    [[nodiscard]] Rational max_cost() const;

    [[nodiscard]] ProblemInstance with_penalties(Rational penalty_a,
                                                 Rational penalty_b) const;
    [[nodiscard]] ProblemInstance with_variant(Variant variant) const;

    friend bool operator==(const ProblemInstance &a, const ProblemInstance &b) {
        return a.node_count_ == b.node_count_ && a.directed_ == b.directed_ &&
               a.variant_ == b.variant_ && a.edges_ == b.edges_ &&
               a.penalty_a_ == b.penalty_a_ && a.penalty_b_ == b.penalty_b_;
    }

  private:
    [[nodiscard]] std::size_t slot(int u, int v) const {
        return static_cast<std::size_t>(u - 1) * node_count_ + (v - 1);
    }

    int node_count_;
    bool directed_;
    Variant variant_;
    std::vector<Edge> edges_;
    Rational penalty_a_;
    Rational penalty_b_;
    // Dense ordered-pair cost table; both orientations filled when undirected.
    std::vector<std::optional<Rational>> costs_;
};

enum class InstanceFormat { json, edge_list };

/// Throws ParseError (with line/field) or ValidationError.
ProblemInstance load_instance(std::istream &source, InstanceFormat format);
ProblemInstance load_instance(std::string_view text, InstanceFormat format);
/// Picks the format from the extension: ".json" is JSON, anything else is
/// edge-list.
ProblemInstance load_instance_file(const std::filesystem::path &path);

void save_instance(const ProblemInstance &instance, std::ostream &sink,
                   InstanceFormat format);
std::string save_instance(const ProblemInstance &instance,
                          InstanceFormat format);

/// True iff every pair of distinct nodes (ordered when directed) is joined.
bool is_complete(const ProblemInstance &instance);

} // namespace tspdqes
