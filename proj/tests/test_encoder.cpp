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
#include <algorithm>
#include <random>

#include <catch_amalgamated.hpp>

#include "reference.hpp"
#include "tspdqes/audit.hpp"
#include "tspdqes/encoder.hpp"
#include "tspdqes/error.hpp"
#include "tspdqes/oracle.hpp"

using namespace tspdqes;
using reference::Table;

namespace {

Rational full_value(const PseudoBooleanPolynomial &poly, const Table &table) {
    return poly.evaluate(reference::full_mask_of_table(table));
}

std::size_t efficient_bits(int n) { return variable_count(Layout::efficient, n); }

void check_master_equivalence(const ProblemInstance &instance) {
    const int n = instance.node_count();
    const auto efficient = encode_efficient(instance);
    const auto fixed = encode_fixed_start(instance);
    const bool with_costs = instance.variant() == Variant::tsp;
    const std::uint64_t states = std::uint64_t{1} << efficient_bits(n);
    for (std::uint64_t z = 0; z < states; ++z) {
        const auto bits = bits_from_mask(z, efficient_bits(n));
        const auto expected = fixed.evaluate(expand_efficient_assignment(n, bits));
        REQUIRE(efficient.evaluate(bits) == expected);
        REQUIRE(expected == reference::table_energy(
                                instance, reference::table_of_efficient_mask(n, z),
                                with_costs, true));
    }
}

} // namespace

TEST_CASE("variable layouts and bit order", "[encoder]") {
    CHECK(variable_count(Layout::full, 4) == 16);
    CHECK(variable_count(Layout::fixed_start_full, 4) == 16);
    CHECK(variable_count(Layout::efficient, 4) == 9);
    CHECK(variable_count(Layout::extended_table, 4) == 20);
    CHECK(bit_index(Layout::full, 4, {2, 3}) == 6);
    CHECK(bit_index(Layout::efficient, 4, {2, 2}) == 0);
    CHECK(bit_index(Layout::efficient, 4, {4, 3}) == 7);
    CHECK(bit_index(Layout::efficient, 5, {3, 5}) == 7);
    CHECK_THROWS(bit_index(Layout::efficient, 4, {1, 1}));
    CHECK_THROWS(bit_index(Layout::full, 4, {5, 1}));
    const auto order = variable_order(Layout::efficient, 4);
    REQUIRE(order.size() == 9);
    for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK(bit_index(Layout::efficient, 4, order[i]) == i);
    }
}

TEST_CASE("directed figure cycle has zero cycle energy", "[encoder]") {
    const auto instance = reference::directed_cycle_instance();
    const auto poly = encode_cycle_hamiltonian(instance);
    CHECK(full_value(poly, reference::table_of_order(4, {2, 1, 4, 3})) == 0);
    CHECK(full_value(poly, reference::table_of_order(4, {1, 2, 3, 4})) > 0);
}

TEST_CASE("empty table costs one A per row and column", "[encoder]") {
    const auto instance =
        reference::counterexample_instance(1, 1).with_variant(Variant::hamiltonian_cycle);
    CHECK(encode_cycle_hamiltonian(instance).evaluate(std::uint64_t{0}) == 8);
}

TEST_CASE("cycle energy vanishes exactly on valid cycles", "[encoder][property]") {
    for (const auto &instance :
         {reference::counterexample_instance(), reference::landscape_instance(),
          reference::directed_cycle_instance()}) {
        const auto poly = encode_cycle_hamiltonian(instance);
        for (std::uint64_t z = 0; z < (1U << 16); ++z) {
            const auto table = reference::table_of_full_mask(4, z);
            const auto value = poly.evaluate(z);
            REQUIRE(value == reference::table_energy(instance, table, false));
            REQUIRE((value == 0) == reference::table_is_tour(instance, table));
        }
    }
}

TEST_CASE("path variant drops the closing step", "[encoder]") {
    // 2 -> 1 -> 4 -> 3 with no edge back from 3 to 2.
    const ProblemInstance instance(4, true, Variant::hamiltonian_path,
                                   {{2, 1, 1}, {1, 4, 1}, {4, 3, 1}, {2, 3, 1}}, 1, 1);
    const auto poly = encode_cycle_hamiltonian(instance);
    CHECK(full_value(poly, reference::table_of_order(4, {2, 1, 4, 3})) == 0);
    CHECK(full_value(poly, reference::table_of_order(4, {1, 4, 3, 2})) == 1);
}

TEST_CASE("figure tour costs eleven and is optimal", "[encoder]") {
    const auto instance = reference::complete_figure_instance();
    const auto table = reference::table_of_order(4, {3, 1, 4, 2});
    CHECK(full_value(encode_cycle_hamiltonian(instance), table) == 0);
    CHECK(full_value(encode_tsp_hamiltonian(instance), table) == 11);
    const auto tours = reference::enumerate_tours(instance);
    CHECK(tours.best == 11);
}

TEST_CASE("counter-example energies", "[encoder]") {
    const auto instance = reference::counterexample_instance();
    const auto poly = encode_tsp_hamiltonian(instance);
    // Path 1-2-3-4 pays A once for the missing closing edge 4 -> 1.
    CHECK(full_value(poly, reference::table_of_order(4, {1, 2, 3, 4})) == 14);
    CHECK(full_value(poly, reference::table_of_order(4, {1, 2, 4, 3})) == 22);
}

TEST_CASE("tsp energy matches the table oracle everywhere", "[encoder][property]") {
    for (const auto &instance :
         {reference::counterexample_instance(), reference::landscape_instance(),
          reference::complete_figure_instance()}) {
        const auto poly = encode_tsp_hamiltonian(instance);
        for (std::uint64_t z = 0; z < (1U << 16); ++z) {
            REQUIRE(poly.evaluate(z) ==
                    reference::table_energy(
                        instance, reference::table_of_full_mask(4, z), true));
        }
    }
}

TEST_CASE("fixed start adds A only when node 1 is not first", "[encoder]") {
    const auto instance = reference::complete_figure_instance();
    const auto tsp = encode_tsp_hamiltonian(instance);
    const auto fixed = encode_fixed_start(instance);
    CHECK(fixed.layout() == Layout::fixed_start_full);
    const auto started = reference::table_of_order(4, {1, 4, 2, 3});
    CHECK(full_value(fixed, started) == full_value(tsp, started));
    const auto shifted = reference::table_of_order(4, {3, 1, 4, 2});
    CHECK(full_value(fixed, shifted) ==
          full_value(tsp, shifted) + instance.penalty_a());

    Rational tsp_min = tsp.evaluate(std::uint64_t{0});
    Rational fixed_min = fixed.evaluate(std::uint64_t{0});
    for (std::uint64_t z = 0; z < (1U << 16); ++z) {
        tsp_min = std::min(tsp_min, tsp.evaluate(z));
        fixed_min = std::min(fixed_min, fixed.evaluate(z));
    }
    CHECK(tsp_min == fixed_min);
    CHECK(fixed_min == 11);
}

TEST_CASE("efficient encoding on the landscape instance", "[encoder]") {
    const auto instance = reference::landscape_instance();
    const auto poly = encode_efficient(instance);
    CHECK(poly.variable_count() == 9);
    const auto mask = reference::efficient_mask_of_order(4, {1, 2, 4, 3});
    CHECK(mask == ((1U << 0) | (1U << 7) | (1U << 5)));
    CHECK(poly.evaluate(mask) == 13);
    const auto cycle_only = encode_efficient(instance.with_variant(Variant::hamiltonian_cycle));
    CHECK(cycle_only.evaluate(mask) == 0);
}

TEST_CASE("efficient equals fixed start after completion", "[encoder][property]") {
    SECTION("paper instances, every assignment") {
        check_master_equivalence(reference::landscape_instance());
        check_master_equivalence(reference::counterexample_instance());
        check_master_equivalence(reference::directed_cycle_instance());
    }
    SECTION("random five-node instances, every assignment") {
        std::mt19937_64 rng(5);
        std::bernoulli_distribution keep(0.7);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Edge> edges;
            const bool directed = trial == 2;
            for (int u = 1; u <= 5; ++u) {
                for (int v = directed ? 1 : u + 1; v <= 5; ++v) {
                    if (u != v && keep(rng)) {
                        edges.push_back({u, v, Rational(static_cast<int>(rng() % 9) + 1)});
                    }
                }
            }
            check_master_equivalence(
                ProblemInstance(5, directed, Variant::tsp, edges, 40, 1));
        }
    }
    SECTION("six nodes, sampled assignments") {
        std::mt19937_64 rng(6);
        const auto instance = reference::random_complete_instance(rng, 6, 10);
        const auto efficient = encode_efficient(instance);
        const auto fixed = encode_fixed_start(instance);
        for (int trial = 0; trial < 2000; ++trial) {
            const auto bits = bits_from_mask(rng(), efficient_bits(6));
            REQUIRE(efficient.evaluate(bits) ==
                    fixed.evaluate(expand_efficient_assignment(6, bits)));
        }
    }
}

TEST_CASE("polynomials stay quadratic with no zero terms", "[encoder]") {
    for (const auto &instance :
         {reference::landscape_instance(), reference::counterexample_instance()}) {
        for (auto layout : {Layout::full, Layout::fixed_start_full, Layout::efficient}) {
            const auto poly = encode(instance, layout);
            CHECK(poly.degree() <= 2);
            for (const auto &[bit, c] : poly.linear()) {
                CHECK(c != 0);
            }
            for (const auto &[key, c] : poly.quadratic()) {
                CHECK(c != 0);
                CHECK(key.first < key.second);
            }
        }
    }
}

TEST_CASE("encoders reject unsupported variants", "[encoder]") {
    const auto path = reference::landscape_instance().with_variant(Variant::hamiltonian_path);
    CHECK_THROWS_AS(encode_tsp_hamiltonian(path), ValidationError);
    CHECK_THROWS_AS(encode_fixed_start(path), ValidationError);
    CHECK_THROWS_AS(encode_efficient(path), ValidationError);
    CHECK_THROWS_AS(encode(reference::landscape_instance(), Layout::extended_table),
                    ValidationError);
}

TEST_CASE("penalty suggestions", "[encoder]") {
    const auto counter = reference::counterexample_instance();
    CHECK(suggest_penalties(counter, PenaltyMode::lucas) == Penalties{11, 1});
    CHECK(suggest_penalties(counter, PenaltyMode::safe) == Penalties{41, 1});
    const ProblemInstance single(2, false, Variant::tsp, {{1, 2, 0}}, 1, 1);
    CHECK(suggest_penalties(single, PenaltyMode::lucas) == Penalties{1, 1});
    CHECK(suggest_penalties(single, PenaltyMode::safe) == Penalties{1, 1});
    const ProblemInstance bare(3, false, Variant::tsp, {}, 1, 1);
    CHECK_THROWS_AS(suggest_penalties(bare, PenaltyMode::lucas), ValidationError);
    CHECK(satisfies_lucas_condition(counter));
    CHECK_FALSE(satisfies_safe_condition(counter));
    CHECK(satisfies_safe_condition(counter.with_penalties(41, 1)));
    CHECK_FALSE(satisfies_safe_condition(counter.with_penalties(40, 1)));
}

TEST_CASE("audit reproduces the counter-example", "[encoder][audit]") {
    const auto report = audit_penalties(reference::counterexample_instance());
    CHECK(report.minimum == 14);
    CHECK_FALSE(report.minimum_valid);
    REQUIRE(report.best_valid_value.has_value());
    CHECK(*report.best_valid_value == 22);
    CHECK(report.lucas_condition);
    CHECK_FALSE(report.safe_condition);
    CHECK_FALSE(report.first_minimizer_violations.empty());
    for (const auto &tour : report.minimizer_tours) {
        CHECK_FALSE(tour.has_value());
    }
}

TEST_CASE("safe penalties repair the counter-example", "[encoder][audit]") {
    const auto report = audit_penalties(reference::counterexample_instance(41, 1));
    CHECK(report.minimum == 22);
    CHECK(report.minimum_valid);
    CHECK(report.safe_condition);
    // Two optimal directions, each at four starting steps.
    CHECK(report.minimizers.size() == 8);
    for (const auto &tour : report.minimizer_tours) {
        REQUIRE(tour.has_value());
        CHECK(tour->cost == 22);
    }
}

TEST_CASE("lucas penalties suffice on the complete figure", "[encoder][audit]") {
    const auto instance = reference::complete_figure_instance();
    const auto p = suggest_penalties(instance, PenaltyMode::lucas);
    const auto report = audit_penalties(instance.with_penalties(p.a, p.b));
    CHECK(report.minimum_valid);
    CHECK(report.minimum == 11);
}

TEST_CASE("lucas penalties suffice on complete graphs", "[encoder][audit][property]") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = trial % 2 == 0 ? 3 : 4;
        const auto instance = reference::random_complete_instance(rng, n, 10);
        const auto report = audit_penalties(instance);
        const auto oracle = reference::enumerate_tours(instance);
        REQUIRE(report.minimum_valid);
        REQUIRE(report.minimum == oracle.best);
        for (const auto &tour : report.minimizer_tours) {
            REQUIRE(tour.has_value());
            REQUIRE(std::find(oracle.orders.begin(), oracle.orders.end(),
                              tour->order) != oracle.orders.end());
        }
    }
}

TEST_CASE("audit refuses oversized instances", "[encoder][audit]") {
    std::mt19937_64 rng(1);
    const auto instance = reference::random_complete_instance(rng, 5, 10);
    CHECK_THROWS_AS(audit_penalties(instance), SizeCapError);
}
