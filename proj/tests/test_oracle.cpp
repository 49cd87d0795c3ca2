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
#include "tspdqes/error.hpp"
#include "tspdqes/oracle.hpp"

using namespace tspdqes;

namespace {

using Kind = Violation::Kind;

Bitstring bits_of_table(Layout layout, const reference::Table &table) {
    const int n = static_cast<int>(table.size());
    Bitstring bits(variable_count(layout, n), 0);
    for (const auto &var : variable_order(layout, n)) {
        bits[bit_index(layout, n, var)] =
            static_cast<std::uint8_t>(table[var.v - 1][var.t - 1]);
    }
    return bits;
}

// Order 3, 1, 4, 2 with an explicit closing column holding `closing`.
reference::Table extended_table(int closing) {
    auto table = reference::table_of_order(4, {3, 1, 4, 2});
    for (int v = 1; v <= 4; ++v) {
        table[v - 1].push_back(v == closing ? 1 : 0);
    }
    return table;
}

std::vector<std::string> formatted(const std::vector<Tour> &tours) {
    std::vector<std::string> out;
    for (const auto &tour : tours) {
        out.push_back(format_tour(tour));
    }
    return out;
}

} // namespace

TEST_CASE("optimal tours of the landscape instance", "[oracle]") {
    const auto solution = solve_exact_tsp(reference::landscape_instance());
    REQUIRE(solution.optimal_cost == Rational(13));
    CHECK(formatted(solution.tours) ==
          std::vector<std::string>{"1-2-4-3-1", "1-3-4-2-1"});
    for (const auto &tour : solution.tours) {
        CHECK(tour.valid);
        CHECK(tour.cost == 13);
    }
}

TEST_CASE("optimal tours of the counter-example", "[oracle]") {
    const auto solution = solve_exact_tsp(reference::counterexample_instance());
    REQUIRE(solution.optimal_cost == Rational(22));
    CHECK(formatted(solution.tours) ==
          std::vector<std::string>{"1-2-4-3-1", "1-3-4-2-1"});
}

TEST_CASE("optimal tour of the complete figure graph", "[oracle]") {
    const auto solution = solve_exact_tsp(reference::complete_figure_instance());
    REQUIRE(solution.optimal_cost == Rational(11));
    CHECK(formatted(solution.tours) ==
          std::vector<std::string>{"1-3-2-4-1", "1-4-2-3-1"});
}

TEST_CASE("a graph without a Hamiltonian cycle has no tours", "[oracle]") {
    const auto instance =
        load_instance_file(reference::data_path("fixtures/no_cycle.txt"));
    const auto solution = solve_exact_tsp(instance);
    CHECK_FALSE(solution.optimal_cost.has_value());
    CHECK(solution.tours.empty());
}

TEST_CASE("tour formatting and costs", "[oracle]") {
    const auto instance = reference::landscape_instance();
    const auto tour = make_tour(instance, {1, 2, 4, 3});
    CHECK(tour.valid);
    CHECK(tour.cost == 13);
    CHECK(format_tour(tour) == "1-2-4-3-1");
    CHECK(format_tour(tour, false) == "1-2-4-3");
    const auto broken = make_tour(reference::counterexample_instance(), {1, 2, 3, 4});
    CHECK_FALSE(broken.valid);
}

TEST_CASE("exact solver agrees with permutation enumeration", "[oracle][property]") {
    std::mt19937_64 rng(23);
    std::bernoulli_distribution keep(0.7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto full = reference::random_complete_instance(rng, n, 9);
        std::vector<Edge> edges;
        for (const auto &edge : full.edges()) {
            if (keep(rng)) {
                edges.push_back(edge);
            }
        }
        const ProblemInstance instance(n, false, Variant::tsp, edges, 10, 1);
        const auto expected = reference::enumerate_tours(instance);
        const auto solution = solve_exact_tsp(instance);
        REQUIRE(solution.optimal_cost.has_value() == expected.feasible);
        if (!expected.feasible) {
            continue;
        }
        CHECK(*solution.optimal_cost == expected.best);
        std::vector<std::vector<int>> orders;
        for (const auto &tour : solution.tours) {
            orders.push_back(tour.order);
        }
        CHECK(orders == expected.orders);
    }
}

TEST_CASE("undirected optima come in mirrored pairs", "[oracle][property]") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const auto instance = reference::random_complete_instance(rng, 5, 20);
        const auto solution = solve_exact_tsp(instance);
        REQUIRE(solution.tours.size() % 2 == 0);
        for (const auto &tour : solution.tours) {
            std::vector<int> mirrored{1};
            mirrored.insert(mirrored.end(), tour.order.rbegin(),
                            tour.order.rend() - 1);
            CHECK(std::find_if(solution.tours.begin(), solution.tours.end(),
                               [&](const Tour &t) { return t.order == mirrored; }) !=
                  solution.tours.end());
        }
    }
}

TEST_CASE("size cap on exact enumeration", "[oracle]") {
    std::mt19937_64 rng(2);
    const auto instance = reference::random_complete_instance(rng, 9, 5);
    CHECK_THROWS_AS(solve_exact_tsp(instance, 8), SizeCapError);
}

TEST_CASE("extended table closing on the start node is valid", "[oracle]") {
    const auto instance = reference::complete_figure_instance();
    const auto check = validate_bitstring(instance, Layout::extended_table,
                                          bits_of_table(Layout::extended_table,
                                                        extended_table(3)));
    REQUIRE(check.valid());
    CHECK(check.violations.empty());
    CHECK(format_tour(*check.tour) == "1-4-2-3-1");
    CHECK(check.tour->cost == 11);
}

TEST_CASE("extended table closing on another node is invalid", "[oracle]") {
    const auto instance = reference::complete_figure_instance();
    const auto check = validate_bitstring(instance, Layout::extended_table,
                                          bits_of_table(Layout::extended_table,
                                                        extended_table(1)));
    CHECK_FALSE(check.valid());
    const std::vector<Violation> expected{
        {Kind::row, 1, 0, 0, 2},
        {Kind::row, 3, 0, 0, 0},
        {Kind::wrap_column, 1, 5, 0, 0},
        {Kind::wrap_column, 3, 5, 0, 0},
    };
    CHECK(check.violations == expected);
}

TEST_CASE("missing closing edge in the full layout", "[oracle]") {
    // The complete figure graph without edge 2-3: 3-1-4-2 cannot close.
    const ProblemInstance instance(
        4, false, Variant::tsp,
        {{1, 2, 1}, {3, 4, 8}, {1, 4, 5}, {1, 3, 1}, {2, 4, 2}}, 9, 1);
    const auto check = validate_bitstring(
        instance, Layout::full,
        bits_of_table(Layout::full, reference::table_of_order(4, {3, 1, 4, 2})));
    CHECK_FALSE(check.valid());
    REQUIRE(check.violations.size() == 1);
    CHECK(check.violations[0] == Violation{Kind::missing_edge, 2, 4, 3, 0});
    CHECK(describe(check.violations[0]) == "step 4: no edge 2->3");
}

TEST_CASE("missing wrap edge in the efficient layout", "[oracle]") {
    const auto instance = reference::counterexample_instance();
    const auto mask = reference::efficient_mask_of_order(4, {1, 2, 3, 4});
    const auto check =
        validate_bitstring(instance, Layout::efficient, bits_from_mask(mask, 9));
    CHECK_FALSE(check.valid());
    REQUIRE(check.violations.size() == 1);
    CHECK(check.violations[0] == Violation{Kind::missing_edge, 4, 4, 1, 0});
}

TEST_CASE("row and column counts are reported", "[oracle]") {
    const auto instance = reference::landscape_instance();
    const auto zeros = validate_bitstring(instance, Layout::efficient,
                                          bits_from_mask(0, 9));
    CHECK_FALSE(zeros.valid());
    const std::vector<Violation> expected{
        {Kind::row, 2, 0, 0, 0}, {Kind::row, 3, 0, 0, 0}, {Kind::row, 4, 0, 0, 0},
        {Kind::column, 0, 2, 0, 0}, {Kind::column, 0, 3, 0, 0},
        {Kind::column, 0, 4, 0, 0},
    };
    CHECK(zeros.violations == expected);

    const auto start = validate_bitstring(
        instance, Layout::fixed_start_full,
        bits_of_table(Layout::fixed_start_full,
                      reference::table_of_order(4, {2, 1, 3, 4})));
    REQUIRE(start.violations.size() == 1);
    CHECK(start.violations[0].kind == Kind::start_node);
    CHECK_THROWS_AS(validate_bitstring(instance, Layout::full, bits_from_mask(0, 9)),
                    std::invalid_argument);
}

TEST_CASE("decoded tours start at node 1", "[oracle]") {
    const auto instance = reference::directed_cycle_instance();
    const auto check = validate_bitstring(
        instance, Layout::full,
        bits_of_table(Layout::full, reference::table_of_order(4, {2, 1, 4, 3})));
    REQUIRE(check.valid());
    CHECK(format_tour(*check.tour) == "1-4-3-2-1");
    const auto reversed = validate_bitstring(
        instance, Layout::full,
        bits_of_table(Layout::full, reference::table_of_order(4, {2, 3, 4, 1})));
    CHECK_FALSE(reversed.valid());
}

TEST_CASE("path variant decodes open paths", "[oracle]") {
    const ProblemInstance instance(4, false, Variant::hamiltonian_path,
                                   {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}}, 1, 1);
    const auto check = validate_bitstring(
        instance, Layout::full,
        bits_of_table(Layout::full, reference::table_of_order(4, {4, 3, 2, 1})));
    REQUIRE(check.valid());
    CHECK(format_tour(*check.tour, false) == "4-3-2-1");
    CHECK(check.tour->cost == 3);
}

TEST_CASE("table validity matches the reference on every full table", "[oracle][property]") {
    const auto instance = reference::counterexample_instance();
    for (std::uint64_t mask = 0; mask < (1U << 16); ++mask) {
        const auto table = reference::table_of_full_mask(4, mask);
        const auto check =
            validate_bitstring(instance, Layout::full, bits_from_mask(mask, 16));
        REQUIRE(check.valid() == reference::table_is_tour(instance, table));
        REQUIRE(check.valid() == check.violations.empty());
    }
}
