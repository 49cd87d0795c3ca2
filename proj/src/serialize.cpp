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
#include "tspdqes/serialize.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <type_traits>

#include <nlohmann/json.hpp>

#include "tspdqes/bits.hpp"
#include "tspdqes/error.hpp"

namespace tspdqes {
namespace {

using Json = nlohmann::ordered_json;

Json exact(const Rational &value) {
    if (value.denominator() == 1) {
        return value.numerator();
    }
    return to_string(value);
}

Rational read_exact(const Json &value, const std::string &field) {
    try {
        if (value.is_number_integer()) {
            return Rational(value.get<std::int64_t>());
        }
        if (value.is_string()) {
            return parse_rational(value.get<std::string>());
        }
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0, field);
    }
    throw ParseError("expected an integer or a \"p/q\" string", 0, field);
}

const Json &require(const Json &object, const char *key) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ParseError("missing required field", 0, key);
    }
    return *it;
}

Json parse_document(std::string_view text) {
    try {
        auto doc = Json::parse(text.begin(), text.end());
        if (!doc.is_object()) {
            throw ParseError("top-level value must be an object", 1, "");
        }
        return doc;
    } catch (const Json::parse_error &e) {
        throw ParseError(e.what(), 0, "");
    }
}

template <typename T> T read_as(const Json &value, const std::string &field) {
    try {
        return value.get<T>();
    } catch (const Json::exception &e) {
        throw ParseError(e.what(), 0, field);
    }
}

std::string finish(const Json &doc) { return doc.dump(2) + "\n"; }

Json variable(const VariableIndex &var) { return Json::array({var.v, var.t}); }

Json tour_json(const Tour &tour, bool closed) {
    return {{"order", tour.order},
            {"path", format_tour(tour, closed)},
            {"cost", exact(tour.cost)}};
}

bool closed_tours(const ProblemInstance &instance) {
    return instance.variant() != Variant::hamiltonian_path;
}

Json violation_json(const Violation &violation) {
    return {{"kind", violation_kind_name(violation.kind)},
            {"node", violation.node},
            {"step", violation.step},
            {"other", violation.other},
            {"count", violation.count},
            {"description", describe(violation)}};
}

Json violations_json(const std::vector<Violation> &violations) {
    Json out = Json::array();
    for (const auto &violation : violations) {
        out.push_back(violation_json(violation));
    }
    return out;
}

Json trace_json(const VqeTrace &trace, int qubits, std::uint64_t seed) {
    Json doc;
    doc["init"] = describe(trace.init);
    doc["initial_energy"] = trace.initial_energy;
    doc["energies"] = trace.energies;
    doc["final_energy"] = trace.final_energy;
    doc["converged"] = trace.converged;
    doc["evaluations"] = trace.evaluations;
    doc["evaluations_to_converge"] =
        trace.evaluations_to_converge ? Json(*trace.evaluations_to_converge)
                                      : Json(nullptr);
    doc["best_bitstring"] =
        format_mask(trace.best_bitstring, static_cast<std::size_t>(qubits));
    doc["seed"] = seed;
    doc["final_parameters"] = trace.final_parameters;
    return doc;
}

Json record_json(const LandscapeRecord &record) {
    return {{"positions", record.positions},
            {"basis", record.basis},
            {"element", record.element},
            {"energy", record.energy},
            {"rank", record.rank}};
}

} // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    auto [ptr, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("cannot format number");
    }
    return {buffer.data(), ptr};
}

std::string polynomial_to_json(const PseudoBooleanPolynomial &poly) {
    const auto &order = poly.variable_order();
    Json doc;
    doc["layout"] = layout_name(poly.layout());
    doc["nodes"] = poly.node_count();
    doc["variables"] = poly.variable_count();
    doc["constant"] = exact(poly.constant());
    Json linear = Json::array();
    for (const auto &[bit, c] : poly.linear()) {
        linear.push_back(Json::array({variable(order[bit]), exact(c)}));
    }
    doc["linear"] = std::move(linear);
    Json quadratic = Json::array();
    for (const auto &[key, c] : poly.quadratic()) {
        quadratic.push_back(Json::array(
            {variable(order[key.first]), variable(order[key.second]), exact(c)}));
    }
    doc["quadratic"] = std::move(quadratic);
    return finish(doc);
}

PseudoBooleanPolynomial polynomial_from_json(std::string_view text) {
    const auto doc = parse_document(text);
    Layout layout{};
    try {
        layout = parse_layout(read_as<std::string>(require(doc, "layout"), "layout"));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0, "layout");
    }
    const int nodes = read_as<int>(require(doc, "nodes"), "nodes");
    PseudoBooleanPolynomial poly(layout, nodes);
    poly.add_constant(read_exact(require(doc, "constant"), "constant"));
    auto read_var = [](const Json &value, const std::string &field) {
        if (!value.is_array() || value.size() != 2) {
            throw ParseError("expected [v, t]", 0, field);
        }
        return VariableIndex{read_as<int>(value[0], field),
                             read_as<int>(value[1], field)};
    };
    try {
        const auto &linear = require(doc, "linear");
        for (std::size_t i = 0; i < linear.size(); ++i) {
            const std::string field = "linear[" + std::to_string(i) + "]";
            const auto &entry = linear[i];
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError("expected [[v, t], c]", 0, field);
            }
            poly.add_linear(read_var(entry[0], field), read_exact(entry[1], field));
        }
        const auto &quadratic = require(doc, "quadratic");
        for (std::size_t i = 0; i < quadratic.size(); ++i) {
            const std::string field = "quadratic[" + std::to_string(i) + "]";
            const auto &entry = quadratic[i];
            if (!entry.is_array() || entry.size() != 3) {
                throw ParseError("expected [[v, t], [v, t], c]", 0, field);
            }
            poly.add_quadratic(read_var(entry[0], field), read_var(entry[1], field),
                               read_exact(entry[2], field));
        }
    } catch (const std::out_of_range &e) {
        throw ParseError(e.what(), 0, "variables");
    }
    return poly;
}

std::string ising_to_json(const IsingPolynomial &ising) {
    Json doc;
    doc["layout"] = layout_name(ising.layout());
    doc["nodes"] = ising.node_count();
    doc["n"] = ising.spin_count();
    doc["constant"] = exact(ising.constant());
    Json fields = Json::array();
    for (const auto &[i, h] : ising.fields()) {
        fields.push_back(Json::array({i, exact(h)}));
    }
    doc["fields"] = std::move(fields);
    Json couplings = Json::array();
    for (const auto &[key, j] : ising.couplings()) {
        couplings.push_back(Json::array({key.first, key.second, exact(j)}));
    }
    doc["couplings"] = std::move(couplings);
    return finish(doc);
}

IsingPolynomial ising_from_json(std::string_view text) {
    const auto doc = parse_document(text);
    Layout layout{};
    try {
        layout = parse_layout(read_as<std::string>(require(doc, "layout"), "layout"));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0, "layout");
    }
    const int nodes = read_as<int>(require(doc, "nodes"), "nodes");
    const auto n = read_as<std::size_t>(require(doc, "n"), "n");
    if (n != variable_count(layout, nodes)) {
        throw ParseError("spin count does not match layout and nodes", 0, "n");
    }
    auto read_spin = [n](const Json &value, const std::string &field) {
        const auto i = read_as<std::size_t>(value, field);
        if (i >= n) {
            throw ParseError("spin index out of range", 0, field);
        }
        return i;
    };
    IsingPolynomial::FieldTerms fields;
    const auto &field_list = require(doc, "fields");
    for (std::size_t k = 0; k < field_list.size(); ++k) {
        const std::string field = "fields[" + std::to_string(k) + "]";
        const auto &entry = field_list[k];
        if (!entry.is_array() || entry.size() != 2) {
            throw ParseError("expected [i, h]", 0, field);
        }
        fields[read_spin(entry[0], field)] += read_exact(entry[1], field);
    }
    IsingPolynomial::CouplingTerms couplings;
    const auto &coupling_list = require(doc, "couplings");
    for (std::size_t k = 0; k < coupling_list.size(); ++k) {
        const std::string field = "couplings[" + std::to_string(k) + "]";
        const auto &entry = coupling_list[k];
        if (!entry.is_array() || entry.size() != 3) {
            throw ParseError("expected [i, j, J]", 0, field);
        }
        auto i = read_spin(entry[0], field);
        auto j = read_spin(entry[1], field);
        if (i == j) {
            throw ParseError("coupling needs two distinct spins", 0, field);
        }
        if (i > j) {
            std::swap(i, j);
        }
        couplings[{i, j}] += read_exact(entry[2], field);
    }
    return {layout, nodes, read_exact(require(doc, "constant"), "constant"),
            std::move(fields), std::move(couplings)};
}

std::string spectrum_to_csv(const IsingPolynomial &ising,
                            std::span<const SpectrumEntry> entries) {
    std::ostringstream out;
    out << "bitstring,energy\n";
    for (const auto &entry : entries) {
        out << format_mask(entry.bits, ising.spin_count()) << ','
            << to_string(entry.energy) << '\n';
    }
    return out.str();
}

std::string landscape_to_csv(std::span<const LandscapeRecord> records) {
    std::ostringstream out;
    out << "index,positions,basis,element,energy\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto &r = records[i];
        out << i << ',' << r.positions[0] << '-' << r.positions[1] << '-'
            << r.positions[2] << ',' << r.basis << ',' << r.element << ','
            << format_double(r.energy) << '\n';
    }
    return out.str();
}

std::string trace_to_json(const VqeTrace &trace, int qubits,
                          std::uint64_t seed) {
    return finish(trace_json(trace, qubits, seed));
}

std::string solution_to_json(const ProblemInstance &instance,
                             const TspSolution &solution) {
    Json doc;
    doc["nodes"] = instance.node_count();
    doc["variant"] = variant_name(instance.variant());
    doc["feasible"] = solution.optimal_cost.has_value();
    doc["optimal_cost"] =
        solution.optimal_cost ? exact(*solution.optimal_cost) : Json(nullptr);
    Json tours = Json::array();
    for (const auto &tour : solution.tours) {
        tours.push_back(tour_json(tour, closed_tours(instance)));
    }
    doc["tours"] = std::move(tours);
    return finish(doc);
}

std::string audit_to_json(const ProblemInstance &instance,
                          const AuditReport &report) {
    const bool closed = closed_tours(instance);
    const auto bits = variable_count(Layout::full, instance.node_count());
    Json doc;
    doc["penalty_a"] = exact(report.penalties.a);
    doc["penalty_b"] = exact(report.penalties.b);
    doc["lucas_condition"] = report.lucas_condition;
    doc["safe_condition"] = report.safe_condition;
    doc["minimum"] = exact(report.minimum);
    doc["minimum_valid"] = report.minimum_valid;
    Json minimizers = Json::array();
    for (std::size_t i = 0; i < report.minimizers.size(); ++i) {
        const auto &tour = report.minimizer_tours[i];
        minimizers.push_back(
            {{"bitstring", format_mask(report.minimizers[i], bits)},
             {"tour", tour ? tour_json(*tour, closed) : Json(nullptr)}});
    }
    doc["minimizers"] = std::move(minimizers);
    doc["first_minimizer_violations"] =
        violations_json(report.first_minimizer_violations);
    doc["best_valid_value"] =
        report.best_valid_value ? exact(*report.best_valid_value) : Json(nullptr);
    doc["best_valid_tour"] = report.best_valid_tour
                                 ? tour_json(*report.best_valid_tour, closed)
                                 : Json(nullptr);
    return finish(doc);
}

std::string experiment_to_json(const ExperimentReport &report,
                               const std::optional<std::string> &timestamp) {
    const auto &config = report.config;
    Json doc;
    if (timestamp) {
        doc["timestamp"] = *timestamp;
    }
    doc["config"] = {{"mode", experiment_mode_name(config.mode)},
                     {"runs", report.runs.size()},
                     {"layers", config.layers},
                     {"entangler", entangler_name(config.entangler)},
                     {"rho_start", config.optimizer.rho_start},
                     {"rho_end", config.optimizer.rho_end},
                     {"max_evaluations", config.optimizer.max_evaluations},
                     {"seed", config.seed}};
    doc["qubits"] = report.qubits;
    doc["parameters"] = report.parameters;
    doc["optimal_cost"] =
        report.optimal_cost ? exact(*report.optimal_cost) : Json(nullptr);
    doc["ground_energy"] = exact(report.ground_energy);
    doc["target_energy"] = report.target_energy;
    doc["converged_count"] = report.converged_count;
    doc["mean_evaluations_to_converge"] =
        report.mean_evaluations_to_converge
            ? Json(*report.mean_evaluations_to_converge)
            : Json(nullptr);
    Json runs = Json::array();
    for (const auto &run : report.runs) {
        const auto seed = std::holds_alternative<RandomInit>(run.trace.init)
                              ? std::get<RandomInit>(run.trace.init).seed
                              : config.seed;
        Json entry;
        entry["trace"] = trace_json(run.trace, report.qubits, seed);
        entry["source"] = run.source ? record_json(*run.source) : Json(nullptr);
        entry["decoded"] = {
            {"valid", run.decoded.valid()},
            {"tour", run.decoded.tour ? tour_json(*run.decoded.tour, true)
                                      : Json(nullptr)},
            {"violations", violations_json(run.decoded.violations)}};
        runs.push_back(std::move(entry));
    }
    doc["runs"] = std::move(runs);
    return finish(doc);
}

} // namespace tspdqes
