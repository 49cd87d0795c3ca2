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
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tspdqes/audit.hpp"
#include "tspdqes/dqes.hpp"
#include "tspdqes/encoder.hpp"
#include "tspdqes/error.hpp"
#include "tspdqes/graph.hpp"
#include "tspdqes/ising.hpp"
#include "tspdqes/oracle.hpp"
#include "tspdqes/quantum.hpp"
#include "tspdqes/serialize.hpp"

namespace py = pybind11;
using namespace tspdqes;

namespace {

// Exact values cross the boundary as "p/q" text.
using EdgeTuple = std::tuple<int, int, std::string>;

ProblemInstance make_instance(int nodes, bool directed, const std::string &variant,
                              const std::vector<EdgeTuple> &edges,
                              const std::string &penalty_a,
                              const std::string &penalty_b) {
    std::vector<Edge> parsed;
    parsed.reserve(edges.size());
    for (const auto &[u, v, cost] : edges) {
        parsed.push_back({u, v, parse_rational(cost)});
    }
    return {nodes,
            directed,
            parse_variant(variant),
            std::move(parsed),
            parse_rational(penalty_a),
            parse_rational(penalty_b)};
}

std::vector<EdgeTuple> edges_of(const ProblemInstance &instance) {
    std::vector<EdgeTuple> out;
    for (const auto &e : instance.edges()) {
        out.emplace_back(e.u, e.v, to_string(e.cost));
    }
    return out;
}

InstanceFormat format_of(const std::string &name) {
    if (name == "json") {
        return InstanceFormat::json;
    }
    if (name == "edge_list") {
        return InstanceFormat::edge_list;
    }
    throw std::invalid_argument("unknown instance format '" + name + "'");
}

PenaltyMode penalty_mode_of(const std::string &name) {
    if (name == "lucas") {
        return PenaltyMode::lucas;
    }
    if (name == "safe") {
        return PenaltyMode::safe;
    }
    throw std::invalid_argument("unknown penalty mode '" + name + "'");
}

Layout encodable_layout(const std::string &name) {
    const auto layout = parse_layout(name);
    if (layout == Layout::extended_table) {
        throw std::invalid_argument("the extended table is a decoding layout only");
    }
    return layout;
}

std::string encode_json(const ProblemInstance &instance, const std::string &layout,
                        const std::string &form) {
    const auto poly = encode(instance, encodable_layout(layout));
    if (form == "ising") {
        return ising_to_json(to_ising(poly));
    }
    if (form == "binary") {
        return polynomial_to_json(poly);
    }
    throw std::invalid_argument("form must be 'binary' or 'ising'");
}

std::string spectrum_csv(const ProblemInstance &instance, const std::string &layout,
                         std::size_t cap, unsigned threads) {
    const auto ising = to_ising(encode(instance, encodable_layout(layout)));
    return spectrum_to_csv(ising, spectrum(ising, cap, threads));
}

std::string landscape_csv(const ProblemInstance &instance, unsigned threads) {
    return landscape_to_csv(compute_landscape(to_ising(encode_efficient(instance)), threads));
}

std::string experiment_json(const ProblemInstance &instance, const std::string &mode,
                            int runs, std::uint64_t seed, int layers,
                            const std::string &entangler, int max_evaluations,
                            double rho_start, double rho_end, unsigned threads) {
    ExperimentConfig config;
    config.mode = parse_experiment_mode(mode);
    config.runs = config.mode == ExperimentMode::zeros ? 1 : runs;
    config.seed = seed;
    config.layers = layers;
    config.entangler = parse_entangler(entangler);
    config.optimizer = {rho_start, rho_end, max_evaluations};
    config.threads = threads;
    return experiment_to_json(run_experiment(instance, config), std::nullopt);
}

py::tuple validate(const ProblemInstance &instance, const std::string &layout,
                   const std::string &bitstring) {
    const auto check = validate_bitstring(instance, parse_layout(layout),
                                          parse_bits(bitstring));
    std::vector<std::string> violations;
    for (const auto &v : check.violations) {
        violations.push_back(describe(v));
    }
    const bool closed = instance.variant() != Variant::hamiltonian_path;
    py::object tour = py::none();
    if (check.tour) {
        tour = py::make_tuple(check.tour->order, to_string(check.tour->cost),
                              format_tour(*check.tour, closed));
    }
    return py::make_tuple(tour, violations);
}

} // namespace

PYBIND11_MODULE(_tspdqes, m) {
    m.doc() = "Ising encodings of TSP instances, MUB landscapes and VQE experiments.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SizeCapError>(m, "SizeCapError", PyExc_OverflowError);

    py::class_<ProblemInstance>(m, "Instance")
        .def(py::init(&make_instance), py::arg("nodes"), py::arg("directed"),
             py::arg("variant"), py::arg("edges"), py::arg("penalty_a"),
             py::arg("penalty_b"))
        .def_property_readonly("nodes", &ProblemInstance::node_count)
        .def_property_readonly("directed", &ProblemInstance::directed)
        .def_property_readonly("variant",
                               [](const ProblemInstance &p) {
                                   return std::string(variant_name(p.variant()));
                               })
        .def_property_readonly("edges", &edges_of)
        .def_property_readonly(
            "penalty_a", [](const ProblemInstance &p) { return to_string(p.penalty_a()); })
        .def_property_readonly(
            "penalty_b", [](const ProblemInstance &p) { return to_string(p.penalty_b()); })
        .def("with_penalties",
             [](const ProblemInstance &p, const std::string &a, const std::string &b) {
                 return p.with_penalties(parse_rational(a), parse_rational(b));
             })
        .def("is_complete", &is_complete)
        .def(
            "save",
            [](const ProblemInstance &p, const std::string &format) {
                return save_instance(p, format_of(format));
            },
            py::arg("format") = "json")
        .def(py::self == py::self)
        .def("__repr__", [](const ProblemInstance &p) {
            return "Instance(nodes=" + std::to_string(p.node_count()) + ", variant=" +
                   std::string(variant_name(p.variant())) + ", edges=" +
                   std::to_string(p.edges().size()) + ")";
        });

    m.def("load_instance", [](const std::string &path) { return load_instance_file(path); },
          py::arg("path"));
    m.def(
        "parse_instance",
        [](const std::string &text, const std::string &format) {
            return load_instance(std::string_view(text), format_of(format));
        },
        py::arg("text"), py::arg("format") = "json");
    m.def(
        "suggest_penalties",
        [](const ProblemInstance &p, const std::string &mode) {
            const auto penalties = suggest_penalties(p, penalty_mode_of(mode));
            return std::pair(to_string(penalties.a), to_string(penalties.b));
        },
        py::arg("instance"), py::arg("mode") = "lucas");

    m.def("encode_json", &encode_json, py::arg("instance"),
          py::arg("layout") = "efficient", py::arg("form") = "ising");
    m.def(
        "solve_json",
        [](const ProblemInstance &p) { return solution_to_json(p, solve_exact_tsp(p)); },
        py::arg("instance"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "audit_json",
        [](const ProblemInstance &p, std::size_t cap, unsigned threads) {
            return audit_to_json(p, audit_penalties(p, cap, threads));
        },
        py::arg("instance"), py::arg("cap") = kDefaultAuditCap, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def("spectrum_csv", &spectrum_csv, py::arg("instance"),
          py::arg("layout") = "efficient", py::arg("cap") = kDefaultEnumerationCap,
          py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("landscape_csv", &landscape_csv, py::arg("instance"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("experiment_json", &experiment_json, py::arg("instance"),
          py::arg("mode") = "zeros", py::arg("runs") = 10, py::arg("seed") = 0,
          py::arg("layers") = 2, py::arg("entangler") = "linear",
          py::arg("max_evaluations") = 2000, py::arg("rho_start") = 0.5,
          py::arg("rho_end") = 1e-4, py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("validate", &validate, py::arg("instance"), py::arg("layout"),
          py::arg("bitstring"));
    m.def(
        "mub_state",
        [](int basis, int element) {
            const auto &state = build_mubs_3q().state(basis, element);
            return std::vector<Complex>(state.begin(), state.end());
        },
        py::arg("basis"), py::arg("element"));
}
