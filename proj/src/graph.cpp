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
#include "tspdqes/graph.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tspdqes/error.hpp"

namespace tspdqes {

std::string_view variant_name(Variant variant) {
    switch (variant) {
    case Variant::hamiltonian_cycle:
        return "cycle";
    case Variant::hamiltonian_path:
        return "path";
    case Variant::tsp:
        return "tsp";
    }
    return "tsp";
}

Variant parse_variant(std::string_view name) {
    if (name == "cycle" || name == "hamiltonian_cycle") {
        return Variant::hamiltonian_cycle;
    }
    if (name == "path" || name == "hamiltonian_path") {
        return Variant::hamiltonian_path;
    }
    if (name == "tsp") {
        return Variant::tsp;
    }
    throw std::invalid_argument("unknown variant '" + std::string(name) +
                                "' (expected tsp, cycle or path)");
}

ProblemInstance::ProblemInstance(int node_count, bool directed,
                                 Variant variant, std::vector<Edge> edges,
                                 Rational penalty_a, Rational penalty_b)
    : node_count_(node_count), directed_(directed), variant_(variant),
      edges_(std::move(edges)), penalty_a_(penalty_a), penalty_b_(penalty_b) {
    if (node_count_ < 1) {
        throw ValidationError("node count must be positive, got " +
                              std::to_string(node_count_));
    }
    if (penalty_a_ <= 0) {
        throw ValidationError("penalty_a must be positive, got " +
                              to_string(penalty_a_));
    }
    if (variant_ == Variant::tsp ? penalty_b_ <= 0 : penalty_b_ < 0) {
        throw ValidationError("penalty_b must be positive for tsp instances, "
                              "got " +
                              to_string(penalty_b_));
    }
    costs_.assign(static_cast<std::size_t>(node_count_) * node_count_,
                  std::nullopt);
    for (auto &edge : edges_) {
        const std::string where = "edge (" + std::to_string(edge.u) + "," +
                                  std::to_string(edge.v) + ")";
        if (edge.u < 1 || edge.u > node_count_ || edge.v < 1 ||
            edge.v > node_count_) {
            throw ValidationError(where + ": node id outside 1.." +
                                  std::to_string(node_count_));
        }
        if (edge.u == edge.v) {
            throw ValidationError(where + ": self-loop");
        }
        if (edge.cost < 0) {
            throw ValidationError(where + ": negative cost " +
                                  to_string(edge.cost));
        }
        if (!directed_ && edge.u > edge.v) {
            std::swap(edge.u, edge.v);
        }
        auto &forward = costs_[slot(edge.u, edge.v)];
        if (forward.has_value()) {
            throw ValidationError(where + ": duplicate edge");
        }
        forward = edge.cost;
        if (!directed_) {
            costs_[slot(edge.v, edge.u)] = edge.cost;
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
}

bool ProblemInstance::has_edge(int u, int v) const {
    return cost(u, v).has_value();
}

std::optional<Rational> ProblemInstance::cost(int u, int v) const {
    if (u < 1 || u > node_count_ || v < 1 || v > node_count_) {
        return std::nullopt;
    }
    return costs_[slot(u, v)];
}

Rational ProblemInstance::max_cost() const {
    if (edges_.empty()) {
        throw ValidationError("instance has no edges; max cost is undefined");
    }
    Rational best = edges_.front().cost;
    for (const auto &edge : edges_) {
        best = std::max(best, edge.cost);
    }
    return best;
}

ProblemInstance ProblemInstance::with_penalties(Rational penalty_a,
                                                Rational penalty_b) const {
    return {node_count_, directed_, variant_, edges_, penalty_a, penalty_b};
}

ProblemInstance ProblemInstance::with_variant(Variant variant) const {
    return {node_count_, directed_, variant, edges_, penalty_a_, penalty_b_};
}

bool is_complete(const ProblemInstance &instance) {
    const int n = instance.node_count();
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u != v && !instance.has_edge(u, v)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

using nlohmann::json;

int line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(),
                                           text.begin() + static_cast<long>(offset),
                                           '\n'));
}

Rational json_rational(const json &value, const std::string &field) {
    try {
        if (value.is_number_integer()) {
            return Rational(value.get<std::int64_t>());
        }
        if (value.is_number_float()) {
            return rational_from_double(value.get<double>());
        }
        if (value.is_string()) {
            return parse_rational(value.get<std::string>());
        }
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0, field);
    }
    throw ParseError("expected a number or a \"p/q\" string", 0, field);
}

const json &require(const json &object, const char *key) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ParseError("missing required field", 0, key);
    }
    return *it;
}

ProblemInstance parse_json_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(),
                         line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "");
    }
    if (!doc.is_object()) {
        throw ParseError("top-level value must be an object", 1, "");
    }
    const auto &nodes = require(doc, "nodes");
    if (!nodes.is_number_integer()) {
        throw ParseError("expected an integer", 0, "nodes");
    }
    const auto &directed = require(doc, "directed");
    if (!directed.is_boolean()) {
        throw ParseError("expected true or false", 0, "directed");
    }
    const auto &variant = require(doc, "variant");
    if (!variant.is_string()) {
        throw ParseError("expected a string", 0, "variant");
    }
    Variant parsed_variant{};
    try {
        parsed_variant = parse_variant(variant.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0, "variant");
    }
    const auto &edges = require(doc, "edges");
    if (!edges.is_array()) {
        throw ParseError("expected an array", 0, "edges");
    }
    std::vector<Edge> parsed_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const auto &entry = edges[i];
        if (!entry.is_array() || entry.size() != 3 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
            throw ParseError("expected [u, v, cost]", 0, field);
        }
        parsed_edges.push_back({entry[0].get<int>(), entry[1].get<int>(),
                                json_rational(entry[2], field)});
    }
    return {nodes.get<int>(),
            directed.get<bool>(),
            parsed_variant,
            std::move(parsed_edges),
            json_rational(require(doc, "penalty_a"), "penalty_a"),
            json_rational(require(doc, "penalty_b"), "penalty_b")};
}

std::vector<std::string> split_tokens(const std::string &line) {
    std::istringstream stream(line);
    return {std::istream_iterator<std::string>(stream),
            std::istream_iterator<std::string>()};
}

int token_int(const std::string &token, int line, const char *field) {
    try {
        const Rational value = parse_rational(token);
        if (value.denominator() != 1) {
            throw std::invalid_argument("not an integer");
        }
        return static_cast<int>(value.numerator());
    } catch (const std::invalid_argument &) {
        throw ParseError("expected an integer, got '" + token + "'", line,
                         field);
    }
}

Rational token_rational(const std::string &token, int line, const char *field) {
    try {
        return parse_rational(token);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), line, field);
    }
}

ProblemInstance parse_edge_list(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_number = 0;
    bool have_header = false;
    int nodes = 0;
    bool directed = false;
    Variant variant = Variant::tsp;
    Rational penalty_a;
    Rational penalty_b;
    std::vector<Edge> edges;
    while (std::getline(stream, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        const auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 5) {
                throw ParseError("header must be 'N directed variant A B'",
                                 line_number, "header");
            }
            nodes = token_int(tokens[0], line_number, "nodes");
            if (tokens[1] == "1" || tokens[1] == "true") {
                directed = true;
            } else if (tokens[1] == "0" || tokens[1] == "false") {
                directed = false;
            } else {
                throw ParseError("expected 0 or 1, got '" + tokens[1] + "'",
                                 line_number, "directed");
            }
            try {
                variant = parse_variant(tokens[2]);
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what(), line_number, "variant");
            }
            penalty_a = token_rational(tokens[3], line_number, "penalty_a");
            penalty_b = token_rational(tokens[4], line_number, "penalty_b");
            have_header = true;
            continue;
        }
        if (tokens.size() != 3) {
            throw ParseError("edge line must be 'u v cost'", line_number,
                             "edge");
        }
        edges.push_back({token_int(tokens[0], line_number, "u"),
                         token_int(tokens[1], line_number, "v"),
                         token_rational(tokens[2], line_number, "cost")});
    }
    if (!have_header) {
        throw ParseError("missing header line", line_number, "header");
    }
    return {nodes, directed, variant, std::move(edges), penalty_a, penalty_b};
}

std::string json_number(const Rational &value) {
    if (value.denominator() == 1) {
        return std::to_string(value.numerator());
    }
    return "\"" + to_string(value) + "\"";
}

} // namespace

ProblemInstance load_instance(std::string_view text, InstanceFormat format) {
    return format == InstanceFormat::json ? parse_json_instance(text)
                                          : parse_edge_list(text);
}

ProblemInstance load_instance(std::istream &source, InstanceFormat format) {
    const std::string text{std::istreambuf_iterator<char>(source),
                           std::istreambuf_iterator<char>()};
    return load_instance(text, format);
}

ProblemInstance load_instance_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file '" + path.string() + "'", 0, "");
    }
    const auto format = path.extension() == ".json" ? InstanceFormat::json
                                                    : InstanceFormat::edge_list;
    return load_instance(in, format);
}

void save_instance(const ProblemInstance &instance, std::ostream &sink,
                   InstanceFormat format) {
    if (format == InstanceFormat::edge_list) {
        sink << instance.node_count() << ' ' << (instance.directed() ? 1 : 0)
             << ' ' << variant_name(instance.variant()) << ' '
             << to_string(instance.penalty_a()) << ' '
             << to_string(instance.penalty_b()) << '\n';
        for (const auto &edge : instance.edges()) {
            sink << edge.u << ' ' << edge.v << ' ' << to_string(edge.cost)
                 << '\n';
        }
        return;
    }
    sink << "{\n  \"nodes\": " << instance.node_count()
         << ",\n  \"directed\": " << (instance.directed() ? "true" : "false")
         << ",\n  \"variant\": \"" << variant_name(instance.variant())
         << "\",\n  \"edges\": [";
    const auto &edges = instance.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        sink << (i == 0 ? "\n    " : ",\n    ") << '[' << edges[i].u << ", "
             << edges[i].v << ", " << json_number(edges[i].cost) << ']';
    }
    sink << (edges.empty() ? "]" : "\n  ]")
         << ",\n  \"penalty_a\": " << json_number(instance.penalty_a())
         << ",\n  \"penalty_b\": " << json_number(instance.penalty_b())
         << "\n}\n";
}

std::string save_instance(const ProblemInstance &instance,
                          InstanceFormat format) {
    std::ostringstream out;
    save_instance(instance, out, format);
    return out.str();
}

} // namespace tspdqes
