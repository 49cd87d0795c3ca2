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
#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tspdqes/audit.hpp"
#include "tspdqes/dqes.hpp"
#include "tspdqes/encoder.hpp"
#include "tspdqes/error.hpp"
#include "tspdqes/graph.hpp"
#include "tspdqes/ising.hpp"
#include "tspdqes/oracle.hpp"
#include "tspdqes/parallel.hpp"
#include "tspdqes/serialize.hpp"

namespace tspdqes::cli {
namespace {

struct CommonOptions {
    std::string instance_path;
    std::string output_path;
    std::vector<std::string> penalties{"file"};
    unsigned threads = 1;
};

struct EncodeOptions {
    std::string layout = "efficient";
    std::string form = "ising";
};

struct AuditOptions {
    std::size_t cap = kDefaultAuditCap;
};

struct SpectrumOptions {
    std::string layout = "efficient";
    std::size_t cap = kDefaultEnumerationCap;
};

struct VqeOptions {
    std::vector<std::string> init{"zeros"};
    std::uint64_t seed = 0;
    int layers = 2;
    int max_evaluations = 2000;
    double rho_start = 0.5;
    double rho_end = 1e-4;
    std::string entangler = "linear";
    bool no_timestamp = false;
};

// "lucas", "safe", "explicit A B", or "file" to keep the instance's own.
ProblemInstance apply_penalties(const ProblemInstance &instance,
                                const std::vector<std::string> &spec) {
    const auto &mode = spec.front();
    if (mode == "file" && spec.size() == 1) {
        return instance;
    }
    if ((mode == "lucas" || mode == "safe") && spec.size() == 1) {
        const auto p = suggest_penalties(
            instance, mode == "safe" ? PenaltyMode::safe : PenaltyMode::lucas);
        return instance.with_penalties(p.a, p.b);
    }
    if (mode == "explicit" && spec.size() == 3) {
        const auto a = parse_rational(spec[1]);
        const auto b = parse_rational(spec[2]);
        if (a <= 0 || b <= 0) {
            throw ValidationError("penalties must be positive");
        }
        return instance.with_penalties(a, b);
    }
    throw ValidationError(
        "--penalties expects 'file', 'lucas', 'safe' or 'explicit A B'");
}

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (const auto &item : items) {
        out += (out.empty() ? "" : " ") + item;
    }
    return out;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

void emit(const std::string &text, const CommonOptions &common,
          std::ostream &out) {
    if (common.output_path.empty() || common.output_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(common.output_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write '" + common.output_path + "'");
    }
    file << text;
}

void log_config(std::ostream &err, const std::string &command,
                const CommonOptions &common, const ProblemInstance &instance,
                const std::vector<std::pair<std::string, std::string>> &extra) {
    err << "tspdqes " << command << ": instance=" << common.instance_path
        << " nodes=" << instance.node_count()
        << " variant=" << variant_name(instance.variant())
        << " penalty_a=" << to_string(instance.penalty_a())
        << " penalty_b=" << to_string(instance.penalty_b())
        << " threads=" << common.threads;
    for (const auto &[key, value] : extra) {
        err << ' ' << key << '=' << value;
    }
    err << " output="
        << (common.output_path.empty() ? std::string("-") : common.output_path)
        << '\n';
}

ProblemInstance load(const CommonOptions &common) {
    return apply_penalties(load_instance_file(common.instance_path),
                           common.penalties);
}

void add_common(CLI::App &command, CommonOptions &common, bool penalties) {
    command.add_option("instance", common.instance_path,
                       "Instance file (.json, otherwise edge list)")
        ->required();
    command.add_option("-o,--output,--out", common.output_path,
                       "Output file ('-' for stdout)")
        ->default_str("-");
    command.add_option("--threads", common.threads,
                       "Worker threads (TSPDQES_THREADS or 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    if (penalties) {
        command.add_option("--penalties", common.penalties,
                           "file | lucas | safe | explicit A B")
            ->expected(1, 3)
            ->capture_default_str();
    }
}

int run_encode(const CommonOptions &common, const EncodeOptions &options,
               std::ostream &out, std::ostream &err) {
    const auto instance = load(common);
    const auto layout = parse_layout(options.layout);
    if (layout == Layout::extended_table) {
        throw ValidationError("the extended table is a decoding layout only");
    }
    log_config(err, "encode", common, instance,
               {{"layout", std::string(layout_name(layout))},
                {"form", options.form}});
    const auto poly = encode(instance, layout);
    emit(options.form == "ising" ? ising_to_json(to_ising(poly))
                                 : polynomial_to_json(poly),
         common, out);
    return kExitOk;
}

int run_solve(const CommonOptions &common, std::ostream &out,
              std::ostream &err) {
    const auto instance = load(common);
    log_config(err, "solve", common, instance, {});
    const auto solution = solve_exact_tsp(instance);
    if (!solution.optimal_cost) {
        err << "no valid tour\n";
    }
    emit(solution_to_json(instance, solution), common, out);
    return kExitOk;
}

int run_audit(const CommonOptions &common, const AuditOptions &options,
              std::ostream &out, std::ostream &err) {
    const auto instance = load(common);
    log_config(err, "audit", common, instance,
               {{"cap", std::to_string(options.cap)}});
    const auto report = audit_penalties(instance, options.cap, common.threads);
    err << "minimum " << to_string(report.minimum) << ' '
        << (report.minimum_valid ? "VALID" : "INVALID") << '\n';
    emit(audit_to_json(instance, report), common, out);
    return kExitOk;
}

int run_spectrum(const CommonOptions &common, const SpectrumOptions &options,
                 std::ostream &out, std::ostream &err) {
    const auto instance = load(common);
    const auto layout = parse_layout(options.layout);
    if (layout == Layout::extended_table) {
        throw ValidationError("the extended table is a decoding layout only");
    }
    log_config(err, "spectrum", common, instance,
               {{"layout", std::string(layout_name(layout))},
                {"cap", std::to_string(options.cap)}});
    const auto ising = to_ising(encode(instance, layout));
    const auto entries = spectrum(ising, options.cap, common.threads);
    emit(spectrum_to_csv(ising, entries), common, out);
    return kExitOk;
}

int run_landscape(const CommonOptions &common, std::ostream &out,
                  std::ostream &err) {
    const auto instance = load(common);
    log_config(err, "landscape", common, instance, {{"layout", "efficient"}});
    const auto ising = to_ising(encode_efficient(instance));
    const auto records = compute_landscape(ising, common.threads);
    emit(landscape_to_csv(records), common, out);
    return kExitOk;
}

ExperimentConfig experiment_config(const CommonOptions &common,
                                   const VqeOptions &options) {
    ExperimentConfig config;
    config.mode = parse_experiment_mode(options.init.front());
    if (config.mode == ExperimentMode::zeros) {
        if (options.init.size() != 1) {
            throw ValidationError("--init zeros takes no count");
        }
        config.runs = 1;
    } else {
        if (options.init.size() != 2) {
            throw ValidationError("--init " + options.init.front() +
                                  " needs a run count K");
        }
        try {
            config.runs = std::stoi(options.init[1]);
        } catch (const std::exception &) {
            throw ValidationError("run count must be an integer, got '" +
                                  options.init[1] + "'");
        }
        if (config.runs < 1) {
            throw ValidationError("run count must be positive");
        }
    }
    config.layers = options.layers;
    config.entangler = parse_entangler(options.entangler);
    config.optimizer.rho_start = options.rho_start;
    config.optimizer.rho_end = options.rho_end;
    config.optimizer.max_evaluations = options.max_evaluations;
    config.seed = options.seed;
    config.threads = common.threads;
    return config;
}

int run_vqe_command(const CommonOptions &common, const VqeOptions &options,
                    std::ostream &out, std::ostream &err) {
    const auto instance = load(common);
    const auto config = experiment_config(common, options);
    if (config.optimizer.rho_end <= 0 ||
        config.optimizer.rho_end > config.optimizer.rho_start) {
        throw ValidationError("need 0 < rho-end <= rho-start");
    }
    log_config(err, "vqe", common, instance,
               {{"init", join(options.init)},
                {"seed", std::to_string(config.seed)},
                {"layers", std::to_string(config.layers)},
                {"entangler", std::string(entangler_name(config.entangler))},
                {"max_evals", std::to_string(config.optimizer.max_evaluations)},
                {"rho_start", format_double(config.optimizer.rho_start)},
                {"rho_end", format_double(config.optimizer.rho_end)},
                {"timestamp", options.no_timestamp ? "off" : "on"}});
    const auto report = run_experiment(instance, config);
    err << "converged " << report.converged_count << '/' << report.runs.size();
    if (report.mean_evaluations_to_converge) {
        err << " mean evaluations " << *report.mean_evaluations_to_converge;
    }
    err << '\n';
    const std::optional<std::string> stamp =
        options.no_timestamp ? std::nullopt
                             : std::optional<std::string>(utc_timestamp());
    emit(experiment_to_json(report, stamp), common, out);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"Ising encodings of TSP instances, MUB landscapes and VQE "
                 "experiments with brute-force oracles",
                 "tspdqes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    CommonOptions common;
    common.threads = default_thread_count();
    EncodeOptions encode_options;
    AuditOptions audit_options;
    SpectrumOptions spectrum_options;
    VqeOptions vqe_options;

    auto *encode_cmd = app.add_subcommand(
        "encode", "Write the binary or Ising Hamiltonian as JSON");
    add_common(*encode_cmd, common, true);
    encode_cmd->add_option("--layout", encode_options.layout, "Variable layout")
        ->check(CLI::IsMember({"full", "fixed", "efficient"}))
        ->capture_default_str();
    encode_cmd->add_option("--form", encode_options.form, "Output form")
        ->check(CLI::IsMember({"binary", "ising"}))
        ->capture_default_str();

    auto *solve_cmd =
        app.add_subcommand("solve", "Exact optimal tours by enumeration");
    add_common(*solve_cmd, common, false);

    auto *audit_cmd = app.add_subcommand(
        "audit", "Enumerate the full-layout Hamiltonian and check its minimum");
    add_common(*audit_cmd, common, true);
    audit_cmd->add_option("--cap", audit_options.cap,
                          "Largest variable count to enumerate")
        ->capture_default_str();

    auto *spectrum_cmd = app.add_subcommand(
        "spectrum", "All Ising energies as CSV, ascending");
    add_common(*spectrum_cmd, common, true);
    spectrum_cmd->add_option("--layout", spectrum_options.layout,
                             "Variable layout")
        ->check(CLI::IsMember({"full", "fixed", "efficient"}))
        ->capture_default_str();
    spectrum_cmd->add_option("--cap", spectrum_options.cap,
                             "Largest variable count to enumerate")
        ->capture_default_str();

    auto *landscape_cmd = app.add_subcommand(
        "landscape", "Energies of all embedded 3-qubit MUB states as CSV");
    add_common(*landscape_cmd, common, true);

    auto *vqe_cmd = app.add_subcommand(
        "vqe", "VQE runs from zeros, the best MUB states or random states");
    add_common(*vqe_cmd, common, true);
    vqe_cmd->add_option("--init", vqe_options.init,
                        "zeros | best-mubs K | random K")
        ->expected(1, 2)
        ->capture_default_str();
    vqe_cmd->add_option("--seed", vqe_options.seed,
                        "Seed; random run i uses seed + i")
        ->capture_default_str();
    vqe_cmd->add_option("--layers", vqe_options.layers, "Ansatz layers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vqe_cmd->add_option("--max-evals", vqe_options.max_evaluations,
                        "Energy evaluations per run")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vqe_cmd->add_option("--rho-start", vqe_options.rho_start,
                        "Initial optimizer step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vqe_cmd->add_option("--rho-end", vqe_options.rho_end,
                        "Final optimizer step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vqe_cmd->add_option("--entangler", vqe_options.entangler,
                        "Two-qubit layer")
        ->check(CLI::IsMember({"linear", "ring"}))
        ->capture_default_str();
    vqe_cmd->add_flag("--no-timestamp", vqe_options.no_timestamp,
                      "Omit the timestamp so reruns are byte-identical");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (encode_cmd->parsed()) {
            return run_encode(common, encode_options, out, err);
        }
        if (solve_cmd->parsed()) {
            return run_solve(common, out, err);
        }
        if (audit_cmd->parsed()) {
            return run_audit(common, audit_options, out, err);
        }
        if (spectrum_cmd->parsed()) {
            return run_spectrum(common, spectrum_options, out, err);
        }
        if (landscape_cmd->parsed()) {
            return run_landscape(common, out, err);
        }
        return run_vqe_command(common, vqe_options, out, err);
    } catch (const SizeCapError &e) {
        err << "error: " << e.what() << '\n';
        return kExitSizeCap;
    } catch (const ParseError &e) {
        err << "error: " << common.instance_path << ": " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace tspdqes::cli
