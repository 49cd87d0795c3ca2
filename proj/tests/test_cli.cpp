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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "reference.hpp"

using nlohmann::json;
using namespace tspdqes::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "tspdqes");
    std::vector<const char *> argv;
    for (const auto &arg : args) {
        argv.push_back(arg.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name) {
    return reference::data_path("fixtures/" + name);
}

} // namespace

TEST_CASE("encode writes one spin per variable", "[cli]") {
    const auto efficient = run({"encode", fixture("landscape.json")});
    REQUIRE(efficient.code == kExitOk);
    CHECK(json::parse(efficient.out)["n"] == 9);
    CHECK(efficient.err.find("tspdqes encode: instance=") == 0);
    CHECK(efficient.err.find("layout=efficient form=ising") != std::string::npos);

    const auto full = run({"encode", fixture("landscape.txt"), "--layout", "full",
                           "--form", "binary"});
    REQUIRE(full.code == kExitOk);
    const auto doc = json::parse(full.out);
    CHECK(doc["variables"] == 16);
    CHECK(doc["layout"] == "full");

    const auto fixed = run({"encode", fixture("landscape.json"), "--layout", "fixed"});
    REQUIRE(fixed.code == kExitOk);
    CHECK(json::parse(fixed.out)["layout"] == "fixed_start_full");
}

TEST_CASE("penalty overrides", "[cli]") {
    const auto safe = run({"encode", fixture("counterexample.json"), "--penalties",
                           "safe"});
    REQUIRE(safe.code == kExitOk);
    CHECK(safe.err.find("penalty_a=41 penalty_b=1") != std::string::npos);
    const auto manual = run({"encode", fixture("counterexample.json"), "--penalties",
                             "explicit", "5/2", "1"});
    REQUIRE(manual.code == kExitOk);
    CHECK(manual.err.find("penalty_a=5/2") != std::string::npos);
    CHECK(run({"encode", fixture("counterexample.json"), "--penalties", "explicit",
               "-1", "1"})
              .code == kExitInput);
    CHECK(run({"encode", fixture("counterexample.json"), "--penalties", "huge"}).code ==
          kExitInput);
}

TEST_CASE("solve reports every optimal tour", "[cli]") {
    const auto result = run({"solve", fixture("landscape.json")});
    REQUIRE(result.code == kExitOk);
    const auto doc = json::parse(result.out);
    CHECK(doc["optimal_cost"] == 13);
    CHECK(doc["tours"].size() == 2);

    const auto none = run({"solve", fixture("no_cycle.txt")});
    REQUIRE(none.code == kExitOk);
    CHECK(json::parse(none.out)["tours"].empty());
    CHECK(none.err.find("no valid tour") != std::string::npos);
}

TEST_CASE("audit flags the invalid minimum", "[cli]") {
    const auto lucas = run({"audit", fixture("counterexample.json")});
    REQUIRE(lucas.code == kExitOk);
    CHECK(lucas.err.find("minimum 14 INVALID") != std::string::npos);
    const auto safe = run({"audit", fixture("counterexample.json"), "--penalties", "safe"});
    REQUIRE(safe.code == kExitOk);
    CHECK(safe.err.find("minimum 22 VALID") != std::string::npos);
    CHECK(run({"audit", fixture("counterexample.json"), "--cap", "9"}).code ==
          kExitSizeCap);
}

TEST_CASE("spectrum and landscape csv", "[cli]") {
    const auto spectrum = run({"spectrum", fixture("landscape.json")});
    REQUIRE(spectrum.code == kExitOk);
    CHECK(spectrum.out.rfind("bitstring,energy\n001100010,13\n", 0) == 0);
    CHECK(run({"spectrum", fixture("landscape.json"), "--layout", "full", "--cap", "10"})
              .code == kExitSizeCap);
    const auto landscape = run({"landscape", fixture("landscape.json"), "--threads", "2"});
    REQUIRE(landscape.code == kExitOk);
    CHECK(std::count(landscape.out.begin(), landscape.out.end(), '\n') == 6049);
}

TEST_CASE("vqe output is deterministic without a timestamp", "[cli]") {
    const std::vector<std::string> args{"vqe",         fixture("landscape.json"),
                                        "--init",      "random",
                                        "2",           "--seed",
                                        "7",           "--max-evals",
                                        "40",          "--no-timestamp"};
    const auto first = run(args);
    REQUIRE(first.code == kExitOk);
    auto threaded_args = args;
    threaded_args.insert(threaded_args.end(), {"--threads", "2"});
    const auto second = run(threaded_args);
    CHECK(first.out == second.out);
    const auto doc = json::parse(first.out);
    CHECK_FALSE(doc.contains("timestamp"));
    CHECK(doc["runs"].size() == 2);
    CHECK(doc["runs"][0]["trace"]["seed"] == 7);
    CHECK(first.err.find("rho_start=0.5 rho_end=1e-04") != std::string::npos);
    CHECK(first.err.find("converged 0/2") != std::string::npos);

    const auto stamped = run({"vqe", fixture("landscape.json"), "--max-evals", "5"});
    REQUIRE(stamped.code == kExitOk);
    const auto stamp = json::parse(stamped.out)["timestamp"].get<std::string>();
    CHECK(stamp.size() == 20);
    CHECK(stamp.back() == 'Z');
}

TEST_CASE("vqe option validation", "[cli]") {
    const auto path = fixture("landscape.json");
    CHECK(run({"vqe", path, "--init", "zeros", "3"}).code == kExitInput);
    CHECK(run({"vqe", path, "--init", "random"}).code == kExitInput);
    CHECK(run({"vqe", path, "--init", "random", "x"}).code == kExitInput);
    CHECK(run({"vqe", path, "--init", "sideways", "2"}).code == kExitInput);
    CHECK(run({"vqe", path, "--rho-start", "0.1", "--rho-end", "0.2"}).code ==
          kExitInput);
    CHECK(run({"vqe", path, "--entangler", "star"}).code == kExitInput);
}

TEST_CASE("exit codes for bad input", "[cli]") {
    CHECK(run({}).code == kExitInput);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"frobnicate"}).code == kExitInput);
    CHECK(run({"solve"}).code == kExitInput);
    const auto missing = run({"solve", fixture("absent.json")});
    CHECK(missing.code == kExitInput);
    CHECK(missing.err.find("cannot open") != std::string::npos);
    const auto bad = run({"solve", fixture("bad_node.json")});
    CHECK(bad.code == kExitInput);
    CHECK(bad.err.rfind("error: ", 0) == 0);
    CHECK(run({"solve", fixture("landscape.json"), "--threads", "0"}).code == kExitInput);
}

TEST_CASE("output goes to a file when asked", "[cli]") {
    const auto path = std::filesystem::temp_directory_path() / "tspdqes_cli_solve.json";
    std::filesystem::remove(path);
    const auto result = run({"solve", fixture("landscape.json"), "-o", path.string()});
    REQUIRE(result.code == kExitOk);
    CHECK(result.out.empty());
    std::ifstream in(path);
    const auto doc = json::parse(in);
    CHECK(doc["optimal_cost"] == 13);
    std::filesystem::remove(path);
    CHECK(run({"solve", fixture("landscape.json"), "-o", "/nonexistent/dir/x.json"})
              .code == kExitInternal);
}
