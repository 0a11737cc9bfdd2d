#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "scottforge/certificates.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// SCOTT_FORGE_BIN is injected by the build with the path to the binary.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SCOTT_FORGE_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) r.output.append(buffer, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("cli: axioms passes on the default truncation") {
    const auto r = run_cli("--json axioms");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("status") == "pass");
    CHECK(doc.at("lattice") == true);
    CHECK(doc.at("symbolic_sup_agrees") == true);
}

TEST_CASE("cli: bounds come from the flag or the environment") {
    CHECK(run_cli("axioms --n 7").exit_code == 3);  // default bound is 6
    CHECK(run_cli("--bound 7 axioms --n 7").exit_code == 0);

    const std::string env_cmd =
        std::string("SCOTT_FORGE_BOUND=7 ") + SCOTT_FORGE_BIN + " axioms --n 7 2>&1";
    CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
}

TEST_CASE("cli: normal-form canonicalizes and reconstructs") {
    const auto r = run_cli(
        R"(--json normal-form --open '{"tag":"vset","start":0,"prefix":[0,0,1,1,1],"tail":1}')");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("canonical").at("prefix") == json::array({0, 0}));
    CHECK(doc.at("reconstruction_matches") == true);
}

TEST_CASE("cli: chain-demo passes for the default base function") {
    const auto r = run_cli("--json chain-demo");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("status") == "pass");
    CHECK(doc.at("increasing") == true);
    CHECK(doc.at("covers") == true);
}

TEST_CASE("cli: refute-box emits a deterministic, self-validating certificate") {
    const auto first = run_cli("--json refute-box");
    const auto second = run_cli("--json refute-box");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const json cert = json::parse(first.output);
    CHECK(cert.at("chain_index") == 1);
    CHECK(cert.at("target") == "E-not-product-open");
    CHECK(scottforge::validate(cert).ok);
}

TEST_CASE("cli: sup-discontinuity uses the slice argument") {
    const auto r = run_cli("--json sup-discontinuity");
    CHECK(r.exit_code == 0);
    const json cert = json::parse(r.output);
    CHECK(cert.at("target") == "sup-discontinuous");
    CHECK(cert.at("witness").at("first") == json({{"tag", "pair"}, {"i", 1}, {"j", 0}}));
    CHECK(scottforge::validate(cert).ok);
}

TEST_CASE("cli: bc-failure passes end to end") {
    const auto r = run_cli("--json bc-failure");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("ok") == true);
    CHECK(doc.at("items").size() == 5);
}

TEST_CASE("cli: validate round-trips emitted certificates and rejects tampering") {
    const auto emitted = run_cli("--json refute-box");
    REQUIRE(emitted.exit_code == 0);
    const auto good = temp_file("sf_cli_cert_good.json", emitted.output);
    CHECK(run_cli("validate " + good.string()).exit_code == 0);
    CHECK(run_cli("--json validate @" + good.string()).exit_code == 0);

    json tampered = json::parse(emitted.output);
    tampered["witness"]["first"]["i"] = 9;
    const auto bad = temp_file("sf_cli_cert_bad.json", tampered.dump());
    const auto r = run_cli("--json validate " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.output).at("status") == "fail");
}

TEST_CASE("cli: finite-bc checks a function space given as JSON") {
    const std::string chain2 =
        R"('{"elements":["a","b"],"leq":[["a","a"],["b","b"],["a","b"]]}')";
    const std::string antichain2 =
        R"('{"elements":["a","b"],"leq":[["a","a"],["b","b"]]}')";
    const auto ok = run_cli("--json finite-bc --x " + chain2 + " --z " + chain2);
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.output).at("functions") == 3);
    // a codomain that is not bounded complete is invalid input
    CHECK(run_cli("finite-bc --x " + chain2 + " --z " + antichain2).exit_code == 4);
}

TEST_CASE("cli: oracle cross-checks the truncation") {
    const auto r = run_cli("--json oracle --n 1 --max-subset 2");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("status") == "pass");
    CHECK(doc.at("subsets_checked") > 1);
}

TEST_CASE("cli: malformed input and bad usage exit with 4") {
    CHECK(run_cli("normal-form --open 'not json'").exit_code == 4);
    CHECK(run_cli(R"(refute-box --u '{"tag":"empty"}')").exit_code == 4);
    CHECK(run_cli("no-such-subcommand").exit_code == 4);
    CHECK(run_cli("validate @/nonexistent/path.json").exit_code == 4);
}
