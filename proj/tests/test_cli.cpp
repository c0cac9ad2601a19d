#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tddm/cli.hpp"

using namespace tddm;
namespace fs = std::filesystem;

namespace {

std::string write_tmp_config(const std::string& body) {
    static int counter = 0;
    const std::string path =
        "/tmp/tddm_cli_test_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << body;
    return path;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config loading fills fields and keeps defaults") {
    const std::string path = write_tmp_config(R"({
        "scenario": "shrink_loop",
        "n": 128,
        "beta": 4.0,
        "nu": 0.0,
        "steps": 7,
        "out_dir": "/tmp/tddm_cli_out_a"
    })");
    RunConfig c = load_config(path);
    CHECK(c.scenario == "shrink_loop");
    CHECK(c.n == 128);
    CHECK(c.beta == 4.0);
    CHECK(c.nu == 0.0);
    CHECK(c.steps == 7);
    CHECK(c.dt == 0.16);          // default untouched
    CHECK(c.correction == true);  // default untouched
    fs::remove(path);
}

TEST_CASE("malformed config and missing file raise errors") {
    CHECK_THROWS(load_config("/tmp/definitely_missing_tddm.json"));
    const std::string path = write_tmp_config("{ not json ");
    CHECK_THROWS(load_config(path));
    fs::remove(path);
}

TEST_CASE("overrides parse dotted keys and reject unknown ones") {
    RunConfig c;
    apply_override(c, "beta=10");
    apply_override(c, "particle.R=0.9");
    apply_override(c, "correction=false");
    apply_override(c, "scenario=orowan");
    CHECK(c.beta == 10.0);
    CHECK(c.particle.radius == 0.9);
    CHECK(c.correction == false);
    CHECK(c.scenario == "orowan");
    CHECK_THROWS(apply_override(c, "nonsense=1"));
    CHECK_THROWS(apply_override(c, "no_equals_sign"));
}

TEST_CASE("steps=0 writes the initial snapshot and succeeds") {
    RunConfig c;
    c.scenario = "straight_edge";
    c.n = 64;
    c.steps = 0;
    c.out_dir = "/tmp/tddm_cli_out_zero";
    fs::remove_all(c.out_dir);
    CHECK(run(c) == 0);
    CHECK(fs::exists(fs::path(c.out_dir) / "field_000000.pgm"));
    CHECK(fs::exists(fs::path(c.out_dir) / "config_effective.json"));
    CHECK(fs::exists(fs::path(c.out_dir) / "report.txt"));
    fs::remove_all(c.out_dir);
}

TEST_CASE("run is deterministic: identical CSV outputs across reruns") {
    RunConfig c;
    c.scenario = "straight_edge";
    c.n = 64;
    c.steps = 5;
    c.out_dir = "/tmp/tddm_cli_out_d1";
    fs::remove_all(c.out_dir);
    REQUIRE(run(c) == 0);
    const std::string first = slurp(fs::path(c.out_dir) / "velocity.csv");
    c.out_dir = "/tmp/tddm_cli_out_d2";
    fs::remove_all(c.out_dir);
    REQUIRE(run(c) == 0);
    const std::string second = slurp(fs::path(c.out_dir) / "velocity.csv");
    CHECK(first == second);
    CHECK(!first.empty());
    fs::remove_all("/tmp/tddm_cli_out_d1");
    fs::remove_all("/tmp/tddm_cli_out_d2");
}

TEST_CASE("config round trip: rerunning from the effective config reproduces the run") {
    RunConfig c;
    c.scenario = "shrink_loop";
    c.n = 128;
    c.nu = 0.0;
    c.steps = 4;
    c.out_dir = "/tmp/tddm_cli_out_r1";
    fs::remove_all(c.out_dir);
    REQUIRE(run(c) == 0);
    RunConfig c2 = load_config((fs::path(c.out_dir) / "config_effective.json").string());
    c2.out_dir = "/tmp/tddm_cli_out_r2";
    fs::remove_all(c2.out_dir);
    REQUIRE(run(c2) == 0);
    CHECK(slurp(fs::path(c.out_dir) / "radius.csv") ==
          slurp(fs::path(c2.out_dir) / "radius.csv"));
    fs::remove_all("/tmp/tddm_cli_out_r1");
    fs::remove_all("/tmp/tddm_cli_out_r2");
}

TEST_CASE("thread cap honors TDDM_THREADS") {
    setenv("TDDM_THREADS", "3", 1);
    CHECK(thread_cap() == 3);
    setenv("TDDM_THREADS", "0", 1);  // invalid: falls back to hardware
    CHECK(thread_cap() >= 1);
    unsetenv("TDDM_THREADS");
    CHECK(thread_cap() >= 1);
}

TEST_CASE("validate_kernel passes") {
    CHECK(validate_kernel() == 0);
}
