#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli_runner.hpp"
#include "locktrials/io.hpp"

using nlohmann::json;
using testsupport::run_cli;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("locktrials_cli_test_" + name);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("analytic reports the closed forms as JSON numbers") {
    const auto random = run_cli("analytic --locks 8 --keys 8 --strategy random");
    REQUIRE(random.exit_code == 0);
    const json r = json::parse(random.output);
    CHECK(r["mean"] == 36.0);
    CHECK(r["variance"] == 168.0);
    CHECK(r["gamma_shape_k"].get<double>() == doctest::Approx(54.0 / 7.0).epsilon(1e-12));
    CHECK(r["gamma_scale_theta"].get<double>() == doctest::Approx(14.0 / 3.0).epsilon(1e-12));

    const auto ordered = run_cli("analytic --locks 20 --keys 20 --strategy ordered");
    REQUIRE(ordered.exit_code == 0);
    const json o = json::parse(ordered.output);
    CHECK(o["mean"] == 115.0);
    CHECK(o["variance"] == 237.5);

    // lock-first and key-first share the ordered law
    const auto lockfirst = run_cli("analytic --locks 20 --keys 20 --strategy lock-first");
    CHECK(json::parse(lockfirst.output)["mean"] == 115.0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("analytic --locks 4 --keys 3 --strategy random").exit_code == 2);
    CHECK(run_cli("analytic --locks 2 --keys 3 --strategy sideways").exit_code == 2);
    CHECK(run_cli("analytic --locks 2 --strategy random").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("exact --locks 2 --keys 4 --strategy random --eps 2.0").exit_code == 2);
    CHECK(run_cli("verify identity --max-keys 300").exit_code == 2);
    CHECK(run_cli("verify equivalence --locks 3 --keys 12 --exhaustive").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("exact emits the ordered pmf as CSV") {
    const auto result = run_cli("exact --locks 2 --keys 3 --strategy ordered");
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.output);
    const locktrials::Pmf pmf = locktrials::read_pmf_csv(in);
    CHECK(pmf.offset() == 2);
    CHECK(pmf.at(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(pmf.at(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pmf.at(4) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pmf.at(5) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

    const auto single = run_cli("exact --locks 1 --keys 4 --strategy ordered");
    std::istringstream sin(single.output);
    const locktrials::Pmf uniform = locktrials::read_pmf_csv(sin);
    for (std::int64_t v = 1; v <= 4; ++v) CHECK(uniform.at(v) == 0.25);
}

TEST_CASE("exact random records the truncation deficit and covers 1-eps") {
    const auto result = run_cli("exact --locks 8 --keys 8 --strategy random --eps 1e-9");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("# truncation_deficit ") != std::string::npos);
    std::istringstream in(result.output);
    const locktrials::Pmf pmf = locktrials::read_pmf_csv(in);
    double covered = 0.0;
    for (const double m : pmf.mass()) covered += m;
    CHECK(covered >= 1.0 - 1e-9);
}

TEST_CASE("exact supports a json rendering") {
    const auto result = run_cli("exact --locks 2 --keys 2 --strategy ordered --format json");
    REQUIRE(result.exit_code == 0);
    const json r = json::parse(result.output);
    CHECK(r["offset"] == 2);
    CHECK(r["probabilities"].size() == 2);
}

TEST_CASE("simulate is byte-reproducible for fixed seed and workers") {
    const auto csv_a = temp_file("sim_a.csv");
    const auto csv_b = temp_file("sim_b.csv");
    const std::string base =
        "simulate --locks 8 --keys 8 --strategy random --samples 20000 --seed 7 ";
    const auto a = run_cli(base + "--output " + csv_a.string());
    const auto b = run_cli(base + "--output " + csv_b.string());
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(slurp(csv_a) == slurp(csv_b));

    // same again with a multi-worker split
    const std::string multi =
        "simulate --locks 8 --keys 8 --strategy random --samples 20000 --seed 7 --workers 3 ";
    const auto c = run_cli(multi + "--output " + csv_a.string());
    const auto d = run_cli(multi + "--output " + csv_b.string());
    REQUIRE(c.exit_code == 0);
    CHECK(c.output == d.output);
    CHECK(slurp(csv_a) == slurp(csv_b));

    fs::remove(csv_a);
    fs::remove(csv_b);
}

TEST_CASE("simulate without an output path streams the CSV") {
    const auto result =
        run_cli("simulate --locks 2 --keys 2 --strategy lock-first --samples 1 --seed 5");
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.output);
    const locktrials::Histogram h = locktrials::read_histogram_csv(in);
    CHECK(h.total() == 1);
}

TEST_CASE("simulate hits the documented band at the paper configuration") {
    const auto csv = temp_file("sim_fig3.csv");
    const auto result = run_cli(
        "simulate --locks 8 --keys 8 --strategy random --samples 100000 --seed 7 --output " +
        csv.string());
    REQUIRE(result.exit_code == 0);
    const json moments = json::parse(result.output);
    CHECK(std::abs(moments["mean"].get<double>() - 36.0) <= 0.12);
    fs::remove(csv);
}

TEST_CASE("fit consumes simulate output") {
    const auto csv = temp_file("fit_roundtrip.csv");
    const auto sim = run_cli(
        "simulate --locks 8 --keys 8 --strategy random --samples 50000 --seed 11 --output " +
        csv.string());
    REQUIRE(sim.exit_code == 0);
    const double sample_mean = json::parse(sim.output)["mean"].get<double>();

    const auto fit = run_cli("fit " + csv.string() + " --family gamma");
    REQUIRE(fit.exit_code == 0);
    const json report = json::parse(fit.output);
    CHECK(report["family"] == "gamma");
    const double k = report["params"]["shape_k"].get<double>();
    const double theta = report["params"]["scale_theta"].get<double>();
    CHECK(k * theta == doctest::Approx(sample_mean).epsilon(1e-9));
    CHECK(report["ks_distance"].get<double>() >= 0.0);
    CHECK(report["ks_distance"].get<double>() <= 1.0);
    fs::remove(csv);
}

TEST_CASE("fit of an ordered campaign with the normal family") {
    const auto csv = temp_file("fit_normal.csv");
    const auto sim = run_cli(
        "simulate --locks 20 --keys 20 --strategy ordered --samples 50000 --seed 13 --output " +
        csv.string());
    REQUIRE(sim.exit_code == 0);
    const auto fit = run_cli("fit " + csv.string() + " --family normal");
    REQUIRE(fit.exit_code == 0);
    const json report = json::parse(fit.output);
    CHECK(report["family"] == "normal");
    CHECK(std::abs(report["params"]["mu"].get<double>() - 115.0) <= 0.5);
    fs::remove(csv);
}

TEST_CASE("fit error paths") {
    CHECK(run_cli("fit /nonexistent/histogram.csv --family gamma").exit_code == 2);

    const auto degenerate = temp_file("degenerate.csv");
    {
        std::ofstream out(degenerate);
        out << "value,count\n5,100\n";
    }
    CHECK(run_cli("fit " + degenerate.string() + " --family gamma").exit_code == 3);
    CHECK(run_cli("fit " + degenerate.string() + " --family triangular").exit_code == 2);

    const auto garbage = temp_file("garbage.csv");
    {
        std::ofstream out(garbage);
        out << "not,a\nhistogram,file\n";
    }
    CHECK(run_cli("fit " + garbage.string() + " --family gamma").exit_code == 2);
    fs::remove(degenerate);
    fs::remove(garbage);
}

TEST_CASE("verify equivalence exhaustively and by sampling") {
    const auto exhaustive = run_cli("verify equivalence --locks 5 --keys 8 --exhaustive");
    REQUIRE(exhaustive.exit_code == 0);
    const json e = json::parse(exhaustive.output);
    CHECK(e["checked"] == 40320);
    CHECK(e["violations"] == 0);

    const auto sampled =
        run_cli("verify equivalence --locks 30 --keys 50 --samples 2000 --seed 1");
    REQUIRE(sampled.exit_code == 0);
    const json s = json::parse(sampled.output);
    CHECK(s["mode"] == "sampled");
    CHECK(s["checked"] == 2000);
    CHECK(s["violations"] == 0);
}

TEST_CASE("verify identity over a keys bound") {
    const auto result = run_cli("verify identity --max-keys 60");
    REQUIRE(result.exit_code == 0);
    const json r = json::parse(result.output);
    CHECK(r["checked"] == 60 * 61 * 62 / 6);
    CHECK(r["violations"] == 0);
}
