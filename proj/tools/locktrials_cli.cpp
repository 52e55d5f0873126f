// locktrials: analytics, exact distributions, simulations, identity and
// equivalence checks for the n-locks / N-keys trial-count problem.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 degenerate data.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "locktrials/analytic.hpp"
#include "locktrials/exact_dist.hpp"
#include "locktrials/gof.hpp"
#include "locktrials/io.hpp"
#include "locktrials/montecarlo.hpp"
#include "locktrials/problem.hpp"
#include "locktrials/strategies.hpp"

namespace lt = locktrials;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

// "random" | "ordered" | "lock-first" | "key-first"; ordered names the
// common law of the two deterministic strategies.
lt::StrategyKind parse_play_strategy(const std::string& name) {
    if (name == "random") return lt::StrategyKind::TotallyRandom;
    if (name == "lock-first" || name == "ordered") return lt::StrategyKind::LockFirst;
    if (name == "key-first") return lt::StrategyKind::KeyFirst;
    throw CLI::ValidationError("--strategy", "unknown strategy '" + name + "'");
}

bool is_ordered_name(const std::string& name) {
    return name == "ordered" || name == "lock-first" || name == "key-first";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device device;
    const std::uint64_t drawn =
        (static_cast<std::uint64_t>(device()) << 32) ^ static_cast<std::uint64_t>(device());
    std::cerr << "seed: " << drawn << "\n";
    return drawn;
}

// Writes `text` to `path`, or to std::cout when no path was given.
void emit(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::invalid_argument("--output: cannot open '" + *path + "'");
    out << text;
}

json fit_report_json(const lt::FitReport& report) {
    json params;
    if (report.family == lt::FitFamily::Gamma) {
        params = {{"shape_k", report.gamma.shape_k}, {"scale_theta", report.gamma.scale_theta}};
    } else {
        params = {{"mu", report.normal.mu}, {"sigma", report.normal.sigma}};
    }
    return json{{"family", report.family == lt::FitFamily::Gamma ? "gamma" : "normal"},
                {"params", params},
                {"chi_square", report.chi_square},
                {"dof", report.dof},
                {"ks_distance", report.ks_distance}};
}

struct AnalyticArgs {
    std::int64_t locks = 0;
    std::int64_t keys = 0;
    std::string strategy = "random";
    std::optional<std::string> output;
};

int cmd_analytic(const AnalyticArgs& args) {
    const lt::Problem problem = lt::make_problem(args.locks, args.keys);
    const bool random = args.strategy == "random";
    if (!random && !is_ordered_name(args.strategy))
        throw CLI::ValidationError("--strategy", "unknown strategy '" + args.strategy + "'");

    const lt::Moments moments =
        random ? lt::moments_random(problem) : lt::moments_ordered(problem);
    json report{{"locks", problem.locks},
                {"keys", problem.keys},
                {"strategy", random ? "random" : "ordered"},
                {"mean", moments.mean},
                {"variance", moments.variance}};
    if (random && problem.locks >= 2) {
        const lt::GammaParams gamma = lt::gamma_match_random(problem);
        report["gamma_shape_k"] = gamma.shape_k;
        report["gamma_scale_theta"] = gamma.scale_theta;
    }
    emit(args.output, report.dump() + "\n");
    return kExitOk;
}

struct ExactArgs {
    std::int64_t locks = 0;
    std::int64_t keys = 0;
    std::string strategy = "ordered";
    double eps = 1e-9;
    std::string format = "csv";
    std::optional<std::string> output;
};

int cmd_exact(const ExactArgs& args) {
    const lt::Problem problem = lt::make_problem(args.locks, args.keys);
    const bool random = args.strategy == "random";
    if (!random && !is_ordered_name(args.strategy))
        throw CLI::ValidationError("--strategy", "unknown strategy '" + args.strategy + "'");
    if (random && !(args.eps > 0.0 && args.eps < 1.0))
        throw CLI::ValidationError("--eps", "must lie in (0,1)");

    const lt::Pmf pmf = random ? lt::exact_pmf_random(problem, lt::TruncationPolicy{args.eps})
                               : lt::exact_pmf_ordered(problem);

    if (args.format == "json") {
        json report{{"locks", problem.locks},
                    {"keys", problem.keys},
                    {"strategy", random ? "random" : "ordered"},
                    {"offset", pmf.offset()},
                    {"probabilities", pmf.mass()},
                    {"truncation_deficit", pmf.deficit()}};
        emit(args.output, report.dump() + "\n");
        return kExitOk;
    }
    if (args.format != "csv") throw CLI::ValidationError("--format", "must be csv or json");

    std::vector<lt::CsvComment> comments{
        {"locks", std::to_string(problem.locks)},
        {"keys", std::to_string(problem.keys)},
        {"strategy", random ? "random" : "ordered"},
    };
    if (random) comments.push_back({"truncation_deficit", lt::format_double(pmf.deficit())});
    std::ostringstream out;
    lt::write_pmf_csv(out, pmf, comments);
    emit(args.output, out.str());
    return kExitOk;
}

struct SimulateArgs {
    std::int64_t locks = 0;
    std::int64_t keys = 0;
    std::string strategy = "random";
    std::uint64_t samples = 100000;
    std::optional<std::uint64_t> seed;
    std::uint32_t workers = 1;
    std::optional<std::string> output;
};

int cmd_simulate(const SimulateArgs& args) {
    const lt::Problem problem = lt::make_problem(args.locks, args.keys);
    if (args.samples < 1) throw CLI::ValidationError("--samples", "must be >= 1");
    if (args.workers < 1) throw CLI::ValidationError("--workers", "must be >= 1");

    lt::Campaign campaign;
    campaign.problem = problem;
    campaign.strategy = parse_play_strategy(args.strategy);
    campaign.samples = args.samples;
    campaign.seed = resolve_seed(args.seed);
    campaign.workers = args.workers;

    const lt::Histogram histogram = lt::run_campaign(campaign);
    const lt::Moments moments = histogram.moments();

    const std::vector<lt::CsvComment> comments{
        {"locks", std::to_string(problem.locks)},
        {"keys", std::to_string(problem.keys)},
        {"strategy", lt::strategy_name(campaign.strategy)},
        {"samples", std::to_string(campaign.samples)},
        {"seed", std::to_string(campaign.seed)},
        {"workers", std::to_string(campaign.workers)},
    };
    std::ostringstream csv;
    lt::write_histogram_csv(csv, histogram, comments);

    const json moments_report{{"locks", problem.locks},
                              {"keys", problem.keys},
                              {"strategy", lt::strategy_name(campaign.strategy)},
                              {"samples", campaign.samples},
                              {"seed", campaign.seed},
                              {"workers", campaign.workers},
                              {"mean", moments.mean},
                              {"variance", moments.variance}};

    // CSV to the output file with the moments on stdout; without an
    // output file the CSV owns stdout and the moments go to stderr
    if (args.output) {
        emit(args.output, csv.str());
        std::cout << moments_report.dump() << "\n";
    } else {
        std::cout << csv.str();
        std::cerr << moments_report.dump() << "\n";
    }
    return kExitOk;
}

struct EquivalenceArgs {
    std::int64_t locks = 0;
    std::int64_t keys = 0;
    bool exhaustive = false;
    std::uint64_t samples = 100000;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output;
};

int cmd_verify_equivalence(const EquivalenceArgs& args) {
    const lt::Problem problem = lt::make_problem(args.locks, args.keys);

    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    json report{{"check", "equivalence"}, {"locks", problem.locks}, {"keys", problem.keys}};

    if (args.exhaustive) {
        if (problem.keys > lt::kBruteForceMaxKeys)
            throw CLI::ValidationError(
                "--exhaustive", "limited to --keys <= " + std::to_string(lt::kBruteForceMaxKeys));
        lt::Keyring ring = lt::identity_keyring(problem.keys);
        do {
            ++checked;
            if (!lt::equivalent_on(problem, ring)) ++violations;
        } while (std::next_permutation(ring.begin(), ring.end()));
        report["mode"] = "exhaustive";
    } else {
        if (args.samples < 1) throw CLI::ValidationError("--samples", "must be >= 1");
        const std::uint64_t seed = resolve_seed(args.seed);
        lt::RngStream rng(seed);
        for (std::uint64_t s = 0; s < args.samples; ++s) {
            const lt::Keyring ring = lt::random_keyring(problem.keys, rng);
            ++checked;
            if (!lt::equivalent_on(problem, ring)) ++violations;
        }
        report["mode"] = "sampled";
        report["seed"] = seed;
    }

    report["checked"] = checked;
    report["violations"] = violations;
    emit(args.output, report.dump() + "\n");
    return violations == 0 ? kExitOk : kExitViolations;
}

struct IdentityArgs {
    std::int64_t max_keys = 60;
    std::optional<std::string> output;
};

int cmd_verify_identity(const IdentityArgs& args) {
    if (args.max_keys < 1 || args.max_keys > 200)
        throw CLI::ValidationError("--max-keys", "must lie in 1..200");

    const lt::IdentityReport report = lt::verify_chu_vandermonde(args.max_keys);
    json out{{"check", "identity"},
             {"max_keys", args.max_keys},
             {"checked", report.checked},
             {"violations", report.violations.size()}};
    emit(args.output, out.dump() + "\n");
    return report.ok() ? kExitOk : kExitViolations;
}

struct FitArgs {
    std::string histogram_file;
    std::string family = "gamma";
    std::optional<std::string> output;
};

int cmd_fit(const FitArgs& args) {
    std::ifstream in(args.histogram_file, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open histogram file '" + args.histogram_file + "'");
    const lt::Histogram histogram = lt::read_histogram_csv(in);

    lt::FitReport report;
    if (args.family == "gamma") {
        report = lt::fit_gamma_moments(histogram);
    } else if (args.family == "normal") {
        report = lt::fit_normal_moments(histogram);
    } else {
        throw CLI::ValidationError("--family", "must be gamma or normal");
    }
    emit(args.output, fit_report_json(report).dump() + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lock-and-key trial counts: analytics, exact laws, simulation"};
    app.require_subcommand(1);

    AnalyticArgs analytic_args;
    auto* analytic = app.add_subcommand("analytic", "closed-form mean/variance (and Gamma parameters)");
    analytic->add_option("--locks", analytic_args.locks, "number of locks")->required();
    analytic->add_option("--keys", analytic_args.keys, "number of keys")->required();
    analytic->add_option("--strategy", analytic_args.strategy, "random|ordered|lock-first|key-first")
        ->required();
    analytic->add_option("--output", analytic_args.output, "write JSON here instead of stdout");

    ExactArgs exact_args;
    auto* exact = app.add_subcommand("exact", "exact distribution of the total trial count");
    exact->add_option("--locks", exact_args.locks, "number of locks")->required();
    exact->add_option("--keys", exact_args.keys, "number of keys")->required();
    exact->add_option("--strategy", exact_args.strategy, "random|ordered|lock-first|key-first")
        ->required();
    exact->add_option("--eps", exact_args.eps, "tail mass budget for the random strategy");
    exact->add_option("--format", exact_args.format, "csv (default) or json");
    exact->add_option("--output", exact_args.output, "write here instead of stdout");

    SimulateArgs simulate_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo campaign; histogram CSV + moments JSON");
    simulate->add_option("--locks", simulate_args.locks, "number of locks")->required();
    simulate->add_option("--keys", simulate_args.keys, "number of keys")->required();
    simulate->add_option("--strategy", simulate_args.strategy, "random|lock-first|key-first|ordered")
        ->required();
    simulate->add_option("--samples", simulate_args.samples, "number of games (default 100000)");
    simulate->add_option("--seed", simulate_args.seed, "RNG seed (drawn from entropy and printed if absent)");
    simulate->add_option("--workers", simulate_args.workers, "parallel workers (default 1)");
    simulate->add_option("--output", simulate_args.output, "histogram CSV file (moments JSON then on stdout)");

    auto* verify = app.add_subcommand("verify", "check the equivalence theorem or the marginal identity");
    verify->require_subcommand(1);

    EquivalenceArgs equivalence_args;
    auto* equivalence = verify->add_subcommand(
        "equivalence", "lock-first and key-first take identical trial counts on every ring");
    equivalence->add_option("--locks", equivalence_args.locks, "number of locks")->required();
    equivalence->add_option("--keys", equivalence_args.keys, "number of keys")->required();
    equivalence->add_flag("--exhaustive", equivalence_args.exhaustive,
                          "enumerate all keys! rings (keys <= 9)");
    equivalence->add_option("--samples", equivalence_args.samples, "sampled rings when not exhaustive");
    equivalence->add_option("--seed", equivalence_args.seed, "RNG seed for sampled mode");
    equivalence->add_option("--output", equivalence_args.output, "write JSON here instead of stdout");

    IdentityArgs identity_args;
    auto* identity = verify->add_subcommand(
        "identity", "key-first marginal collapses to 1/(N-p+1), exact arithmetic");
    identity->add_option("--max-keys", identity_args.max_keys, "check all N up to this bound (<= 200)");
    identity->add_option("--output", identity_args.output, "write JSON here instead of stdout");

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "moment-matched Gamma/normal fit of a histogram CSV");
    fit->add_option("histogram", fit_args.histogram_file, "histogram CSV (value,count rows)")
        ->required();
    fit->add_option("--family", fit_args.family, "gamma or normal")->required();
    fit->add_option("--output", fit_args.output, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*analytic) return cmd_analytic(analytic_args);
        if (*exact) return cmd_exact(exact_args);
        if (*simulate) return cmd_simulate(simulate_args);
        if (*equivalence) return cmd_verify_equivalence(equivalence_args);
        if (*identity) return cmd_verify_identity(identity_args);
        if (*fit) return cmd_fit(fit_args);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    }
    return kExitUsage;
}
