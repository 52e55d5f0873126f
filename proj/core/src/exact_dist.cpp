#include "locktrials/exact_dist.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "locktrials/analytic.hpp"

namespace locktrials {

Pmf exact_pmf_ordered(const Problem& problem) {
    Pmf total = Pmf::point_mass(0);
    for (std::uint32_t i = 1; i <= problem.locks; ++i) {
        total = pmf_convolve(total, per_lock_pmf_ordered(problem, i));
    }
    return total;
}

Pmf exact_pmf_random(const Problem& problem, const TruncationPolicy& policy) {
    if (!(policy.epsilon > 0.0 && policy.epsilon < 1.0))
        throw std::invalid_argument("truncation epsilon must lie in (0,1)");
    if (problem.locks == 0) return Pmf::point_mass(0);

    // Truncating each factor to tail <= eps/n bounds the total deficit by
    // eps. The factor budget is additionally capped at 1e-14 so that the
    // entrywise shortfall against the untruncated law (missing cross
    // terms, at most the sum of the factor tails) stays below 1e-13
    // regardless of the coverage budget. The loop only tightens further
    // in pathological rounding cases.
    double per_factor = std::min(policy.epsilon / problem.locks, 1e-14);
    for (;;) {
        Pmf total = Pmf::point_mass(0);
        for (std::uint32_t i = 1; i <= problem.locks; ++i) {
            total = pmf_convolve(total, per_lock_pmf_random(problem, i, per_factor));
        }
        if (total.deficit() <= policy.epsilon) return total;
        per_factor /= 2;
    }
}

BruteTally brute_force_tally(const Problem& problem, StrategyKind strategy) {
    if (problem.keys > kBruteForceMaxKeys)
        throw std::invalid_argument("brute force enumeration capped at " +
                                    std::to_string(kBruteForceMaxKeys) + " keys, got " +
                                    std::to_string(problem.keys));
    if (strategy == StrategyKind::TotallyRandom)
        throw std::invalid_argument("brute force enumerates keyrings; the totally random "
                                    "strategy does not depend on one");

    const auto play = (strategy == StrategyKind::LockFirst) ? play_lock_first : play_key_first;

    // total ranges over {n .. sum_i (N-i+1)} for both ordered strategies
    const std::uint64_t n = problem.locks;
    std::uint64_t max_total = 0;
    for (std::uint64_t i = 1; i <= n; ++i) max_total += problem.keys - i + 1;

    BruteTally tally;
    tally.offset = static_cast<std::int64_t>(n);
    tally.counts.assign(max_total - n + 1, 0);

    Keyring ring = identity_keyring(problem.keys);
    do {
        const TrialTrace trace = play(problem, ring);
        ++tally.counts[trace.total - n];
        ++tally.rings;
    } while (std::next_permutation(ring.begin(), ring.end()));
    return tally;
}

Pmf brute_force_pmf(const Problem& problem, StrategyKind strategy) {
    const BruteTally tally = brute_force_tally(problem, strategy);
    std::vector<double> mass(tally.counts.size());
    for (std::size_t i = 0; i < mass.size(); ++i) {
        mass[i] = static_cast<double>(tally.counts[i]) / static_cast<double>(tally.rings);
    }
    return Pmf(tally.offset, std::move(mass));
}

Pmf recursion_pmf_random(const Problem& problem, std::int64_t t_max) {
    const std::uint32_t n = problem.locks;
    const std::uint32_t N = problem.keys;
    if (n == 0) return Pmf::point_mass(0);
    if (t_max < static_cast<std::int64_t>(n))
        throw std::invalid_argument("t_max must be at least the lock count");

    // open[j] = P(j locks open after t trials), kept for j < n;
    // arrivals at j = n after trial t are P(T = t)
    std::vector<double> open(n, 0.0);
    open[0] = 1.0;
    std::vector<double> law(static_cast<std::size_t>(t_max) - n + 1, 0.0);

    for (std::int64_t t = 1; t <= t_max; ++t) {
        const double finished = open[n - 1] / static_cast<double>(N - n + 1);
        if (t >= static_cast<std::int64_t>(n)) law[static_cast<std::size_t>(t - n)] = finished;
        for (std::uint32_t j = n - 1; j >= 1; --j) {
            const double stay = 1.0 - 1.0 / static_cast<double>(N - j);
            open[j] = open[j] * stay + open[j - 1] / static_cast<double>(N - j + 1);
        }
        open[0] *= 1.0 - 1.0 / static_cast<double>(N);
    }

    double covered = 0.0;
    for (const double m : law) covered += m;
    return Pmf(static_cast<std::int64_t>(n), std::move(law), std::max(0.0, 1.0 - covered));
}

} // namespace locktrials
