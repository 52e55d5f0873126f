#pragma once

#include <cstdint>
#include <vector>

#include "locktrials/pmf.hpp"
#include "locktrials/problem.hpp"
#include "locktrials/strategies.hpp"

namespace locktrials {

/// Largest keyring size the factorial enumeration accepts (9! = 362880
/// rings stays in the seconds range; beyond that use sampling).
inline constexpr std::uint32_t kBruteForceMaxKeys = 9;

/// Tail-mass budget for materializing unbounded distributions: the
/// computed support is extended until the covered mass reaches
/// 1 - epsilon, and the discarded deficit is recorded on the Pmf.
struct TruncationPolicy {
    double epsilon = 1e-9;
};

/// Exact distribution of the total trial count for the ordered
/// strategies (lock-first and key-first share it): the convolution of
/// uniform{1..N-i+1} for i = 1..n, folded left to right. Complete, with
/// support exactly {n .. sum_i (N-i+1)}.
Pmf exact_pmf_ordered(const Problem& problem);

/// Exact (truncated) distribution of the total trial count for the
/// totally random strategy: the convolution of the n geometric per-lock
/// distributions, extended until the covered mass reaches
/// 1 - policy.epsilon.
Pmf exact_pmf_random(const Problem& problem, const TruncationPolicy& policy = {});

/// Integer tallies of the total trial count over all keys! permutations.
struct BruteTally {
    std::int64_t offset = 0;              ///< smallest observed total
    std::vector<std::uint64_t> counts;    ///< rings per total
    std::uint64_t rings = 0;              ///< keys! rings enumerated
};

/// Plays `strategy` on every one of the keys! keyrings and tallies the
/// totals exactly. Only LockFirst and KeyFirst are meaningful here (the
/// totally random strategy does not depend on a ring). Rejects
/// keys > kBruteForceMaxKeys.
BruteTally brute_force_tally(const Problem& problem, StrategyKind strategy);

/// brute_force_tally normalized by keys! into a complete Pmf; the
/// ground-truth law of the total for small instances.
Pmf brute_force_pmf(const Problem& problem, StrategyKind strategy);

/// Independent oracle for exact_pmf_random, built on the Markov
/// recursion over (locks opened, trials used) rather than convolution:
/// with j locks open a trial succeeds with probability 1/(N-j).
/// Returns P(T = t) for t <= t_max; requires t_max >= locks.
Pmf recursion_pmf_random(const Problem& problem, std::int64_t t_max);

} // namespace locktrials
