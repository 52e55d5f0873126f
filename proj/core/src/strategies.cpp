#include "locktrials/strategies.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace locktrials {

namespace {

void require_ring(const Problem& problem, const Keyring& ring) {
    if (!is_valid_keyring(ring, problem.keys))
        throw std::invalid_argument("keyring is not a permutation of {1..keys}");
}

} // namespace

const char* strategy_name(StrategyKind kind) noexcept {
    switch (kind) {
        case StrategyKind::TotallyRandom: return "random";
        case StrategyKind::LockFirst: return "lock-first";
        case StrategyKind::KeyFirst: return "key-first";
    }
    return "?";
}

TrialTrace play_lock_first(const Problem& problem, const Keyring& ring) {
    require_ring(problem, ring);
    const std::uint32_t n = problem.locks;

    TrialTrace trace;
    trace.per_lock.resize(n, 0);
    std::vector<std::uint32_t> remaining = ring;
    for (std::uint32_t lock = 1; lock <= n; ++lock) {
        std::uint32_t trials = 0;
        std::size_t pos = 0;
        for (; pos < remaining.size(); ++pos) {
            ++trials;
            if (remaining[pos] == lock) break;
        }
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
        trace.per_lock[lock - 1] = trials;
        trace.total += trials;
    }
    return trace;
}

TrialTrace play_key_first(const Problem& problem, const Keyring& ring) {
    require_ring(problem, ring);
    const std::uint32_t n = problem.locks;

    TrialTrace trace;
    trace.per_lock.resize(n, 0);
    std::vector<std::uint32_t> closed(n);
    std::iota(closed.begin(), closed.end(), 1u);

    for (const std::uint32_t label : ring) {
        if (closed.empty()) break;
        if (label <= n) {
            // sweeps the closed locks in label order and necessarily opens
            // its own (no other key can have opened it)
            std::size_t idx = 0;
            for (; closed[idx] != label; ++idx) {
                ++trace.per_lock[closed[idx] - 1];
                ++trace.total;
            }
            ++trace.per_lock[label - 1];
            ++trace.total;
            closed.erase(closed.begin() + static_cast<std::ptrdiff_t>(idx));
        } else {
            // blank key: fails every closed lock once
            for (const std::uint32_t lock : closed) {
                ++trace.per_lock[lock - 1];
                ++trace.total;
            }
        }
    }
    return trace;
}

TrialTrace play_totally_random(const Problem& problem, RngStream& rng) {
    const std::uint32_t n = problem.locks;
    const std::uint32_t N = problem.keys;

    TrialTrace trace;
    trace.per_lock.resize(n, 0);
    for (std::uint32_t i = 1; i <= n; ++i) {
        const std::uint64_t keys_remaining = N - i + 1;
        std::uint32_t trials = 0;
        do {
            ++trials;
        } while (!rng.one_in(keys_remaining));
        trace.per_lock[i - 1] = trials;
        trace.total += trials;
    }
    return trace;
}

bool equivalent_on(const Problem& problem, const Keyring& ring) {
    return play_lock_first(problem, ring).total == play_key_first(problem, ring).total;
}

} // namespace locktrials
