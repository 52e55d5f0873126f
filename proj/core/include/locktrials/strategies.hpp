#pragma once

#include "locktrials/problem.hpp"
#include "locktrials/rng.hpp"

namespace locktrials {

/// The three ways of attacking the locks.
enum class StrategyKind {
    TotallyRandom, ///< random remaining key into a random remaining lock, no memory
    LockFirst,     ///< fix a lock, sweep the remaining keys until it opens
    KeyFirst,      ///< fix a key, sweep the remaining locks until it opens one
};

const char* strategy_name(StrategyKind kind) noexcept;

/// Lock-first play. Locks are attacked in label order; for each lock the
/// remaining keys are tried in ring order from the first remaining key,
/// and the opener is removed from the ring. per_lock[i] is the number of
/// keys tried on lock i+1. Deterministic in (problem, ring).
TrialTrace play_lock_first(const Problem& problem, const Keyring& ring);

/// Key-first play. Keys are taken in ring order; each key is tried on the
/// remaining closed locks in label order until it opens one (keys labeled
/// <= locks always do) or fails them all (blank keys). Every trial is
/// charged to the lock it is attempted on, so per_lock[i] is the number
/// of trials lock i+1 receives before opening. Deterministic in
/// (problem, ring); the total always equals the lock-first total.
TrialTrace play_key_first(const Problem& problem, const Keyring& ring);

/// Totally random play. With i-1 locks open, each trial pairs a uniformly
/// chosen remaining key with a uniformly chosen remaining lock and
/// succeeds with probability exactly 1/(keys - i + 1), which is the law
/// of the full pairing process without materializing it.
TrialTrace play_totally_random(const Problem& problem, RngStream& rng);

/// True when lock-first and key-first take the same number of trials on
/// this ring. Holds for every ring.
bool equivalent_on(const Problem& problem, const Keyring& ring);

} // namespace locktrials
