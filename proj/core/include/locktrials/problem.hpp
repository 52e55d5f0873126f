#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "locktrials/rng.hpp"

namespace locktrials {

/// A problem instance: `locks` different locks must be opened with a ring
/// of `keys` >= `locks` keys. Keys labeled 1..locks open the same-labeled
/// lock; keys labeled locks+1..keys open nothing.
struct Problem {
    std::uint32_t locks = 0;
    std::uint32_t keys = 0;
};

/// Key order on the ring: a permutation of {1..N}. order[i] is the label
/// of the (i+1)-th key.
using Keyring = std::vector<std::uint32_t>;

/// Outcome of one played game: the total trial count and the per-lock
/// trial counts it decomposes into (total == sum of per_lock).
struct TrialTrace {
    std::uint64_t total = 0;
    std::vector<std::uint32_t> per_lock;
};

/// Validates and builds a Problem. Throws std::invalid_argument when
/// locks > keys (some lock would have no key on the ring).
Problem make_problem(std::int64_t locks, std::int64_t keys);

/// Uniformly random permutation of {1..keys} via a Fisher-Yates shuffle
/// driven by rejection-sampled bounded draws, so each of the keys!
/// orders is exactly equally likely.
Keyring random_keyring(std::uint32_t keys, RngStream& rng);

/// The identity keyring [1, 2, ..., keys].
inline Keyring identity_keyring(std::uint32_t keys) {
    Keyring ring(keys);
    std::iota(ring.begin(), ring.end(), 1u);
    return ring;
}

/// True when `ring` is a permutation of {1..keys}.
bool is_valid_keyring(const Keyring& ring, std::uint32_t keys);

} // namespace locktrials
