#include "locktrials/problem.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace locktrials {

Problem make_problem(std::int64_t locks, std::int64_t keys) {
    if (locks < 0) throw std::invalid_argument("locks must be nonnegative, got " + std::to_string(locks));
    if (keys < 0) throw std::invalid_argument("keys must be nonnegative, got " + std::to_string(keys));
    if (locks > keys)
        throw std::invalid_argument("locks (" + std::to_string(locks) + ") exceeds keys (" +
                                    std::to_string(keys) + "); every lock needs its key on the ring");
    if (keys > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("keys too large");
    return Problem{static_cast<std::uint32_t>(locks), static_cast<std::uint32_t>(keys)};
}

Keyring random_keyring(std::uint32_t keys, RngStream& rng) {
    Keyring ring = identity_keyring(keys);
    for (std::uint32_t i = keys; i > 1; --i) {
        const auto j = static_cast<std::uint32_t>(rng.uniform_below(i));
        std::swap(ring[i - 1], ring[j]);
    }
    return ring;
}

bool is_valid_keyring(const Keyring& ring, std::uint32_t keys) {
    if (ring.size() != keys) return false;
    std::vector<bool> seen(keys, false);
    for (const auto label : ring) {
        if (label < 1 || label > keys || seen[label - 1]) return false;
        seen[label - 1] = true;
    }
    return true;
}

} // namespace locktrials
