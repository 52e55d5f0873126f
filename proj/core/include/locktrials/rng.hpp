#pragma once

#include <cstdint>

namespace locktrials {

// SplitMix64, used for seeding and for deriving child-stream seeds.
// Reference: Steele, Lea, Flood (2014), "Fast splittable pseudorandom
// number generators".
struct SplitMix64 {
    std::uint64_t state;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Stateless mix of (key, data); same inputs always give the same output.
    static constexpr std::uint64_t mix(std::uint64_t key, std::uint64_t data) noexcept {
        std::uint64_t z = key ^ data;
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// Seeded stream of 64-bit words (xoshiro256** state, SplitMix64-seeded).
///
/// A stream is identified by (seed, stream index); identical identifiers
/// produce bit-identical output sequences. Child streams for parallel
/// workers are derived with split(), which depends only on the parent's
/// identifier, never on how much the parent has been consumed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : RngStream(seed, 0) {}

    RngStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {
        SplitMix64 sm(SplitMix64::mix(seed, stream));
        for (auto& word : s_) word = sm.next();
        // xoshiro must not start at the all-zero state
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    /// Child stream derived from (this stream's seed, index). Deterministic.
    RngStream split(std::uint64_t index) const {
        return RngStream(SplitMix64::mix(seed_, stream_ + 0x632be59bd9b4e019ULL), index);
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in {0, ..., bound-1}, exact by rejection sampling.
    /// A plain modulo reduction would bias small residues.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        // rejects words below 2^64 mod bound, so every residue class keeps
        // the same number of accepted words
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t word = next_u64();
            if (word >= threshold) return word % bound;
        }
    }

    /// Bernoulli event with probability exactly 1/m.
    bool one_in(std::uint64_t m) noexcept { return uniform_below(m) == 0; }

    /// Uniform double in [0, 1), 53 significant bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t s_[4];
};

} // namespace locktrials
