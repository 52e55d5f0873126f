#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace locktrials {

/// Completeness tolerance for probability mass sums.
inline constexpr double kMassTolerance = 1e-12;

/// Finite probability mass function over a contiguous integer support.
///
/// Stores the smallest support point (offset) plus a dense mass vector.
/// A Pmf declares how much probability it covers: complete distributions
/// cover 1, explicitly truncated ones cover 1 - deficit(), with the
/// discarded tail mass recorded.
class Pmf {
public:
    /// Validates: mass nonempty, entries >= 0, deficit in [0,1), and
    /// sum(mass) within kMassTolerance of 1 - deficit.
    Pmf(std::int64_t offset, std::vector<double> mass, double deficit = 0.0);

    static Pmf point_mass(std::int64_t value);
    static Pmf uniform(std::int64_t lo, std::int64_t hi); // inclusive

    std::int64_t offset() const noexcept { return offset_; }
    std::int64_t max_value() const noexcept {
        return offset_ + static_cast<std::int64_t>(mass_.size()) - 1;
    }
    std::size_t size() const noexcept { return mass_.size(); }
    const std::vector<double>& mass() const noexcept { return mass_; }

    /// P(X = value); zero outside the stored support.
    double at(std::int64_t value) const noexcept;

    /// Probability mass discarded beyond the stored support.
    double deficit() const noexcept { return deficit_; }
    /// Declared covered mass, 1 - deficit().
    double total() const noexcept { return 1.0 - deficit_; }
    bool complete() const noexcept { return deficit_ <= kMassTolerance; }

private:
    std::int64_t offset_;
    std::vector<double> mass_;
    double deficit_;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Distribution of the sum of two independent variables.
/// offset adds, mass convolves, covered totals multiply.
Pmf pmf_convolve(const Pmf& a, const Pmf& b);

/// Mean and variance of a Pmf. Truncated inputs (deficit beyond the mass
/// tolerance) are rejected unless allow_truncated is set, in which case
/// the raw moments of the stored mass are returned.
Moments pmf_moments(const Pmf& p, bool allow_truncated = false);

} // namespace locktrials
