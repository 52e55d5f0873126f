#pragma once

#include <cstdint>
#include <vector>

#include "locktrials/analytic.hpp"
#include "locktrials/pmf.hpp"
#include "locktrials/problem.hpp"
#include "locktrials/strategies.hpp"

namespace locktrials {

/// One sampling run: M independent games of a strategy on a problem,
/// split across `workers` parallel streams.
struct Campaign {
    Problem problem;
    StrategyKind strategy = StrategyKind::TotallyRandom;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    std::uint32_t workers = 1;
};

/// Integer-valued sample tallies over a contiguous range.
class Histogram {
public:
    Histogram() = default;

    void add(std::int64_t value, std::uint64_t count = 1);

    bool empty() const noexcept { return total_ == 0; }
    std::uint64_t total() const noexcept { return total_; }
    std::int64_t offset() const noexcept { return offset_; }
    std::int64_t max_value() const noexcept {
        return offset_ + static_cast<std::int64_t>(counts_.size()) - 1;
    }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t count_at(std::int64_t value) const noexcept;

    /// Population mean and variance of the tallied samples.
    Moments moments() const;

private:
    std::int64_t offset_ = 0;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Runs the campaign and histograms the total trial counts.
///
/// Reproducible: the result is a pure function of (problem, strategy,
/// samples, seed, workers). Worker w plays a fixed share of the samples
/// on the child stream derived from (seed, w), so the same seed with a
/// different worker count may legitimately yield a different histogram.
Histogram run_campaign(const Campaign& campaign);

struct NormalParams {
    double mu = 0.0;
    double sigma = 0.0;
};

enum class FitFamily { Gamma, Normal };

/// A fitted distribution with its goodness-of-fit scores against the
/// data it was fitted on.
struct FitReport {
    FitFamily family = FitFamily::Gamma;
    GammaParams gamma;   // meaningful when family == Gamma
    NormalParams normal; // meaningful when family == Normal
    double chi_square = 0.0;
    std::int64_t dof = 0;
    double ks_distance = 0.0;
};

/// Gamma CDF with shape k and scale theta (the regularized lower
/// incomplete gamma function P(k, x/theta)); 0 for x <= 0.
double gamma_cdf(double x, const GammaParams& params);

/// Moment-matched Gamma fit of a histogram (k = mean^2/var,
/// theta = var/mean) with chi-square (cells merged to expected count
/// >= 5, dof = bins - 1 - 2) and KS distance against the fitted CDF.
/// Rejects zero-variance histograms.
FitReport fit_gamma_moments(const Histogram& h);

/// Moment-matched normal fit, scored like fit_gamma_moments.
FitReport fit_normal_moments(const Histogram& h);

} // namespace locktrials
