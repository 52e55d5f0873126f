#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "locktrials/montecarlo.hpp"
#include "locktrials/pmf.hpp"

namespace locktrials {

struct ChiSquareResult {
    double statistic = 0.0;
    std::int64_t dof = 0;
    std::int64_t bins = 0;
};

namespace detail {
/// Merges (observed, expected) cells ascending until each bin reaches
/// min_expected; a trailing partial bin folds into the last complete
/// one. dof is reported as bins - 1.
ChiSquareResult pearson_merged(const std::vector<double>& observed,
                               const std::vector<double>& expected,
                               double min_expected);
} // namespace detail

/// Pearson chi-square of observed tallies against a fixed reference Pmf.
/// Adjacent cells are merged until every bin's expected count is at
/// least 5; dof = bins - 1 (no fitted parameters). Throws
/// std::domain_error when fewer than 2 bins survive merging.
ChiSquareResult chi_square_gof(const Histogram& h, const Pmf& expected);

/// Upper tail probability of the chi-square distribution.
double chi_square_pvalue(double statistic, std::int64_t dof);

/// Sup-distance between the empirical CDF of `h` and the reference
/// discrete CDF of `exact`, evaluated at the support points.
double ks_distance(const Histogram& h, const Pmf& exact);

/// Sup-distance between the CDF of a discrete Pmf and a continuous CDF,
/// evaluated at the Pmf's support points.
double ks_distance(const Pmf& p, const std::function<double(double)>& cdf);

/// Sup-distance between the empirical CDF of `h` and a continuous CDF,
/// evaluated at the observed support points.
double ks_distance(const Histogram& h, const std::function<double(double)>& cdf);

} // namespace locktrials
