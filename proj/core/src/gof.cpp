#include "locktrials/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "locktrials/special.hpp"

namespace locktrials {

namespace detail {

ChiSquareResult pearson_merged(const std::vector<double>& observed,
                               const std::vector<double>& expected,
                               double min_expected) {
    double obs_bin = 0.0;
    double exp_bin = 0.0;
    std::vector<std::pair<double, double>> bins;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        obs_bin += observed[i];
        exp_bin += expected[i];
        if (exp_bin >= min_expected) {
            bins.emplace_back(obs_bin, exp_bin);
            obs_bin = 0.0;
            exp_bin = 0.0;
        }
    }
    if ((obs_bin > 0.0 || exp_bin > 0.0) && !bins.empty()) {
        bins.back().first += obs_bin;
        bins.back().second += exp_bin;
    }
    if (bins.size() < 2)
        throw std::domain_error("chi-square: fewer than 2 bins survive merging");

    double statistic = 0.0;
    for (const auto& [obs, exp] : bins) {
        const double diff = obs - exp;
        statistic += diff * diff / exp;
    }
    return ChiSquareResult{statistic, static_cast<std::int64_t>(bins.size()) - 1,
                           static_cast<std::int64_t>(bins.size())};
}

} // namespace detail

ChiSquareResult chi_square_gof(const Histogram& h, const Pmf& expected) {
    if (h.empty()) throw std::domain_error("chi-square: empty histogram");
    const std::int64_t lo = std::min(h.offset(), expected.offset());
    const std::int64_t hi = std::max(h.max_value(), expected.max_value());
    const double total = static_cast<double>(h.total());

    std::vector<double> obs;
    std::vector<double> exp;
    obs.reserve(static_cast<std::size_t>(hi - lo + 1));
    exp.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t v = lo; v <= hi; ++v) {
        obs.push_back(static_cast<double>(h.count_at(v)));
        exp.push_back(total * expected.at(v));
    }
    return detail::pearson_merged(obs, exp, 5.0);
}

double chi_square_pvalue(double statistic, std::int64_t dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_pvalue: dof must be >= 1");
    return 1.0 - regularized_gamma_p(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

double ks_distance(const Histogram& h, const Pmf& exact) {
    if (h.empty()) throw std::domain_error("ks_distance: empty histogram");
    const std::int64_t lo = std::min(h.offset(), exact.offset());
    const std::int64_t hi = std::max(h.max_value(), exact.max_value());
    const double total = static_cast<double>(h.total());

    double ecdf = 0.0;
    double rcdf = 0.0;
    double sup = 0.0;
    for (std::int64_t v = lo; v <= hi; ++v) {
        ecdf += static_cast<double>(h.count_at(v)) / total;
        rcdf += exact.at(v);
        sup = std::max(sup, std::abs(ecdf - rcdf));
    }
    return sup;
}

double ks_distance(const Pmf& p, const std::function<double(double)>& cdf) {
    double pcdf = 0.0;
    double sup = 0.0;
    for (std::int64_t v = p.offset(); v <= p.max_value(); ++v) {
        pcdf += p.at(v);
        sup = std::max(sup, std::abs(pcdf - cdf(static_cast<double>(v))));
    }
    return sup;
}

double ks_distance(const Histogram& h, const std::function<double(double)>& cdf) {
    if (h.empty()) throw std::domain_error("ks_distance: empty histogram");
    const double total = static_cast<double>(h.total());
    double ecdf = 0.0;
    double sup = 0.0;
    for (std::int64_t v = h.offset(); v <= h.max_value(); ++v) {
        ecdf += static_cast<double>(h.count_at(v)) / total;
        sup = std::max(sup, std::abs(ecdf - cdf(static_cast<double>(v))));
    }
    return sup;
}

} // namespace locktrials
