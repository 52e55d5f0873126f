#include "locktrials/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "locktrials/gof.hpp"
#include "locktrials/rng.hpp"
#include "locktrials/special.hpp"

namespace locktrials {

void Histogram::add(std::int64_t value, std::uint64_t count) {
    if (count == 0) return;
    if (counts_.empty()) {
        offset_ = value;
        counts_.push_back(0);
    } else if (value < offset_) {
        counts_.insert(counts_.begin(), static_cast<std::size_t>(offset_ - value), 0);
        offset_ = value;
    } else if (value > max_value()) {
        counts_.resize(static_cast<std::size_t>(value - offset_) + 1, 0);
    }
    counts_[static_cast<std::size_t>(value - offset_)] += count;
    total_ += count;
}

std::uint64_t Histogram::count_at(std::int64_t value) const noexcept {
    if (counts_.empty() || value < offset_ || value > max_value()) return 0;
    return counts_[static_cast<std::size_t>(value - offset_)];
}

Moments Histogram::moments() const {
    if (total_ == 0) throw std::domain_error("Histogram::moments: no samples");
    double mean = 0.0;
    double second = 0.0;
    const double total = static_cast<double>(total_);
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) continue;
        const double value = static_cast<double>(offset_ + static_cast<std::int64_t>(i));
        const double weight = static_cast<double>(counts_[i]) / total;
        mean += value * weight;
        second += value * value * weight;
    }
    return Moments{mean, second - mean * mean};
}

namespace {

Histogram run_worker(const Campaign& campaign, std::uint32_t worker, std::uint64_t samples) {
    RngStream stream(campaign.seed, worker);
    Histogram h;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t total = 0;
        if (campaign.strategy == StrategyKind::TotallyRandom) {
            total = play_totally_random(campaign.problem, stream).total;
        } else {
            const Keyring ring = random_keyring(campaign.problem.keys, stream);
            total = (campaign.strategy == StrategyKind::LockFirst)
                        ? play_lock_first(campaign.problem, ring).total
                        : play_key_first(campaign.problem, ring).total;
        }
        h.add(static_cast<std::int64_t>(total));
    }
    return h;
}

} // namespace

Histogram run_campaign(const Campaign& campaign) {
    if (campaign.samples < 1) throw std::invalid_argument("campaign needs at least one sample");
    if (campaign.workers < 1) throw std::invalid_argument("campaign needs at least one worker");
    if (campaign.problem.locks > campaign.problem.keys)
        throw std::invalid_argument("invalid problem: locks > keys");

    const std::uint64_t workers = campaign.workers;
    const std::uint64_t base = campaign.samples / workers;
    const std::uint64_t leftover = campaign.samples % workers;
    const auto share = [&](std::uint64_t w) { return base + (w < leftover ? 1 : 0); };

    if (workers == 1) return run_worker(campaign, 0, campaign.samples);

    std::vector<Histogram> partial(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            partial[w] = run_worker(campaign, static_cast<std::uint32_t>(w), share(w));
        });
    }
    for (auto& t : threads) t.join();

    // merge in worker order so the result does not depend on scheduling
    Histogram merged;
    for (const auto& h : partial) {
        for (std::size_t i = 0; i < h.counts().size(); ++i) {
            if (h.counts()[i] > 0)
                merged.add(h.offset() + static_cast<std::int64_t>(i), h.counts()[i]);
        }
    }
    return merged;
}

double gamma_cdf(double x, const GammaParams& params) {
    if (!(params.shape_k > 0.0) || !(params.scale_theta > 0.0))
        throw std::invalid_argument("gamma_cdf: parameters must be positive");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(params.shape_k, x / params.scale_theta);
}

namespace {

// Cell probabilities of a continuous fit over the histogram's integer
// support, with both tails folded into the end cells, then the merged
// Pearson statistic with `fitted` parameters spent.
std::pair<double, std::int64_t> fitted_chi_square(const Histogram& h,
                                                  const std::function<double(double)>& cdf,
                                                  int fitted) {
    const std::int64_t lo = h.offset();
    const std::int64_t hi = h.max_value();
    const double total = static_cast<double>(h.total());

    std::vector<double> obs;
    std::vector<double> exp;
    for (std::int64_t v = lo; v <= hi; ++v) {
        const double upper = (v == hi) ? 1.0 : cdf(static_cast<double>(v) + 0.5);
        const double lower = (v == lo) ? 0.0 : cdf(static_cast<double>(v) - 0.5);
        obs.push_back(static_cast<double>(h.count_at(v)));
        exp.push_back(total * (upper - lower));
    }
    const ChiSquareResult merged = detail::pearson_merged(obs, exp, 5.0);
    const std::int64_t dof = std::max<std::int64_t>(merged.bins - 1 - fitted, 0);
    return {merged.statistic, dof};
}

} // namespace

FitReport fit_gamma_moments(const Histogram& h) {
    if (h.empty()) throw std::domain_error("gamma fit: empty histogram");
    const Moments m = h.moments();
    if (!(m.variance > 0.0)) throw std::domain_error("gamma fit: zero-variance histogram");

    FitReport report;
    report.family = FitFamily::Gamma;
    report.gamma = gamma_from_moments(m.mean, m.variance);
    const auto cdf = [&](double x) { return gamma_cdf(x, report.gamma); };
    std::tie(report.chi_square, report.dof) = fitted_chi_square(h, cdf, 2);
    report.ks_distance = ks_distance(h, cdf);
    return report;
}

FitReport fit_normal_moments(const Histogram& h) {
    if (h.empty()) throw std::domain_error("normal fit: empty histogram");
    const Moments m = h.moments();
    if (!(m.variance > 0.0)) throw std::domain_error("normal fit: zero-variance histogram");

    FitReport report;
    report.family = FitFamily::Normal;
    report.normal = NormalParams{m.mean, std::sqrt(m.variance)};
    const auto cdf = [&](double x) { return normal_cdf(x, report.normal.mu, report.normal.sigma); };
    std::tie(report.chi_square, report.dof) = fitted_chi_square(h, cdf, 2);
    report.ks_distance = ks_distance(h, cdf);
    return report;
}

} // namespace locktrials
