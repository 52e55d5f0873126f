#include "locktrials/pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace locktrials {

Pmf::Pmf(std::int64_t offset, std::vector<double> mass, double deficit)
    : offset_(offset), mass_(std::move(mass)), deficit_(deficit) {
    if (mass_.empty()) throw std::invalid_argument("Pmf: empty mass vector");
    if (!(deficit_ >= 0.0 && deficit_ < 1.0))
        throw std::invalid_argument("Pmf: deficit must lie in [0,1)");
    double sum = 0.0;
    for (const double m : mass_) {
        if (!(m >= 0.0)) throw std::invalid_argument("Pmf: negative or NaN mass entry");
        sum += m;
    }
    if (std::abs(sum - (1.0 - deficit_)) > kMassTolerance)
        throw std::invalid_argument("Pmf: mass sums to " + std::to_string(sum) +
                                    ", expected " + std::to_string(1.0 - deficit_));
}

Pmf Pmf::point_mass(std::int64_t value) { return Pmf(value, {1.0}); }

Pmf Pmf::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("Pmf::uniform: empty range");
    const auto count = static_cast<std::size_t>(hi - lo + 1);
    return Pmf(lo, std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

double Pmf::at(std::int64_t value) const noexcept {
    if (value < offset_ || value > max_value()) return 0.0;
    return mass_[static_cast<std::size_t>(value - offset_)];
}

Pmf pmf_convolve(const Pmf& a, const Pmf& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a.mass()[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += ai * b.mass()[j];
        }
    }
    const double deficit = 1.0 - (1.0 - a.deficit()) * (1.0 - b.deficit());
    return Pmf(a.offset() + b.offset(), std::move(out), deficit);
}

Moments pmf_moments(const Pmf& p, bool allow_truncated) {
    if (!allow_truncated && p.deficit() > kMassTolerance)
        throw std::invalid_argument("pmf_moments: truncated Pmf (deficit " +
                                    std::to_string(p.deficit()) +
                                    "); pass allow_truncated to accept");
    double mean = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double value = static_cast<double>(p.offset() + static_cast<std::int64_t>(i));
        mean += value * p.mass()[i];
        second += value * value * p.mass()[i];
    }
    return Moments{mean, second - mean * mean};
}

} // namespace locktrials
