#include "locktrials/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locktrials {

namespace {

using Wide = __int128;

double to_double(Wide v) { return static_cast<double>(v); }

void require_lock_index(const Problem& problem, std::uint32_t i) {
    if (i < 1 || i > problem.locks)
        throw std::invalid_argument("lock index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(problem.locks));
}

// sum_{l=0}^{p-1} C(k+l-1, l) * C(N-k-l, p-1-l)
BigInt marginal_numerator(std::int64_t N, std::int64_t p, std::int64_t k,
                          const BinomialTable& table) {
    BigInt sum = 0;
    for (std::int64_t l = 0; l < p; ++l) {
        sum += table(k + l - 1, l) * table(N - k - l, p - 1 - l);
    }
    return sum;
}

} // namespace

Moments moments_random(const Problem& problem) {
    const Wide n = problem.locks;
    const Wide N = problem.keys;
    const Wide mean_num = n * (2 * N - n + 1);              // always even
    const Wide var_num = n * (3 * N * N - 3 * N * n + n * n - 1); // divisible by 3
    return Moments{to_double(mean_num / 2), to_double(var_num / 3)};
}

RationalMoments moments_random_exact(const Problem& problem) {
    const BigInt n = problem.locks;
    const BigInt N = problem.keys;
    return RationalMoments{
        BigRational(n * (2 * N - n + 1), 2),
        BigRational(n * (3 * N * N - 3 * N * n + n * n - 1), 3),
    };
}

Moments moments_ordered(const Problem& problem) {
    const Wide n = problem.locks;
    const Wide N = problem.keys;
    const Wide mean_num = n * (2 * N + 3 - n);
    const Wide var_num = n * (6 * N * N - 6 * N * n + 6 * N + 2 * n * n - 3 * n - 5);
    return Moments{to_double(mean_num) / 4.0, to_double(var_num) / 72.0};
}

RationalMoments moments_ordered_exact(const Problem& problem) {
    const BigInt n = problem.locks;
    const BigInt N = problem.keys;
    return RationalMoments{
        BigRational(n * (2 * N + 3 - n), 4),
        BigRational(n * (6 * N * N - 6 * N * n + 6 * N + 2 * n * n - 3 * n - 5), 72),
    };
}

Pmf per_lock_pmf_random(const Problem& problem, std::uint32_t i, double epsilon) {
    require_lock_index(problem, i);
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1)");

    const double remaining = static_cast<double>(problem.keys - i + 1);
    const double success = 1.0 / remaining;
    const double q = 1.0 - success;
    if (q == 0.0) return Pmf::point_mass(1);

    // smallest L with q^L <= epsilon
    const auto length = static_cast<std::size_t>(std::ceil(std::log(epsilon) / std::log(q)));
    std::vector<double> mass(std::max<std::size_t>(length, 1));
    double tail = 1.0; // q^k, probability of k initial failures
    for (auto& entry : mass) {
        entry = tail * success;
        tail *= q;
    }
    return Pmf(1, std::move(mass), tail);
}

Pmf per_lock_pmf_ordered(const Problem& problem, std::uint32_t i) {
    require_lock_index(problem, i);
    return Pmf::uniform(1, static_cast<std::int64_t>(problem.keys - i + 1));
}

BigRational key_first_marginal(std::int64_t keys, std::int64_t p, std::int64_t k) {
    if (p < 1 || p > keys)
        throw std::invalid_argument("p must lie in 1..keys");
    if (k < 1 || k > keys - p + 1)
        throw std::invalid_argument("k must lie in 1..keys-p+1, got " + std::to_string(k));

    BigInt sum = 0;
    for (std::int64_t l = 0; l < p; ++l) {
        sum += binomial(k + l - 1, l) * binomial(keys - k - l, p - 1 - l);
    }
    return BigRational(sum, BigInt(keys) * binomial(keys - 1, p - 1));
}

IdentityReport verify_chu_vandermonde(std::int64_t max_keys) {
    if (max_keys < 1) throw std::invalid_argument("max_keys must be >= 1");

    const BinomialTable table(max_keys);
    IdentityReport report;
    for (std::int64_t N = 1; N <= max_keys; ++N) {
        for (std::int64_t p = 1; p <= N; ++p) {
            const BigInt rhs = BigInt(N) * table(N - 1, p - 1);
            for (std::int64_t k = 1; k <= N - p + 1; ++k) {
                const BigInt lhs = BigInt(N - p + 1) * marginal_numerator(N, p, k, table);
                ++report.checked;
                bool holds = (lhs == rhs);
                if (holds && (31 * N + 7 * p + k) % 101 == 0) {
                    // spot-check through the public marginal as well
                    holds = key_first_marginal(N, p, k) == BigRational(1, N - p + 1);
                }
                if (!holds) report.violations.push_back({N, p, k});
            }
        }
    }
    return report;
}

GammaParams gamma_match_random(const Problem& problem) {
    if (problem.locks < 2)
        throw std::invalid_argument("gamma_match_random requires at least 2 locks "
                                    "(variance must be positive)");
    const Wide n = problem.locks;
    const Wide N = problem.keys;
    const Wide v = 3 * N * N - 3 * N * n + n * n - 1;
    const Wide m = 2 * N - n + 1;
    return GammaParams{
        to_double(3 * n * m * m) / to_double(4 * v),
        to_double(2 * v) / to_double(3 * m),
    };
}

GammaParams gamma_from_moments(double mean, double variance) {
    if (!(variance > 0.0)) throw std::domain_error("gamma fit requires positive variance");
    if (!(mean > 0.0)) throw std::domain_error("gamma fit requires positive mean");
    return GammaParams{mean * mean / variance, variance / mean};
}

} // namespace locktrials
