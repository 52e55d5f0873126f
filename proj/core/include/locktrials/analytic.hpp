#pragma once

#include <cstdint>
#include <vector>

#include "locktrials/combinatorics.hpp"
#include "locktrials/pmf.hpp"
#include "locktrials/problem.hpp"

namespace locktrials {

/// Moment-matched Gamma parameters: mean = shape_k * scale_theta,
/// variance = shape_k * scale_theta^2.
struct GammaParams {
    double shape_k = 0.0;
    double scale_theta = 0.0;
};

struct RationalMoments {
    BigRational mean;
    BigRational variance;
};

/// Mean/variance of the total trial count under the totally random
/// strategy: E = n(2N-n+1)/2, Var = n(3N^2-3Nn+n^2-1)/3.
Moments moments_random(const Problem& problem);
RationalMoments moments_random_exact(const Problem& problem);

/// Mean/variance of the total trial count under the lock-first strategy
/// (key-first has the same law): E = n(2N+3-n)/4,
/// Var = n(6N^2-6Nn+6N+2n^2-3n-5)/72.
Moments moments_ordered(const Problem& problem);
RationalMoments moments_ordered_exact(const Problem& problem);

/// Trials between openings i-1 and i under the totally random strategy:
/// geometric with success probability 1/(N-i+1), materialized with tail
/// mass at most epsilon (recorded as the Pmf deficit).
Pmf per_lock_pmf_random(const Problem& problem, std::uint32_t i, double epsilon = 1e-9);

/// Per-lock trial count under the ordered strategies: uniform on
/// {1 .. N-i+1}. Complete.
Pmf per_lock_pmf_ordered(const Problem& problem, std::uint32_t i);

/// Exact marginal probability P(X_p = k) for the key-first strategy,
/// evaluated as the binomial sum
///   (1/N) * sum_{l=0}^{p-1} C(k+l-1,l) C(N-k-l,p-1-l) / C(N-1,p-1)
/// in arbitrary-precision rational arithmetic. By the Chu-Vandermonde
/// identity this collapses to 1/(N-p+1) for every k <= N-p+1; callers
/// outside that range are rejected.
BigRational key_first_marginal(std::int64_t keys, std::int64_t p, std::int64_t k);

struct IdentityViolation {
    std::int64_t keys = 0;
    std::int64_t p = 0;
    std::int64_t k = 0;
};

struct IdentityReport {
    std::uint64_t checked = 0;
    std::vector<IdentityViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks the collapse of the key-first marginal sum to 1/(N-p+1) for
/// every N <= max_keys, p <= N, k <= N-p+1, entirely in exact integer
/// arithmetic (no tolerance). Violations are reported, not thrown.
IdentityReport verify_chu_vandermonde(std::int64_t max_keys);

/// Gamma parameters matching the totally random strategy's mean and
/// variance: shape k = 3n(2N-n+1)^2 / (4(3N^2-3Nn+n^2-1)),
/// scale theta = 2(3N^2-3Nn+n^2-1) / (3(2N-n+1)).
/// Requires locks >= 2 (positive variance).
GammaParams gamma_match_random(const Problem& problem);

/// Moment matching from sample or exact moments: k = mean^2/variance,
/// theta = variance/mean. Requires variance > 0 and mean > 0.
GammaParams gamma_from_moments(double mean, double variance);

} // namespace locktrials
