#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace locktrials {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) by the multiplicative formula, exact at
/// every step (each prefix product is itself a binomial coefficient).
/// Out-of-range arguments (k < 0, k > n, n < 0) give 0, matching the
/// convention used in binomial identities.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Dense Pascal triangle of C(n, k) for 0 <= k <= n <= max_n.
/// An independent route to the same coefficients as binomial(); the two
/// are cross-checked in tests.
class BinomialTable {
public:
    explicit BinomialTable(std::int64_t max_n);

    /// C(n, k); 0 outside the triangle. n must not exceed max_n.
    const BigInt& operator()(std::int64_t n, std::int64_t k) const;

    std::int64_t max_n() const noexcept { return max_n_; }

private:
    std::int64_t max_n_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

} // namespace locktrials
