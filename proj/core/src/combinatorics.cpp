#include "locktrials/combinatorics.hpp"

#include <stdexcept>

namespace locktrials {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i) after this step
    }
    return result;
}

BinomialTable::BinomialTable(std::int64_t max_n) : max_n_(max_n), zero_(0) {
    if (max_n < 0) throw std::invalid_argument("BinomialTable: negative size");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (std::size_t n = 0; n <= static_cast<std::size_t>(max_n); ++n) {
        auto& row = rows_[n];
        row.resize(n + 1);
        row[0] = 1;
        row[n] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
        }
    }
}

const BigInt& BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    if (n > max_n_) throw std::out_of_range("BinomialTable: n exceeds table size");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace locktrials
