#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "locktrials/analytic.hpp"
#include "locktrials/combinatorics.hpp"
#include "locktrials/problem.hpp"

using namespace locktrials;

TEST_CASE("totally random closed forms") {
    const Moments m88 = moments_random(make_problem(8, 8));
    CHECK(m88.mean == 36.0);
    CHECK(m88.variance == 168.0);

    const Moments m510 = moments_random(make_problem(5, 10));
    CHECK(m510.mean == 40.0);
    CHECK(m510.variance == 290.0);

    const Moments empty = moments_random(make_problem(0, 5));
    CHECK(empty.mean == 0.0);
    CHECK(empty.variance == 0.0);
}

TEST_CASE("ordered closed forms") {
    const Moments m2020 = moments_ordered(make_problem(20, 20));
    CHECK(m2020.mean == 115.0);
    CHECK(m2020.variance == 237.5);

    const Moments m510 = moments_ordered(make_problem(5, 10));
    CHECK(m510.mean == 22.5);
    CHECK(m510.variance == doctest::Approx(5.0 * 390.0 / 72.0).epsilon(1e-15));

    const Moments m11 = moments_ordered(make_problem(1, 1));
    CHECK(m11.mean == 1.0);
    CHECK(m11.variance == 0.0);
}

TEST_CASE("double and exact-rational moment routes agree") {
    for (std::uint32_t keys = 0; keys <= 40; ++keys) {
        for (std::uint32_t locks = 0; locks <= keys; ++locks) {
            const Problem problem{locks, keys};
            const Moments dr = moments_random(problem);
            const RationalMoments rr = moments_random_exact(problem);
            CHECK(dr.mean == doctest::Approx(rr.mean.convert_to<double>()).epsilon(1e-15));
            CHECK(dr.variance == doctest::Approx(rr.variance.convert_to<double>()).epsilon(1e-15));

            const Moments od = moments_ordered(problem);
            const RationalMoments orat = moments_ordered_exact(problem);
            CHECK(od.mean == doctest::Approx(orat.mean.convert_to<double>()).epsilon(1e-15));
            CHECK(od.variance ==
                  doctest::Approx(orat.variance.convert_to<double>()).epsilon(1e-15));
        }
    }
}

TEST_CASE("geometric per-lock distribution") {
    const Problem p13 = make_problem(1, 3);
    const Pmf g = per_lock_pmf_random(p13, 1);
    // P(X_1 = 2) = q(1-q) with q = 2/3
    CHECK(g.at(2) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

    // the last lock with the last key succeeds immediately
    const Pmf last = per_lock_pmf_random(make_problem(4, 4), 4);
    CHECK(last.offset() == 1);
    CHECK(last.size() == 1);
    CHECK(last.at(1) == 1.0);

    // mean of the first per-lock count is N - i + 1
    const Pmf first = per_lock_pmf_random(make_problem(5, 10), 1, 1e-12);
    const Moments m = pmf_moments(first, /*allow_truncated=*/true);
    CHECK(m.mean == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(m.variance == doctest::Approx(90.0).epsilon(1e-7));

    CHECK_THROWS_AS(per_lock_pmf_random(p13, 0), std::invalid_argument);
    CHECK_THROWS_AS(per_lock_pmf_random(p13, 2), std::invalid_argument);
}

TEST_CASE("uniform per-lock distribution") {
    const Pmf u = per_lock_pmf_ordered(make_problem(5, 10), 1);
    CHECK(u.offset() == 1);
    CHECK(u.max_value() == 10);
    CHECK(pmf_moments(u).mean == doctest::Approx(5.5).epsilon(1e-15));

    const Pmf two = per_lock_pmf_ordered(make_problem(2, 3), 2);
    CHECK(two.size() == 2);
    CHECK(two.at(1) == 0.5);
    CHECK(two.at(2) == 0.5);

    const Pmf point = per_lock_pmf_ordered(make_problem(4, 4), 4);
    CHECK(point.size() == 1);
    CHECK(point.at(1) == 1.0);
}

TEST_CASE("per-lock masses are complete and means add up exactly") {
    for (std::uint32_t keys = 1; keys <= 12; ++keys) {
        for (std::uint32_t locks = 1; locks <= keys; ++locks) {
            const Problem problem{locks, keys};
            double mean_sum = 0.0;
            for (std::uint32_t i = 1; i <= locks; ++i) {
                const Pmf u = per_lock_pmf_ordered(problem, i);
                double total = 0.0;
                for (const double m : u.mass()) total += m;
                CHECK(std::abs(total - 1.0) <= 1e-12);
                // per-lock mean is (N+2-i)/2; the materialized pmf agrees
                const double closed_form = (keys + 2.0 - i) / 2.0;
                CHECK(std::abs(pmf_moments(u).mean - closed_form) <= 1e-12);
                mean_sum += closed_form;
            }
            // the per-lock means are multiples of 1/2, so this sum is exact
            CHECK(mean_sum == moments_ordered(problem).mean);
        }
    }
}

TEST_CASE("binomial routes agree and handle big values") {
    const BinomialTable table(70);
    for (std::int64_t n = 0; n <= 70; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == table(n, k));
        }
    }
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(-1, 0) == 0);
    // beyond 64-bit range
    CHECK(binomial(70, 35) > BigInt("18446744073709551615"));
}

TEST_CASE("key-first marginal collapses to 1/(N-p+1)") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        CHECK(key_first_marginal(3, 1, k) == BigRational(1, 3));
    }
    // two-term sum by hand: l=0 gives C(0,0)C(3,1)=3, l=1 gives C(1,1)C(2,0)=1
    CHECK(key_first_marginal(4, 2, 1) == BigRational(1, 3));
    CHECK(key_first_marginal(10, 4, 3) == BigRational(1, 7));

    CHECK_THROWS_AS(key_first_marginal(10, 4, 8), std::invalid_argument); // k > N-p+1
    CHECK_THROWS_AS(key_first_marginal(10, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(key_first_marginal(10, 11, 1), std::invalid_argument);
}

TEST_CASE("identity verifier covers the full triple range") {
    const IdentityReport one = verify_chu_vandermonde(1);
    CHECK(one.checked == 1);
    CHECK(one.ok());

    const IdentityReport report = verify_chu_vandermonde(25);
    // sum over N of N(N+1)/2 triples = C(N_max+2, 3)
    CHECK(report.checked == 25ULL * 26ULL * 27ULL / 6ULL);
    CHECK(report.ok());

    CHECK_THROWS_AS(verify_chu_vandermonde(0), std::invalid_argument);
}

TEST_CASE("gamma parameters reproduce the matched moments") {
    const GammaParams g88 = gamma_match_random(make_problem(8, 8));
    CHECK(g88.shape_k == doctest::Approx(54.0 / 7.0).epsilon(1e-14));
    CHECK(g88.scale_theta == doctest::Approx(14.0 / 3.0).epsilon(1e-14));
    CHECK(g88.shape_k * g88.scale_theta == doctest::Approx(36.0).epsilon(1e-12));
    CHECK(g88.shape_k * g88.scale_theta * g88.scale_theta ==
          doctest::Approx(168.0).epsilon(1e-12));

    const GammaParams g510 = gamma_match_random(make_problem(5, 10));
    CHECK(g510.shape_k == doctest::Approx(3840.0 / 696.0).epsilon(1e-14));
    CHECK(g510.scale_theta == doctest::Approx(7.25).epsilon(1e-14));
    CHECK(g510.shape_k * g510.scale_theta == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(g510.shape_k * g510.scale_theta * g510.scale_theta ==
          doctest::Approx(290.0).epsilon(1e-12));

    const GammaParams g22 = gamma_match_random(make_problem(2, 2));
    CHECK(g22.shape_k * g22.scale_theta == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(g22.shape_k * g22.scale_theta * g22.scale_theta == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(gamma_match_random(make_problem(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(gamma_match_random(make_problem(0, 0)), std::invalid_argument);
}

TEST_CASE("moment match holds across the grid") {
    for (std::uint32_t keys = 2; keys <= 50; ++keys) {
        for (std::uint32_t locks = 2; locks <= keys; ++locks) {
            const Problem problem{locks, keys};
            const Moments m = moments_random(problem);
            const GammaParams g = gamma_match_random(problem);
            CHECK(std::abs(g.shape_k * g.scale_theta - m.mean) <= 1e-9 * m.mean);
            CHECK(std::abs(g.shape_k * g.scale_theta * g.scale_theta - m.variance) <=
                  1e-9 * m.variance);
        }
    }
}

TEST_CASE("moment matching rejects degenerate inputs") {
    CHECK_THROWS_AS(gamma_from_moments(3.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_from_moments(0.0, 1.0), std::domain_error);
    const GammaParams g = gamma_from_moments(36.0, 168.0);
    CHECK(g.shape_k == doctest::Approx(54.0 / 7.0).epsilon(1e-14));
}
