#include "doctest.h"

#include <cmath>

#include "curves/arith.hpp"
#include "curves/census.hpp"

using namespace curves;

TEST_CASE("euler_phi and moebius textbook values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(12) == 4);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
}

TEST_CASE("divisor-sum identities up to 10^4") {
    // sum_{d|n} phi(d) = n and sum_{d|n} mu(d) = [n == 1]
    for (int n = 1; n <= 10000; ++n) {
        std::int64_t phi_sum = 0, mu_sum = 0;
        for (int d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            phi_sum += euler_phi(d);
            mu_sum += moebius(d);
            if (d != n / d) {
                phi_sum += euler_phi(n / d);
                mu_sum += moebius(n / d);
            }
        }
        CHECK(phi_sum == n);
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("totient summatory") {
    CHECK(phi_summatory(1) == 1);
    CHECK(phi_summatory(4) == 6);
    CHECK(phi_summatory(10) == 32);
    std::int64_t direct = 0;
    for (int n = 1; n <= 300; ++n) direct += euler_phi(n);
    CHECK(phi_summatory(300) == direct);
}

TEST_CASE("pow3 domain guard") {
    CHECK(pow3(0) == 1);
    CHECK(pow3(5) == 243);
    CHECK(pow3(39) > 0);
    CHECK_THROWS_AS(pow3(40), std::out_of_range);
}

TEST_CASE("solution sets") {
    CHECK(solution_set(2, SolutionFamily::S).size() == 1);
    const auto s2_10 = solution_set(10, SolutionFamily::S2);
    REQUIRE(s2_10.size() == 1);
    CHECK(s2_10[0] == SolutionTriple{2, 2, 1});
    CHECK(solution_set(7, SolutionFamily::S2).empty());

    for (int L = 1; L <= 500; ++L) {
        CHECK(static_cast<std::int64_t>(solution_set(L, SolutionFamily::S).size()) ==
              solution_count_formula(L, SolutionFamily::S));
        CHECK(static_cast<std::int64_t>(solution_set(L, SolutionFamily::S2).size()) ==
              solution_count_formula(L, SolutionFamily::S2));
        if (L >= 2)
            CHECK(static_cast<std::int64_t>(solution_set(L, SolutionFamily::S1).size()) ==
                  solution_count_formula(L, SolutionFamily::S1));
    }
}

TEST_CASE("closed-form counts") {
    CHECK(count_simple_primitive(4) == 8);
    CHECK(count_simple_primitive(5) == 16);
    CHECK(count_simple_primitive(3) == 8);
    CHECK(count_simple_primitive(1) == 4);

    CHECK(count_simple_multicurve(4) == 16);
    CHECK(count_simple_multicurve(1) == 4);
    CHECK(count_simple_multicurve_cumulative(4) == 40);
    for (int L = 1; L <= 100; ++L) {
        std::int64_t sum = 0;
        for (int n = 1; n <= L; ++n) sum += count_simple_multicurve(n);
        CHECK(sum == count_simple_multicurve_cumulative(L));
    }

    CHECK(count_si1_primitive(4) == 8);
    CHECK(count_si1_primitive(5) == 8);
    CHECK(count_si1_primitive(6) == 16);
    CHECK(count_si1_primitive(7) == 16);
    CHECK(count_si1_primitive(8) == 24);
    CHECK(count_si1_all(4) == 12);
    CHECK(count_si1_all(6) == 24);

    CHECK(count_all_primitive(1) == 4);
    CHECK(count_all_primitive(2) == 4);
    CHECK(count_all_primitive(3) == 8);
    CHECK(count_all_classes(4) == 26);
    CHECK(count_all_classes(1) == 4);
}

TEST_CASE("cumulative simple count conventions differ by two") {
    for (int L : {4, 10, 100}) {
        const auto census_value =
            count_simple_primitive_cumulative(L, CumulativeConvention::census);
        const auto plus_two_value =
            count_simple_primitive_cumulative(L, CumulativeConvention::plus_two);
        CHECK(census_value == 4 * phi_summatory(L));
        CHECK(plus_two_value == census_value + 2);
    }
    // the default is the per-length sum over the validated counts
    std::int64_t sum = 0;
    for (int n = 1; n <= 12; ++n) sum += count_simple_primitive(n);
    CHECK(count_simple_primitive_cumulative(12) == sum);
}

TEST_CASE("positioned-word identity across lengths") {
    // sum over d | L of d * (primitive classes of length d) counts every
    // positioned cyclically reduced word exactly once
    for (int L = 1; L <= 12; ++L) {
        std::int64_t sum = 0;
        for (int d = 1; d <= L; ++d)
            if (L % d == 0) sum += d * count_all_primitive(d);
        CHECK(sum == count_cyclically_reduced(L));
    }
}

TEST_CASE("asymptotic report at moderate size") {
    const auto r = asymptotic_report(100000);
    const double pi = 3.14159265358979323846;
    CHECK(std::abs(r.simple_over_L2 - 12 / (pi * pi)) / (12 / (pi * pi)) < 0.01);
    CHECK(std::abs(r.si1_over_L2 - 27 / (pi * pi)) / (27 / (pi * pi)) < 0.02);
    CHECK(std::abs(r.simple_si1_ratio - 4.0 / 9.0) / (4.0 / 9.0) < 0.02);
    CHECK(std::abs(r.probability_si1 - 9.0 / 13.0) / (9.0 / 13.0) < 0.02);
}
