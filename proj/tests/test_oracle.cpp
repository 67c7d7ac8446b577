#include <doctest.h>

#include "menage/classic.hpp"
#include "menage/oracle.hpp"
#include "menage/transfer.hpp"

using namespace menage;

TEST_CASE("brute force on the known small cases") {
    CHECK(brute_force(2, 1) == 0);
    CHECK(brute_force(2, 2) == 0);
    CHECK(brute_force(2, 3) == 12);
    CHECK(brute_force(3, 1) == 0);
    CHECK(brute_force(3, 2) == 8);

    CHECK_THROWS_AS(brute_force(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(brute_force(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force(2, 6), std::invalid_argument);
}

TEST_CASE("brute force counts are divisible by the rotation count 2n") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) CHECK(divisible(brute_force(k, n), 2 * ExactInt(n)));
}

TEST_CASE("pattern oracle basics") {
    CHECK(pattern_oracle(2, 3, 0) == 2);
    CHECK(pattern_oracle(2, 2, 1) == 8);
    CHECK(pattern_oracle(2, 2, 1) == catalan_pattern_closed_form(2, 1));
    CHECK(pattern_oracle(3, 2, 0) == 6);

    CHECK_THROWS_AS(pattern_oracle(2, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(pattern_oracle(2, 3, 4), std::invalid_argument);
}

TEST_CASE("pattern oracle agrees with the closed form for k = 2") {
    for (int n = 2; n <= 6; ++n)
        for (int j = 0; j <= n; ++j)
            CHECK(pattern_oracle(2, n, j) == catalan_pattern_closed_form(n, j));
}

TEST_CASE("pattern oracle agrees with the transfer counts") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            const std::vector<ExactInt> counts = pattern_counts(k, n);
            for (int j = 0; j <= n; ++j) CHECK(pattern_oracle(k, n, j) == counts[j]);
        }
}

TEST_CASE("brute force agrees with the transfer counts") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) CHECK(brute_force(k, n) == seatings_via_transfer(k, n));
}
