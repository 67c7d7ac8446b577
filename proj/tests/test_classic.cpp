#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "menage/classic.hpp"
#include "menage/transfer.hpp"

using namespace menage;

namespace {

// Independent count of alternating seatings of n couples around 2n labeled
// seats where the couples 0..j-1 each sit together: plain enumeration of
// all people-to-seat assignments.
long w_by_enumeration(int n, int j) {
    const int seats = 2 * n;
    std::vector<int> person(seats);
    for (int i = 0; i < seats; ++i) person[i] = i;  // females < n, males >= n
    long count = 0;
    do {
        bool ok = true;
        for (int s = 0; s < seats && ok; ++s)
            ok = (person[s] >= n) != (person[(s + 1) % seats] >= n);  // alternating
        for (int couple = 0; couple < j && ok; ++couple) {
            bool close = false;
            for (int s = 0; s < seats && !close; ++s)
                close = person[s] % n == couple && person[(s + 1) % seats] % n == couple;
            ok = close;
        }
        if (ok) ++count;
    } while (std::next_permutation(person.begin(), person.end()));
    return count;
}

PolyMatrix random_constant_matrix(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> entry(-3, 3);
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = LaurentPoly::constant(entry(rng));
    return m;
}

}  // namespace

TEST_CASE("touchard closed form") {
    CHECK(touchard(0) == 1);
    CHECK(touchard(1) == 0);
    CHECK(touchard(2) == 0);
    CHECK(touchard(3) == 12);
    CHECK(touchard(6) == 115200);
    CHECK(touchard(8) == ExactInt("382072320"));
    CHECK_THROWS_AS(touchard(-1), std::invalid_argument);
}

TEST_CASE("alternating seatings with designated close couples") {
    CHECK(w_alternating(3, 0) == w_by_enumeration(3, 0));
    CHECK(w_alternating(3, 0) == 72);
    CHECK(w_alternating(2, 1) == w_by_enumeration(2, 1));
    CHECK(w_alternating(2, 1) == 8);
    CHECK(w_alternating(2, 2) == w_by_enumeration(2, 2));
    CHECK(w_alternating(2, 2) == 8);
    CHECK(w_alternating(3, 2) == w_by_enumeration(3, 2));

    for (int n = 1; n <= 10; ++n)
        CHECK(w_alternating(n, 0) == 2 * factorial(n) * factorial(n));

    CHECK_THROWS_AS(w_alternating(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(w_alternating(3, 4), std::invalid_argument);
}

TEST_CASE("inclusion-exclusion") {
    CHECK(menage_inclusion_exclusion(2) == 0);
    CHECK(menage_inclusion_exclusion(3) == 12);
    CHECK(menage_inclusion_exclusion(4) == 96);
    for (int n = 0; n <= 12; ++n) CHECK(menage_inclusion_exclusion(n) == touchard(n));
}

TEST_CASE("eigenvalue recurrence route") {
    CHECK(menage_eigen_recurrence(3) == 12);
    CHECK(menage_eigen_recurrence(5) == 3120);
    CHECK(menage_eigen_recurrence(7) == 5836320);
    CHECK(menage_eigen_recurrence(0) == 1);
    CHECK(menage_eigen_recurrence(1) == 0);
}

TEST_CASE("U/V pair reproduces the squared adjacency matrix") {
    const MenageUVPair uv;  // construction asserts U + V z == A^2
    CHECK(uv.U.at(0, 0) == LaurentPoly::constant(1));
    CHECK(uv.V.at(0, 3) == LaurentPoly::constant(1));

    for (int n = 1; n <= 6; ++n) CHECK(laplace_identity_check(uv.U, uv.V, n));
}

TEST_CASE("laplace identity on trivial and random matrices") {
    const PolyMatrix id = PolyMatrix::identity(3);
    const PolyMatrix zero(3);
    for (int n = 0; n <= 5; ++n) CHECK(laplace_identity_check(id, zero, n));

    std::mt19937 rng(123);
    std::uniform_int_distribution<int> dim_dist(1, 3);
    std::uniform_int_distribution<int> n_dist(0, 6);
    for (int round = 0; round < 20; ++round) {
        const int dim = dim_dist(rng);
        CHECK(laplace_identity_check(random_constant_matrix(rng, dim),
                                     random_constant_matrix(rng, dim), n_dist(rng)));
    }

    CHECK_THROWS_AS(laplace_identity_check(id, PolyMatrix::identity(2), 3),
                    std::invalid_argument);
    PolyMatrix with_z(3);
    with_z.at(0, 0) = LaurentPoly::z();
    CHECK_THROWS_AS(laplace_identity_check(with_z, zero, 3), std::invalid_argument);
}

TEST_CASE("exponential generating function coefficients") {
    const std::vector<ExactRat> egf = menage_egf_coeffs(15);
    REQUIRE(egf.size() == 16);
    CHECK(egf[0] == 1);
    CHECK(egf[3] == 2);
    CHECK(egf[5] == 26);
    for (int n = 0; n <= 15; ++n)
        CHECK(egf[n] * ExactRat(factorial(n)) == ExactRat(touchard(n)));
}

TEST_CASE("closed-form pattern coefficients") {
    CHECK(catalan_pattern_closed_form(2, 0) == 2);
    CHECK(catalan_pattern_closed_form(3, 1) == 12);
    CHECK(catalan_pattern_closed_form(5, 5) == 4);
    CHECK_THROWS_AS(catalan_pattern_closed_form(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(catalan_pattern_closed_form(3, 4), std::invalid_argument);
}

TEST_CASE("divisibility facts") {
    for (int n = 3; n <= 10; ++n) {
        const ExactInt m = touchard(n);
        CHECK(divisible(m, 2 * factorial(n)));
        CHECK(divisible(m, 2 * ExactInt(n)));
    }
}

TEST_CASE("four computation paths agree for k = 2") {
    for (int n = 2; n <= 15; ++n) {
        const ExactInt reference = touchard(n);
        CHECK(menage_inclusion_exclusion(n) == reference);
        CHECK(menage_eigen_recurrence(n) == reference);
        CHECK(seatings_via_transfer(2, n) == reference);
    }
}
