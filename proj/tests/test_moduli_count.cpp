#include <cmath>

#include "doctest.h"
#include "wdparam/moduli_count.hpp"

using namespace wdparam;

TEST_CASE("n=1 golden counts") {
    // q=3, ell=5: Sigma in {1,4} (order coprime to 3), Phi in F_5^x
    CHECK(count_points_pairs(1, 3, 5) == 8);
    // q=2, ell=3: q-1 = 1 forces Sigma = 1
    CHECK(count_points_pairs(1, 2, 3) == 2);
}

TEST_CASE("n=1 closed form matches enumeration") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        for (unsigned long ell : {3ul, 5ul, 7ul, 11ul}) {
            if (q % ell == 0) continue;
            CHECK(count_points_pairs(1, q, ell) == count_points_n1_closed_form(q, ell));
        }
    }
}

TEST_CASE("the two independently coded oracles agree") {
    CHECK(count_points_pairs(1, 3, 7) == count_points_centralizer(1, 3, 7));
    CHECK(count_points_pairs(2, 2, 3) == count_points_centralizer(2, 2, 3));
}

TEST_CASE("the relation only sees q modulo the order bound") {
    // for n=1 the exponent of F_ell^x is ell-1
    for (unsigned long ell : {5ul, 7ul}) {
        unsigned long q = 2;
        unsigned long q_shift = q + 2 * (ell - 1);  // same residue, still even
        CHECK(count_points_pairs(1, q, ell) == count_points_pairs(1, q_shift, ell));
    }
}

TEST_CASE("orbit tables for small cases") {
    auto res = count_points(1, 3, 5, true);
    CHECK(res.points == 8);
    // conjugation is trivial for n=1
    CHECK(res.conjugation_orbits == 8);
    // twisting Phi by F_5^x collapses the Phi coordinate
    CHECK(res.twist_orbits == 2);
}

TEST_CASE("n=2 exhaustive count is reproducible") {
    auto res = count_points(2, 2, 3, false);
    CHECK(res.points == count_points_pairs(2, 2, 3));
    CHECK(res.points > 0);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS(count_points_pairs(3, 2, 3));
    CHECK_THROWS(count_points_pairs(1, 2, 4));
    CHECK_THROWS(count_points_pairs(1, 2, 2));
}

TEST_CASE("dimension probe brackets the expected dimension for n=1") {
    auto rows = dimension_probe(1, 3, {5, 7, 11});
    for (const auto& row : rows) {
        CHECK(row.dim_expected == 1);
        CHECK(row.log_ell_count >= 1.0);
        double upper = 1.0 + std::log(double(3 - 1)) / std::log(double(row.ell));
        CHECK(row.log_ell_count <= upper + 1e-9);
    }
    CHECK(dimension_probe(1, 3, {}).empty());
}

TEST_CASE("dimension probe at n=2 lands near dim GL_2") {
    auto rows = dimension_probe(2, 2, {3});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].dim_expected == 4);
    // the count is within a couple of ell-orders of ell^4
    CHECK(rows[0].log_ell_count >= 3.0);
    CHECK(rows[0].log_ell_count <= 6.0);
}
