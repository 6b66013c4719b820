#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zsf/lengths.hpp"
#include "zsf/oracle.hpp"

#include <random>

using namespace zsf;

TEST_CASE("oracle worked examples") {
    CHECK(oracle::oracle_min_delta(GroupSubset(10, {1, 9}), 2) == 8);
    CHECK(oracle::oracle_min_delta(GroupSubset(10, {2, 5}), 2) == 0);
    CHECK(oracle::oracle_min_delta(GroupSubset(11, {1, 5}), 2) == 4);
    CHECK(oracle::oracle_atoms(GroupSubset(10, {1, 9})).count() == 3);
    CHECK(oracle::oracle_atoms(GroupSubset(11, {1, 5})).count() == 4);
    for (i64 n : {4, 9, 15})
        for (i64 g = 0; g < n; ++g) CHECK(oracle::oracle_atoms(GroupSubset(n, {g})).count() == 1);
}

TEST_CASE("bound one can be strictly coarser") {
    // {1,5} mod 8: the only unit-gap relations need a multiplicity above the
    // order bound, so the bound-1 box sees gcd 2 while the true value is 1
    GroupSubset s(8, {1, 5});
    CHECK(oracle::oracle_min_delta(s, 1) == 2);
    CHECK(oracle::oracle_min_delta(s, 2) == 1);
    CHECK(oracle::oracle_min_delta(s, 3) == 1);
    CHECK(min_delta(s).min_delta == 1);
}

TEST_CASE("oracle guards") {
    oracle::OracleLimits tiny;
    tiny.max_box = 100;
    CHECK_THROWS_AS(oracle::oracle_min_delta(GroupSubset(11, {1, 5}), 2, tiny), budget_error);
    CHECK_THROWS_AS(oracle::oracle_atoms(GroupSubset(11, {1, 2, 3}), tiny), budget_error);
}

TEST_CASE("random corpus: oracles agree with the production paths") {
    std::mt19937_64 rng(0xC0FFEE5EEDULL);
    MinDeltaOptions o;
    o.want_witness = false;
    oracle::OracleLimits lim;
    lim.max_box = 4'000'000;
    int done = 0;
    while (done < 200) {
        i64 n = 3 + (i64)(rng() % 18);  // up to 20
        std::size_t size = 1 + rng() % 4;
        std::vector<i64> elems;
        for (std::size_t i = 0; i < size; ++i) elems.push_back((i64)(rng() % n));
        GroupSubset s(n, elems);
        if (oracle::oracle_box_size(s, 2) > lim.max_box) continue;
        ++done;

        AtomSet fast = enumerate_atoms(s);
        AtomSet slow = oracle::oracle_atoms(s, lim);
        CHECK(fast.rows == slow.rows);

        i64 prod = min_delta(s, o).min_delta;
        i64 d2 = oracle::oracle_min_delta(s, 2, lim);
        CHECK(prod == d2);
        // coarser boxes may only coarsen the gcd; by bound 2 it has settled
        i64 d1 = oracle::oracle_min_delta(s, 1, lim);
        if (d2 == 0)
            CHECK(d1 == 0);
        else
            CHECK(d1 % d2 == 0);
        if (oracle::oracle_box_size(s, 3) <= lim.max_box) CHECK(oracle::oracle_min_delta(s, 3, lim) == d2);
    }
}
