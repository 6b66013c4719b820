#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zsf/group.hpp"

using namespace zsf;

TEST_CASE("element orders") {
    CHECK(element_order(10, 4) == 5);
    CHECK(element_order(10, 0) == 1);
    CHECK(element_order(11, 5) == 11);
    for (i64 n : {2, 3, 6, 12, 30})
        for (i64 g = 0; g < n; ++g) CHECK(n % element_order(n, g) == 0);
}

TEST_CASE("sigma representatives") {
    CHECK(sigma_rep(10, 1, 9) == 9);
    CHECK(sigma_rep(10, 1, 0) == 10);
    SUBCASE("direct scan confirms the representative") {
        i64 found = -1;
        for (i64 a = 1; a <= 10; ++a)
            if (a * 3 % 10 == 9) {
                found = a;
                break;
            }
        CHECK(found == 3);
        CHECK(sigma_rep(10, 3, 9) == 3);
    }
    CHECK_THROWS_AS(sigma_rep(10, 2, 5), std::invalid_argument);
    SUBCASE("representative is always in [1, ord e] and hits h") {
        for (i64 n = 1; n <= 20; ++n)
            for (i64 e = 0; e < n; ++e) {
                i64 t = n / element_order(n, e);
                for (i64 h = 0; h < n; h += t) {
                    i64 a = sigma_rep(n, e, h);
                    CHECK(a >= 1);
                    CHECK(a <= element_order(n, e));
                    CHECK(a * e % n == h);
                }
            }
    }
}

TEST_CASE("generated subgroup order") {
    CHECK(generated_subgroup_order(GroupSubset(10, {2, 5})) == 10);
    CHECK(generated_subgroup_order(GroupSubset(10, {4, 6})) == 5);
    CHECK(generated_subgroup_order(GroupSubset(10, {5})) == 2);
    CHECK(generated_subgroup_order(GroupSubset(10, {})) == 1);
}

TEST_CASE("canonical form under the unit action") {
    CHECK(canonical_under_units(GroupSubset(10, {3, 7})) == GroupSubset(10, {1, 9}));
    CHECK(canonical_under_units(GroupSubset(10, {1, 9})) == GroupSubset(10, {1, 9}));
    CHECK(canonical_under_units(GroupSubset(10, {})) == GroupSubset(10, {}));

    SUBCASE("constant on unit orbits and idempotent") {
        for (i64 n : {6, 9, 10, 12}) {
            for (std::size_t mask = 0; mask < (std::size_t(1) << n); mask += 7) {
                std::vector<i64> e;
                for (i64 g = 0; g < n; ++g)
                    if (mask & (std::size_t(1) << g)) e.push_back(g);
                GroupSubset s(n, e);
                GroupSubset c = canonical_under_units(s);
                CHECK(canonical_under_units(c) == c);
                for (i64 u : units_mod(n)) CHECK(canonical_under_units(unit_image(s, u)) == c);
            }
        }
    }
}

TEST_CASE("subset text round trip") {
    GroupSubset s(10, {1, 9});
    CHECK(s.text() == "10:1,9");
    CHECK(GroupSubset::parse("10:1,9") == s);
    CHECK(GroupSubset::parse("10:-1,1") == s);
    CHECK(GroupSubset::parse("7:") == GroupSubset(7, {}));
}
