#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zsf/closedform.hpp"

using namespace zsf;

TEST_CASE("triple sets") {
    CHECK(m_triples(10) == std::vector<MTriple>{{1, 1, 5}, {1, 1, 10}, {1, 3, 5}, {1, 3, 10}, {3, 1, 5}, {3, 1, 10}});
    CHECK(m_triples(2).empty());
    for (i64 n = 3; n <= 60; ++n) CHECK(is_m_triple(n, {1, 1, n}));
}

TEST_CASE("value sets") {
    CHECK(i_set(10) == std::set<i64>{1, 2, 4, 8});
    CHECK(i_set(11) == std::set<i64>{1, 4, 9});
    CHECK(j_set(10) == std::set<i64>{1, 2, 4, 8});
    CHECK(j_set(4) == std::set<i64>{1, 2});
    SUBCASE("max I(n) = n-2 and I(n) inside J(n)") {
        for (i64 n = 3; n <= 60; ++n) {
            std::set<i64> in = i_set(n), jn = j_set(n);
            CHECK(*in.rbegin() == n - 2);
            for (i64 v : in) CHECK(jn.count(v) == 1);
        }
    }
}

TEST_CASE("witness sets") {
    SUBCASE("n=10, (1,1,5)") {
        WitnessSet w = witness_set(10, {1, 1, 5});
        CHECK(w.set == GroupSubset(10, {1, 5, 9}));
        CHECK(w.expected == 4);
    }
    SUBCASE("n=10, (1,1,10): d=n contributes the 0 element") {
        WitnessSet w = witness_set(10, {1, 1, 10});
        CHECK(w.set == GroupSubset(10, {0, 1, 9}));
        CHECK(w.expected == 8);
    }
    SUBCASE("n=11, (1,2,11)") {
        WitnessSet w = witness_set(11, {1, 2, 11});
        CHECK(w.set == GroupSubset(11, {0, 1, 5}));
        CHECK(w.expected == 4);
    }
    CHECK_THROWS_AS(witness_set(10, {2, 2, 5}), std::invalid_argument);
}

TEST_CASE("odd continued fractions") {
    CHECK(odd_continued_fraction(11, 5) == std::vector<i64>{2, 4, 1});
    CHECK(odd_continued_fraction(10, 3) == std::vector<i64>{3, 2, 1});
    CHECK(odd_continued_fraction(7, 1) == std::vector<i64>{7});
    CHECK(odd_continued_fraction(10, 9) == std::vector<i64>{1, 8, 1});
    CHECK_THROWS_AS(odd_continued_fraction(10, 4), std::invalid_argument);
    SUBCASE("always odd length and still the same rational") {
        for (i64 p = 2; p <= 40; ++p)
            for (i64 q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                auto cf = odd_continued_fraction(p, q);
                CHECK(cf.size() % 2 == 1);
                Rat back(cf.back());
                for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) back = Rat(*it) + 1 / back;
                CHECK(back == Rat(p, q));
            }
    }
}

TEST_CASE("two-element minimal distances") {
    CHECK(two_element_min_delta(11, 5).min_delta == 4);
    CHECK(two_element_min_delta(11, 5).method == DeltaMethod::continued_fraction);
    CHECK(two_element_min_delta(10, 3).min_delta == 2);
    CHECK(two_element_min_delta(10, 9).min_delta == 8);
    CHECK_THROWS_AS(two_element_min_delta(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(two_element_min_delta(10, 1), std::invalid_argument);

    SUBCASE("agrees with the kernel route for n up to 25") {
        for (i64 n = 3; n <= 25; ++n)
            for (i64 a = 2; a <= n - 1; ++a) {
                MinDeltaOptions o;
                o.method = MinDeltaOptions::Method::kernel;
                o.want_witness = false;
                CHECK(two_element_min_delta(n, a).min_delta == min_delta(GroupSubset(n, {1, a}), o).min_delta);
            }
    }
    SUBCASE("the general pair route handles non-generating pairs") {
        MinDeltaOptions o;
        o.method = MinDeltaOptions::Method::cf;
        CHECK(min_delta(GroupSubset(10, {2, 5}), o).min_delta == 0);
        CHECK(min_delta(GroupSubset(10, {2, 5}), o).method == DeltaMethod::reduction);
        CHECK(min_delta(GroupSubset(10, {0, 1, 9}), o).min_delta == 8);
        CHECK(min_delta(GroupSubset(12, {4, 8}), o).min_delta == 1);  // {e,-e} in C_3
    }
}

TEST_CASE("large-value closed form") {
    CHECK(delta_star_closedform(300, Rat(1, 5)) == std::set<i64>{73, 74, 98, 148, 149, 298});
    SUBCASE("n=2000 with threshold 1/10 contains 1998 and 999") {
        std::set<i64> v = delta_star_closedform(2000, Rat(1, 10));
        CHECK(v.count(1998) == 1);
        CHECK(v.count(999) == 1);
    }
    CHECK_THROWS_AS(delta_star_closedform(100, Rat(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(delta_star_closedform(3000, Rat(1, 20)), std::invalid_argument);
}

TEST_CASE("the ten-form list") {
    CHECK(directweak_list(30) == std::set<i64>{6, 8, 13, 14, 28});
    CHECK(directweak_list(251) == std::set<i64>{124, 249});
    CHECK(directweak_list(250) == delta_star_closedform(250, Rat(1, 5)));
}

TEST_CASE("inverse family prediction") {
    SUBCASE("d = n-2 gives the single antipodal family") {
        auto fams = inverse_family_predict(251, 249);
        REQUIRE(fams.size() == 1);
        CHECK(fams[0].case_tag == "inverse-i");
        CHECK(fams[0].required == std::vector<i64>{1, 250});
        CHECK(fams[0].allowed == std::vector<i64>{0, 1, 250});
        CHECK(fams[0].validity_met);
    }
    SUBCASE("d = (n-4)/2 gives three families when 4 does not divide n") {
        auto fams = inverse_family_predict(254, 125);
        REQUIRE(fams.size() == 3);
        for (auto& f : fams) CHECK(f.case_tag == "inverse-iv");
        CHECK(fams[2].allowed == std::vector<i64>{0, 2, 127, 252});
    }
    SUBCASE("d = (n-4)/2 with 4 | n omits the half-order variant") {
        auto fams = inverse_family_predict(256, 126);
        REQUIRE(fams.size() == 2);
    }
    SUBCASE("(n-6)/8 is not a covered form") {
        CHECK_THROWS_AS(inverse_family_predict(14, 1), std::invalid_argument);
        CHECK_THROWS_AS(inverse_family_predict(30, 3), std::invalid_argument);
    }
    SUBCASE("prime case appears alongside the generic family") {
        // d = 63 = (257-5)/4 matches both the (1,-4) family and, n being
        // prime, the (c1,c2) = (1,4) description with second element 64
        auto fams = inverse_family_predict(257, 63);
        bool has_prime = false, has_viii = false;
        for (auto& f : fams) {
            has_prime |= f.case_tag == "prime" && f.allowed == std::vector<i64>{0, 1, 64};
            has_viii |= f.case_tag == "inverse-viii";
        }
        CHECK(has_prime);
        CHECK(has_viii);
    }
    SUBCASE("q-families carry their parameter and validity condition") {
        auto fams = inverse_family_predict(22, 2);  // q = 7 divides n-1 = 21
        REQUIRE(fams.size() == 1);
        CHECK(fams[0].case_tag == "q-family-A");
        CHECK(fams[0].q == 7);
        CHECK_FALSE(fams[0].validity_met);  // 8*343 > 22
    }
}

TEST_CASE("family instantiation") {
    auto fams = inverse_family_predict(10, 8);
    REQUIRE(!fams.empty());
    auto sets = family_instances(fams[0], 10, 1);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == GroupSubset(10, {0, 1, 9}));
    CHECK(sets[1] == GroupSubset(10, {1, 9}));
    auto all = family_instances_all_generators(fams[0], 10);
    CHECK(all == sets);  // one unit orbit
}
