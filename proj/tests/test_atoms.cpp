#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zsf/atoms.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

using namespace zsf;

namespace {

std::vector<std::vector<i64>> rows_of(const GroupSubset& s) { return enumerate_atoms(s).rows; }

}  // namespace

TEST_CASE("atom enumeration matches the worked examples") {
    SUBCASE("{1,9} mod 10") {
        AtomSet a = enumerate_atoms(GroupSubset(10, {1, 9}));
        REQUIRE(a.count() == 3);
        // rows over support (1, 9), sorted lexicographically
        CHECK(a.rows == std::vector<std::vector<i64>>{{0, 10}, {1, 1}, {10, 0}});
    }
    SUBCASE("single element") {
        for (i64 n : {2, 5, 9, 12})
            for (i64 g = 0; g < n; ++g) {
                AtomSet a = enumerate_atoms(GroupSubset(n, {g}));
                REQUIRE(a.count() == 1);
                CHECK(a.rows[0] == std::vector<i64>{element_order(n, g)});
            }
    }
    SUBCASE("{1,5} mod 11") {
        AtomSet a = enumerate_atoms(GroupSubset(11, {1, 5}));
        REQUIRE(a.count() == 4);
        CHECK(a.rows == std::vector<std::vector<i64>>{{0, 11}, {1, 2}, {6, 1}, {11, 0}});
    }
}

TEST_CASE("every enumerated atom is a minimal zero-sum sequence") {
    for (i64 n = 1; n <= 9; ++n)
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            std::vector<i64> elems;
            for (i64 g = 0; g < n; ++g)
                if (mask & (std::size_t(1) << g)) elems.push_back(g);
            GroupSubset s(n, elems);
            AtomSet a = enumerate_atoms(s);
            for (std::size_t i = 0; i < a.count(); ++i) {
                CHECK(is_minimal_zero_sum(a.seq_at(i)));
                CHECK(a.length_at(i) <= n);  // Davenport bound for C_n
            }
            // no duplicates
            for (std::size_t i = 1; i < a.count(); ++i) CHECK(a.rows[i - 1] < a.rows[i]);
            // g^(ord g) present for each g
            for (std::size_t j = 0; j < s.size(); ++j) {
                std::vector<i64> pure(s.size(), 0);
                pure[j] = element_order(n, s.elements[j]);
                CHECK(std::binary_search(a.rows.begin(), a.rows.end(), pure));
            }
        }
}

TEST_CASE("atoms of {e, -e} are the two pure powers and e·(-e)") {
    for (i64 n = 3; n <= 100; ++n) {
        AtomSet a = enumerate_atoms(GroupSubset(n, {1, n - 1}));
        REQUIRE(a.count() == 3);
        CHECK(a.rows == std::vector<std::vector<i64>>{{0, n}, {1, 1}, {n, 0}});
    }
}

TEST_CASE("atom counts are unit invariant") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        i64 n = 4 + (i64)(rng() % 9);
        std::vector<i64> elems;
        for (i64 g = 0; g < n; ++g)
            if (rng() % 3 == 0) elems.push_back(g);
        GroupSubset s(n, elems);
        std::size_t count = enumerate_atoms(s).count();
        for (i64 u : units_mod(n)) CHECK(enumerate_atoms(unit_image(s, u)).count() == count);
    }
}

TEST_CASE("cross number invariants") {
    CHECK(big_cross_number(GroupSubset(5, {1})) == Rat(1));
    CHECK(big_cross_number(GroupSubset(10, {1, 9})) == Rat(1));
    CHECK(big_cross_number(GroupSubset(11, {1, 5})) == Rat(1));
    CHECK(little_cross_number(GroupSubset(5, {1})) == Rat(4, 5));
    CHECK(little_cross_number(GroupSubset(4, {1, 2, 3})) == Rat(3, 4));
    CHECK(little_cross_number(GroupSubset(7, {})) == Rat(0));
    CHECK(big_cross_number(GroupSubset(7, {})) == Rat(0));

    SUBCASE("k(G0) <= log n and K(G0) <= 1/q + log n") {
        for (i64 n = 2; n <= 10; ++n) {
            i64 q = 2;
            while (n % q) ++q;
            for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
                std::vector<i64> elems;
                for (i64 g = 0; g < n; ++g)
                    if (mask & (std::size_t(1) << g)) elems.push_back(g);
                GroupSubset s(n, elems);
                double little = little_cross_number(s).convert_to<double>();
                double big = big_cross_number(s).convert_to<double>();
                CHECK(little <= std::log((double)n) + 1e-9);
                CHECK(big <= 1.0 / (double)q + std::log((double)n) + 1e-9);
            }
        }
    }
}

TEST_CASE("budgets are enforced, never silently") {
    EnumLimits tiny;
    tiny.max_nodes = 10;
    CHECK_THROWS_AS(enumerate_atoms(GroupSubset(11, {1, 5}), tiny), budget_error);
    EnumLimits one_atom;
    one_atom.max_atoms = 1;
    CHECK_THROWS_AS(enumerate_atoms(GroupSubset(11, {1, 5}), one_atom), budget_error);
}

TEST_CASE("cache round trip in both encodings") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("zsf-cache-test-" + std::to_string(::getpid()));
    AtomCache cache(dir.string());
    GroupSubset s(11, {1, 5});
    AtomSet a = enumerate_atoms(s);
    for (std::string ext : {"json", "bin"}) {
        CHECK_FALSE(cache.load(s, ext).has_value());
        cache.store(a, ext);
        auto back = cache.load(s, ext);
        REQUIRE(back.has_value());
        CHECK(back->rows == a.rows);
        CHECK(back->base == s);
        CHECK(back->complete);
        CHECK(cache.get(s, {}, ext).rows == a.rows);
    }
    fs::remove_all(dir);
}
