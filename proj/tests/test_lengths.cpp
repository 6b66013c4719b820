#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zsf/closedform.hpp"
#include "zsf/lengths.hpp"

using namespace zsf;

namespace {

std::vector<GroupSubset> all_subsets(i64 n, bool include_zero = true) {
    std::vector<GroupSubset> out;
    i64 first = include_zero ? 0 : 1;
    std::vector<i64> universe;
    for (i64 g = first; g < n; ++g) universe.push_back(g);
    for (std::size_t mask = 0; mask < (std::size_t(1) << universe.size()); ++mask) {
        std::vector<i64> e;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask & (std::size_t(1) << i)) e.push_back(universe[i]);
        out.emplace_back(n, e);
    }
    return out;
}

i64 delta_value(const GroupSubset& s, MinDeltaOptions::Method m = MinDeltaOptions::Method::automatic) {
    MinDeltaOptions o;
    o.method = m;
    o.want_witness = false;
    return min_delta(s, o).min_delta;
}

}  // namespace

TEST_CASE("factor lengths") {
    GroupSubset s(10, {1, 9});
    AtomSet atoms = enumerate_atoms(s);
    SUBCASE("1^10 9^10 factors in lengths 2 and 10") {
        Seq b(s);
        b.add(1, 10);
        b.add(9, 10);
        CHECK(factor_lengths(b, atoms) == LengthSet{2, 10});
    }
    SUBCASE("single atoms have length set {1}") {
        for (std::size_t i = 0; i < atoms.count(); ++i)
            CHECK(factor_lengths(atoms.seq_at(i), atoms) == LengthSet{1});
    }
    SUBCASE("empty sequence has length set {0}") { CHECK(factor_lengths(Seq(s), atoms) == LengthSet{0}); }
    SUBCASE("non-zero-sum input is rejected") {
        Seq b(s);
        b.add(1, 3);
        CHECK_THROWS_AS(factor_lengths(b, atoms), std::invalid_argument);
    }
}

TEST_CASE("delta of a length set") {
    CHECK(delta_of({2, 10}) == std::set<i64>{8});
    CHECK(delta_of({3}) == std::set<i64>{});
    CHECK(delta_of({1, 3, 7}) == std::set<i64>{2, 4});
    CHECK(delta_of({}) == std::set<i64>{});
}

TEST_CASE("min delta worked examples") {
    CHECK(delta_value(GroupSubset(10, {1, 9})) == 8);
    CHECK(delta_value(GroupSubset(11, {1, 5})) == 4);
    CHECK(delta_value(GroupSubset(10, {2, 5})) == 0);
    for (i64 n : {4, 7, 12})
        for (i64 g = 0; g < n; ++g) CHECK(delta_value(GroupSubset(n, {g})) == 0);
    CHECK(delta_value(GroupSubset(10, {1, 5, 9})) == 4);
}

TEST_CASE("witness accompanies every nonzero result") {
    for (i64 n = 3; n <= 9; ++n)
        for (const GroupSubset& s : all_subsets(n)) {
            DeltaResult r = min_delta(s);
            CHECK((r.min_delta == 0) == !r.witness.has_value());
        }
}

TEST_CASE("kernel and generator routes agree whenever both apply") {
    for (i64 n = 3; n <= 12; ++n)
        for (const GroupSubset& s : all_subsets(n)) {
            i64 m = generated_subgroup_order(s);
            bool has_gen = false;
            for (i64 g : s.elements) has_gen |= element_order(n, g) == m;
            if (!has_gen) continue;
            CHECK(delta_value(s, MinDeltaOptions::Method::kernel) ==
                  delta_value(s, MinDeltaOptions::Method::geroldinger));
        }
}

TEST_CASE("half-factorial iff every atom has cross number one") {
    for (i64 n = 3; n <= 12; ++n)
        for (const GroupSubset& s : all_subsets(n)) {
            AtomSet atoms = enumerate_atoms(s);
            bool all_one = true;
            for (std::size_t i = 0; i < atoms.count(); ++i) all_one &= atoms.cross_number_at(i) == 1;
            MinDeltaOptions o;
            o.want_witness = false;
            CHECK((min_delta_with_atoms(s, atoms, o).min_delta == 0) == all_one);
        }
}

TEST_CASE("adjoining zero never changes the minimal distance") {
    for (i64 n = 3; n <= 10; ++n)
        for (const GroupSubset& s : all_subsets(n, false)) CHECK(delta_value(s.with(0)) == delta_value(s));
}

TEST_CASE("minimal distance is unit invariant") {
    for (i64 n = 3; n <= 10; ++n)
        for (const GroupSubset& s : all_subsets(n, false)) {
            i64 d = delta_value(s);
            for (i64 u : units_mod(n)) CHECK(delta_value(unit_image(s, u)) == d);
        }
}

TEST_CASE("divisor-closed monotonicity") {
    for (i64 n : {6, 8, 10})
        for (const GroupSubset& s : all_subsets(n, false)) {
            i64 d0 = delta_value(s);
            for (i64 g : s.elements) {
                i64 d1 = delta_value(s.without(g));
                if (d1 > 0) CHECK(d1 % d0 == 0);
            }
        }
}

TEST_CASE("exploratory delta sets are subsets of realized gaps") {
    GroupSubset s(10, {1, 9});
    DeltaExploration e = delta_exploration(s, 3);
    CHECK_FALSE(e.complete);
    CHECK(e.distances.count(8) == 1);
    for (i64 gap : e.distances) CHECK(gap % 8 == 0);
}
