#pragma once

#include "zsf/classify.hpp"
#include "zsf/closedform.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zsf {

struct SearchLimits {
    i64 max_n = 14;  // feasibility cap for exhaustive sweeps
    int workers = 1;
    EnumLimits enum_limits;
};

/**
 * Exhaustive minimal-distance data for one modulus: one entry per unit-orbit
 * representative of the 0-free subsets (0 never changes the minimal
 * distance; every witness admits the 0-augmented variant).
 */
struct OrbitDeltas {
    i64 n = 0;
    std::vector<GroupSubset> reps;  // canonical, ascending
    std::vector<i64> delta;        // min_delta per rep
    i64 nodes_used = 0;
};

OrbitDeltas compute_orbit_deltas(i64 n, const SearchLimits& lim = {});

struct DeltaStarTable {
    i64 n = 0;
    std::vector<i64> values;  // sorted ascending, all nonzero
    std::map<i64, std::vector<GroupSubset>> witnesses;
    i64 orbit_count = 0;
    i64 nodes_used = 0;
};

DeltaStarTable delta_star_bruteforce(i64 n, const SearchLimits& lim = {});
DeltaStarTable delta_star_from(const OrbitDeltas& od);

struct InverseHit {
    GroupSubset rep;
    bool zero_augmentable = true;  // adjoining 0 preserves the distance
};

std::vector<InverseHit> inverse_search(i64 n, i64 d, const SearchLimits& lim = {});
std::vector<InverseHit> inverse_search_from(const OrbitDeltas& od, i64 d);

struct AlphaBounds {
    i64 lower = 0;
    std::optional<i64> upper;  // absent in witness mode
};

// Exact mode: lower = max cardinality with min_delta = d, upper = max
// cardinality with a nonzero min_delta divisible by d; both count the
// adjoinable 0. Witness mode: lower from the maximal allowed family sets.
AlphaBounds alpha_bounds_exact(i64 n, i64 d, const SearchLimits& lim = {});
AlphaBounds alpha_bounds_exact_from(const OrbitDeltas& od, i64 d);
AlphaBounds alpha_bounds_witness(i64 n, i64 d);

// Smallest positive integer t with t^3 >= 2*n^2.
i64 two_gen_threshold(i64 n);

struct SuiteEntry {
    i64 n = 0;
    std::string check;
    bool pass = false;
    std::string counterexample;  // empty when passing
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteEntry> entries;
    bool all_pass() const;
};

// Named verification suites over a modulus range:
//   gerohami, min-is-one, two-element, witnesses, directweak, pgroups,
//   inverse-forward, inverse-exhaustive, classify-equivalences, transfer,
//   smallelements, lem-n68, oracle-mindelta
SuiteReport verify_suite(const std::string& name, i64 lo, i64 hi, const SearchLimits& lim = {});

std::vector<std::string> suite_names();

// Structure of sets with two generating elements and a large minimal
// distance: value in I(n), exactly two generators related through an M(n)
// triple. One entry per qualifying orbit.
SuiteReport check_two_generator_structure(i64 n, const SearchLimits& lim = {});

}  // namespace zsf
