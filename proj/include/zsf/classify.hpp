#pragma once

#include "zsf/atoms.hpp"

#include <optional>

namespace zsf {

/**
 * Half-factoriality report. hf implies whf_arithmetic implies lcn; for
 * cyclic groups whf_arithmetic and whf_structural coincide (tested, not
 * assumed: both are computed independently).
 */
struct HFReport {
    bool hf = false;              // every atom has cross number exactly 1
    bool whf_arithmetic = false;  // every atom has integral cross number
    bool whf_structural = false;  // G0 lies in the divisor multiples of some generator
    bool lcn = false;             // every atom has cross number >= 1
    std::optional<Seq> witness_atom;  // violates the strongest certificate available
};

HFReport classify_set(const GroupSubset& g0, const EnumLimits& limits = {});

// First 2-subset (lexicographic) that is not half-factorial, if any.
std::optional<GroupSubset> find_non_hf_pair(const GroupSubset& g0, const EnumLimits& limits = {});

// Smallest k >= 1 with k*g in <G0 minus g>; requires g in G0.
i64 n_index(const GroupSubset& g0, i64 g);

// {n_index(g) * g : g in G0}; preserves the system of sets of lengths.
GroupSubset reduce_higher_order(const GroupSubset& g0);

// A generating superset reached by adjoining p-th "roots" of elements of
// maximal p-adic order valuation, smallest prime and smallest residue first;
// preserves the minimal distance.
GroupSubset extend_to_generating(const GroupSubset& g0);

}  // namespace zsf
