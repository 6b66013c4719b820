#pragma once

#include "zsf/atoms.hpp"

namespace zsf {
namespace oracle {

// Test-only provenance engines. Deliberately share no code with the
// production enumeration/factorization paths.

struct OracleLimits {
    i64 max_box = 50'000'000;  // cells of the bounded multiplicity box
};

// Scan of every multiplicity vector with v_g <= ord g, keeping the minimal
// zero-sum ones (checked by a plain subset-sum closure).
AtomSet oracle_atoms(const GroupSubset& g0, const OracleLimits& limits = {});

// gcd of all pairwise factorization-length differences over the zero-sum
// sequences with v_g <= bound_factor * ord g. Length sets come from a
// definition-direct bottom-up closure over the whole box.
i64 oracle_min_delta(const GroupSubset& g0, i64 bound_factor, const OracleLimits& limits = {});

// Number of box cells the min-delta oracle would touch (feasibility probe).
i64 oracle_box_size(const GroupSubset& g0, i64 bound_factor);

}  // namespace oracle
}  // namespace zsf
