#pragma once

#include "zsf/lengths.hpp"

namespace zsf {

// d divides min_delta(G0); half-factorial sets pass for every d.
bool is_d_chf(const GroupSubset& g0, i64 d, const EnumLimits& limits = {});

// min_delta(G0) equals d exactly; false for half-factorial sets.
bool is_truly_d_chf(const GroupSubset& g0, i64 d, const EnumLimits& limits = {});

/**
 * Membership spec for the counting sets: zero-sum sequences of the form S*F
 * with F over G0 and every multiplicity of F at least ell. S is supported
 * outside G0.
 */
struct OmegaSpec {
    GroupSubset g0;
    Seq s;        // over the same modulus, supp(s) disjoint from g0
    i64 ell = 0;  // >= 0

    OmegaSpec(GroupSubset g, Seq seq, i64 l);
};

bool omega_membership(const Seq& b, const OmegaSpec& spec);

}  // namespace zsf
