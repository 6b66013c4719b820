#pragma once

#include "zsf/bitvec.hpp"
#include "zsf/group.hpp"
#include "zsf/rational.hpp"

#include <map>
#include <string>

namespace zsf {

/**
 * A sequence (finite multiset) over a group subset: multiplicities over the
 * base elements. Zero multiplicities are never stored.
 */
struct Seq {
    GroupSubset base;
    std::map<i64, i64> mult;  // residue -> multiplicity >= 1

    Seq() = default;
    explicit Seq(GroupSubset b) : base(std::move(b)) {}
    Seq(GroupSubset b, std::map<i64, i64> m);

    i64 length() const;
    bool is_empty() const { return mult.empty(); }
    i64 multiplicity(i64 g) const;
    void add(i64 g, i64 count = 1);  // throws if g not in base or count < 0

    bool operator==(const Seq&) const = default;

    // "1^6·5"; the empty sequence prints as "(empty)"
    std::string text() const;
};

// Sum of the sequence in Z/nZ.
i64 seq_sum(const Seq& s);

// Exact cross number: sum of v_g / ord(g).
Rat cross_number(const Seq& s);

// sigma_e extended additively: sum of v_g * sigma_rep(e, g); requires supp(S) in <e>.
i64 sigma_seq(const Seq& s, i64 e);

// Set of sums of non-empty subsequences, as a bitset over [0, n).
BitVec subsequence_sums(const Seq& s);

bool is_zero_sum_free(const Seq& s);
bool is_minimal_zero_sum(const Seq& s);

}  // namespace zsf
