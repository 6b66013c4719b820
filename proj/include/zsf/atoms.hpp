#pragma once

#include "zsf/errors.hpp"
#include "zsf/sequence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zsf {

struct EnumLimits {
    i64 max_nodes = 10'000'000;
    i64 max_atoms = 1'000'000;
};

/**
 * The complete list of minimal zero-sum sequences over a subset, as
 * multiplicity rows in support order, sorted lexicographically.
 */
struct AtomSet {
    GroupSubset base;
    std::vector<std::vector<i64>> rows;
    bool complete = true;

    std::size_t count() const { return rows.size(); }
    Seq seq_at(std::size_t i) const;
    Rat cross_number_at(std::size_t i) const;
    i64 length_at(std::size_t i) const;
    i64 sigma_row(std::size_t i, i64 e) const;  // sigma_e of the i-th atom
};

// Complete enumeration of the minimal zero-sum sequences over G0.
// For each choice of the least support element g (ascending), zero-sum-free
// sequences over elements >= g are extended depth-first with subsequence-sum
// pruning; g*S' is emitted whenever sigma(S') = -g.
AtomSet enumerate_atoms(const GroupSubset& g0, const EnumLimits& limits = {});

// K(G0): max cross number over the atoms; 0 for the empty subset.
Rat big_cross_number(const GroupSubset& g0, const EnumLimits& limits = {});

// k(G0): max cross number over all zero-sum-free sequences; 0 if none.
Rat little_cross_number(const GroupSubset& g0, const EnumLimits& limits = {});

// Nodes visited by the most recent enumeration on this thread (diagnostics).
i64 last_enumeration_nodes();

/**
 * One file per (format version, n, literal subset); structured JSON or a
 * compact binary encoding, chosen by extension ("json" or "bin"). Writes go
 * through a temp file and rename, so concurrent readers never see torn data.
 */
class AtomCache {
public:
    explicit AtomCache(std::string dir) : dir_(std::move(dir)) {}

    std::string path_for(const GroupSubset& g0, const std::string& ext = "json") const;
    std::optional<AtomSet> load(const GroupSubset& g0, const std::string& ext = "json") const;
    void store(const AtomSet& atoms, const std::string& ext = "json") const;

    // load if present, otherwise enumerate and store
    AtomSet get(const GroupSubset& g0, const EnumLimits& limits = {}, const std::string& ext = "json") const;

private:
    std::string dir_;
};

}  // namespace zsf
