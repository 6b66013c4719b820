#pragma once

#include "zsf/atoms.hpp"
#include "zsf/kernel.hpp"

#include <optional>
#include <set>
#include <string>

namespace zsf {

using LengthSet = std::vector<i64>;  // sorted ascending, distinct

// Exact set of factorization lengths of a zero-sum sequence B over the given
// atoms. Depth-first over atoms in non-decreasing index order, memoized on
// (residual multiplicity vector, least usable atom index). Rejects non-zero-sum
// input; the empty sequence yields {0}.
LengthSet factor_lengths(const Seq& b, const AtomSet& atoms);

// Successive distances of a length set.
std::set<i64> delta_of(const LengthSet& lengths);

enum class DeltaMethod { kernel, geroldinger, continued_fraction, reduction };

std::string method_name(DeltaMethod m);

struct DeltaWitness {
    std::string kind;                  // "kernel_vector" | "atom" | "cf"
    std::vector<std::string> kernel_vector;  // entry per atom, as decimal strings
    std::optional<Seq> atom;           // atom with sigma_e(A)/m - 1 != 0
    i64 cf_c1 = 0, cf_c2 = 0;          // two-element decomposition
};

struct DeltaResult {
    i64 min_delta = 0;  // 0 means half-factorial
    DeltaMethod method = DeltaMethod::kernel;
    std::optional<DeltaWitness> witness;  // present iff min_delta > 0
};

struct MinDeltaOptions {
    enum class Method { automatic, kernel, geroldinger, cf } method = Method::automatic;
    EnumLimits limits;
    // Witness construction costs a second elimination pass on the kernel
    // route; batch sweeps that only need the value turn it off.
    bool want_witness = true;
};

// min Delta(G0) = gcd Delta(G0), via the kernel of the atom matrix (the gcd of
// entry-sums over a kernel basis), the generator gcd formula inside <G0>, or
// the two-element continued-fraction route. All routes agree.
DeltaResult min_delta(const GroupSubset& g0, const MinDeltaOptions& opts = {});

// Same, reusing an already-enumerated atom set (must belong to g0).
DeltaResult min_delta_with_atoms(const GroupSubset& g0, const AtomSet& atoms,
                                 const MinDeltaOptions& opts = {});

// Distances observed among products of at most max_atoms_per_product atoms.
// Exploratory only: a subset of Delta(G0), not claimed complete.
struct DeltaExploration {
    std::set<i64> distances;
    bool complete = false;  // never set; the enumeration is bounded by design
};

DeltaExploration delta_exploration(const GroupSubset& g0, int max_atoms_per_product,
                                   const EnumLimits& limits = {});

}  // namespace zsf
