#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace zsf {

using i64 = std::int64_t;

/**
 * A subset of the cyclic group Z/nZ, stored as strictly increasing
 * residues in [0, n). The distinguished generator is 1, so residues
 * double as group elements.
 */
struct GroupSubset {
    i64 n = 1;
    std::vector<i64> elements;  // strictly increasing, each in [0, n)

    GroupSubset() = default;
    GroupSubset(i64 modulus, std::vector<i64> elems);

    bool empty() const { return elements.empty(); }
    std::size_t size() const { return elements.size(); }
    bool contains(i64 g) const;
    std::size_t index_of(i64 g) const;  // throws if absent

    GroupSubset with(i64 g) const;     // union with {g}
    GroupSubset without(i64 g) const;  // difference with {g}

    bool operator==(const GroupSubset&) const = default;
    auto operator<=>(const GroupSubset&) const = default;

    // "n:g1,g2,..."
    std::string text() const;
    static GroupSubset parse(const std::string& s);
};

// n / gcd(n, g); the identity has order 1.
i64 element_order(i64 n, i64 g);

// The unique a in [1, ord e] with a*e = h (mod n); rejects h outside <e>.
i64 sigma_rep(i64 n, i64 e, i64 h);

// |<G0>|; the empty set generates the trivial subgroup.
i64 generated_subgroup_order(const GroupSubset& g0);

// All units of Z/nZ in increasing order (just {0} for n = 1).
std::vector<i64> units_mod(i64 n);

// u * G0 for a unit u, re-sorted.
GroupSubset unit_image(const GroupSubset& g0, i64 u);

// Lexicographically least image of G0 under the unit action.
GroupSubset canonical_under_units(const GroupSubset& g0);

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

// Modular inverse of a mod m for gcd(a, m) = 1.
i64 inverse_mod(i64 a, i64 m);

}  // namespace zsf
