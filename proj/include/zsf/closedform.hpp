#pragma once

#include "zsf/lengths.hpp"

#include <set>
#include <string>
#include <vector>

namespace zsf {

/**
 * Triple (c1, c2, d) with c1, c2 in [1, n], d | n, and both
 *   (n - c1 - c2) / (c1 c2)   and   (n - c1 - c2) d / (c2 n)
 * positive integers.
 */
struct MTriple {
    i64 c1 = 1, c2 = 1, d = 1;

    i64 first_value(i64 n) const { return (n - c1 - c2) / (c1 * c2); }
    i64 second_value(i64 n) const { return (n - c1 - c2) * d / (c2 * n); }
    i64 expected(i64 n) const { return std::gcd(first_value(n), second_value(n)); }

    bool operator==(const MTriple&) const = default;
    auto operator<=>(const MTriple&) const = default;
};

std::vector<MTriple> m_triples(i64 n);
bool is_m_triple(i64 n, const MTriple& t);

// gcd{first, second} over the triples of M(n)
std::set<i64> i_set(i64 n);

// all divisors of any integral positive (n-c1-c2)/(c1 c2)
std::set<i64> j_set(i64 n);

// The three-element witness {1, (n-c1)/c2, d} and its predicted minimal
// distance gcd{(n-c1-c2)/(c1 c2), (n-c1-c2) d/(c2 n)}.
struct WitnessSet {
    GroupSubset set;
    i64 expected = 0;
};
WitnessSet witness_set(i64 n, const MTriple& t);

// Continued-fraction quotients of p/q adjusted to odd length by rewriting
// [..., a] as [..., a-1, 1]; requires p > q >= 1 and gcd(p, q) = 1.
std::vector<i64> odd_continued_fraction(i64 p, i64 q);

// min_delta({1, a} mod n). Non-coprime a reduces through the higher-order
// transfer to a coprime instance; coprime instances with an odd continued
// fraction [b, d, c] of length three return d, everything else falls back to
// the kernel route. Rejects a in {0, 1}.
DeltaResult two_element_min_delta(i64 n, i64 a, const EnumLimits& limits = {});

// General two-element route used by the cf method of min_delta: accepts any
// subset with exactly two nonzero elements (0 may ride along).
DeltaResult two_element_route(const GroupSubset& g0, const EnumLimits& limits = {});

// Union over m | n of i_set(m), cut to values >= c0*n. Only proven to equal
// the full set of large minimal distances when n >= 2/c0^3; smaller n are
// rejected. c0 is an exact rational in [1/10, 1/2].
std::set<i64> delta_star_closedform(i64 n, const Rat& c0);

// Integral members of the ten literal closed forms
//   n-2, (n-2)/2, (n-3)/2, (n-4)/2, (n-4)/3,
//   (n-6)/3, (n-4)/4, (n-5)/4, (n-6)/4, (n-8)/4
// that are >= n/5. Computed from the formulas directly, never via i_set.
std::set<i64> directweak_list(i64 n);

/**
 * A predicted family of sets with a given minimal distance: required and
 * allowed elements as coefficients of a generator f. Exhaustiveness of the
 * prediction holds under `validity`; the forward direction (each set between
 * required and allowed attains the distance) carries no size condition.
 */
struct InverseFamily {
    std::string case_tag;  // "inverse-i".."inverse-x", "q-family-A/B/C", "prime"
    i64 q = 0;             // parameter of the q-families, 0 otherwise
    i64 c1 = 0, c2 = 0;    // parameters of the prime case, 0 otherwise
    std::vector<i64> required;  // coefficients of f, reduced mod n
    std::vector<i64> allowed;   // superset of required
    std::string validity;
    bool validity_met = false;
};

// Families for minimal distance d in Z/nZ; rejects d outside the covered
// closed forms with a message listing them.
std::vector<InverseFamily> inverse_family_predict(i64 n, i64 d);

// {k*f : k in coeffs} as a subset of Z/nZ.
GroupSubset instantiate_coeffs(i64 n, const std::vector<i64>& coeffs, i64 f);

// Every set S with required <= S <= allowed, instantiated at f.
std::vector<GroupSubset> family_instances(const InverseFamily& fam, i64 n, i64 f);

// Instantiations at all generators, deduplicated by unit orbit.
std::vector<GroupSubset> family_instances_all_generators(const InverseFamily& fam, i64 n);

std::vector<i64> divisors_of(i64 n);

}  // namespace zsf
