#include "zsf/classify.hpp"

#include "zsf/closedform.hpp"

#include <algorithm>

namespace zsf {

HFReport classify_set(const GroupSubset& g0, const EnumLimits& limits) {
    AtomSet atoms = enumerate_atoms(g0, limits);
    HFReport rep;
    rep.hf = rep.whf_arithmetic = rep.lcn = true;
    std::optional<std::size_t> bad_hf, bad_whf, bad_lcn;
    for (std::size_t i = 0; i < atoms.count(); ++i) {
        Rat k = atoms.cross_number_at(i);
        if (k != 1 && !bad_hf) bad_hf = i;
        if (!is_integer(k) && !bad_whf) bad_whf = i;
        if (k < 1 && !bad_lcn) bad_lcn = i;
    }
    rep.hf = !bad_hf;
    rep.whf_arithmetic = !bad_whf;
    rep.lcn = !bad_lcn;

    const i64 n = g0.n;
    rep.whf_structural = false;
    for (i64 e : units_mod(n)) {
        bool ok = true;
        for (i64 g : g0.elements)
            if (n % sigma_rep(n, n == 1 ? 0 : e, g) != 0) {
                ok = false;
                break;
            }
        if (ok) {
            rep.whf_structural = true;
            break;
        }
    }

    if (bad_lcn)
        rep.witness_atom = atoms.seq_at(*bad_lcn);
    else if (bad_whf)
        rep.witness_atom = atoms.seq_at(*bad_whf);
    else if (bad_hf)
        rep.witness_atom = atoms.seq_at(*bad_hf);
    return rep;
}

std::optional<GroupSubset> find_non_hf_pair(const GroupSubset& g0, const EnumLimits& limits) {
    // pairs containing 0 are always half-factorial
    for (std::size_t i = 0; i < g0.size(); ++i) {
        if (g0.elements[i] == 0) continue;
        for (std::size_t j = i + 1; j < g0.size(); ++j) {
            GroupSubset pair(g0.n, {g0.elements[i], g0.elements[j]});
            if (two_element_route(pair, limits).min_delta > 0) return pair;
        }
    }
    return std::nullopt;
}

i64 n_index(const GroupSubset& g0, i64 g) {
    if (!g0.contains(g)) throw std::invalid_argument("n_index: element not in subset");
    i64 t = g0.n;
    for (i64 h : g0.elements)
        if (h != g) t = std::gcd(t, h);
    // <G0 minus g> = <t>; smallest k with t | k*g
    return t / std::gcd(t, g == 0 ? t : g);
}

GroupSubset reduce_higher_order(const GroupSubset& g0) {
    std::vector<i64> elems;
    elems.reserve(g0.size());
    for (i64 g : g0.elements) elems.push_back(n_index(g0, g) % g0.n * (g % g0.n) % g0.n);
    return GroupSubset(g0.n, std::move(elems));
}

namespace {

i64 padic_valuation(i64 x, i64 p) {
    i64 v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

i64 smallest_prime_factor(i64 x) {
    for (i64 p = 2; p * p <= x; ++p)
        if (x % p == 0) return p;
    return x;
}

}  // namespace

GroupSubset extend_to_generating(const GroupSubset& g0) {
    const i64 n = g0.n;
    GroupSubset cur = g0;
    while (generated_subgroup_order(cur) != n) {
        i64 p = smallest_prime_factor(n / generated_subgroup_order(cur));
        // element of maximal p-adic order valuation; the identity stands in
        // for the empty set (valuation 0, the only choice available)
        i64 g = 0, best_v = -1;
        for (i64 x : cur.elements) {
            i64 v = padic_valuation(element_order(n, x), p);
            if (v > best_v) {
                best_v = v;
                g = x;
            }
        }
        if (best_v < 0) g = 0;
        const i64 want_ord = p * element_order(n, g);
        i64 h = -1;
        for (i64 j = 0; j < p; ++j) {
            i64 cand = (g / p) + j * (n / p);
            if (cand != 0 && cand * p % n == g && element_order(n, cand) == want_ord) {
                h = cand;
                break;  // candidates are increasing, first hit is smallest
            }
        }
        if (h < 0) throw std::logic_error("extend_to_generating: no admissible adjoint element");
        cur = cur.with(h);
    }
    return cur;
}

}  // namespace zsf
