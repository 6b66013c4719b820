#include "zsf/chf.hpp"

namespace zsf {

bool is_d_chf(const GroupSubset& g0, i64 d, const EnumLimits& limits) {
    if (d < 1) throw std::invalid_argument("is_d_chf: d must be positive");
    MinDeltaOptions opts;
    opts.limits = limits;
    opts.want_witness = false;
    return min_delta(g0, opts).min_delta % d == 0;
}

bool is_truly_d_chf(const GroupSubset& g0, i64 d, const EnumLimits& limits) {
    if (d < 1) throw std::invalid_argument("is_truly_d_chf: d must be positive");
    MinDeltaOptions opts;
    opts.limits = limits;
    opts.want_witness = false;
    return min_delta(g0, opts).min_delta == d;
}

OmegaSpec::OmegaSpec(GroupSubset g, Seq seq, i64 l) : g0(std::move(g)), s(std::move(seq)), ell(l) {
    if (s.base.n != g0.n) throw std::invalid_argument("OmegaSpec: modulus mismatch");
    if (ell < 0) throw std::invalid_argument("OmegaSpec: ell must be non-negative");
    for (auto& [g_, v] : s.mult)
        if (g0.contains(g_)) throw std::invalid_argument("OmegaSpec: S must avoid G0");
}

bool omega_membership(const Seq& b, const OmegaSpec& spec) {
    if (b.base.n != spec.g0.n) throw std::invalid_argument("omega_membership: modulus mismatch");
    if (seq_sum(b) != 0) return false;
    // B = S * F exactly, F over G0 with every multiplicity >= ell
    for (auto& [g, v] : b.mult) {
        i64 sv = spec.s.multiplicity(g);
        if (spec.g0.contains(g)) {
            if (v - sv < spec.ell) return false;  // sv = 0 here by the spec invariant
        } else if (v != sv) {
            return false;
        }
    }
    for (auto& [g, v] : spec.s.mult)
        if (b.multiplicity(g) != v) return false;
    for (i64 g : spec.g0.elements)
        if (b.multiplicity(g) < spec.ell) return false;
    return true;
}

}  // namespace zsf
