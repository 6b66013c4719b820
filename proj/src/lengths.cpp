#include "zsf/lengths.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace zsf {

namespace {

using Bits = std::vector<std::uint64_t>;  // dynamic length bitmask

void bit_set(Bits& b, i64 i) {
    std::size_t w = (std::size_t)(i >> 6);
    if (b.size() <= w) b.resize(w + 1, 0);
    b[w] |= std::uint64_t(1) << (i & 63);
}

// dst |= (src << 1)
void or_shift1(Bits& dst, const Bits& src) {
    if (src.empty()) return;
    if (dst.size() < src.size() + 1) dst.resize(src.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] |= (src[i] << 1) | carry;
        carry = src[i] >> 63;
    }
    dst[src.size()] |= carry;
}

std::vector<i64> bits_to_list(const Bits& b) {
    std::vector<i64> out;
    for (std::size_t w = 0; w < b.size(); ++w) {
        std::uint64_t x = b[w];
        while (x) {
            int t = __builtin_ctzll(x);
            out.push_back((i64)(w * 64 + (std::size_t)t));
            x &= x - 1;
        }
    }
    return out;
}

// Factorization-length engine: one memo shared across queries.
class LengthEngine {
public:
    explicit LengthEngine(const AtomSet& atoms) : atoms_(atoms) {}

    Bits lengths(const std::vector<i64>& residual) { return rec(residual, 0); }

private:
    const AtomSet& atoms_;
    std::map<std::pair<std::vector<i64>, std::size_t>, Bits> memo_;

    Bits rec(const std::vector<i64>& residual, std::size_t min_atom) {
        if (std::all_of(residual.begin(), residual.end(), [](i64 x) { return x == 0; })) {
            Bits b;
            bit_set(b, 0);
            return b;
        }
        auto key = std::make_pair(residual, min_atom);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Bits acc;
        std::vector<i64> next(residual.size());
        for (std::size_t j = min_atom; j < atoms_.count(); ++j) {
            const auto& row = atoms_.rows[j];
            bool fits = true;
            for (std::size_t t = 0; t < row.size(); ++t) {
                next[t] = residual[t] - row[t];
                if (next[t] < 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            or_shift1(acc, rec(next, j));
        }
        memo_.emplace(std::move(key), acc);
        return acc;
    }
};

std::vector<i64> residual_of(const Seq& b, const AtomSet& atoms) {
    std::vector<i64> r(atoms.base.size(), 0);
    for (auto& [g, v] : b.mult) r[atoms.base.index_of(g)] = v;
    return r;
}

}  // namespace

LengthSet factor_lengths(const Seq& b, const AtomSet& atoms) {
    if (b.base.n != atoms.base.n) throw std::invalid_argument("factor_lengths: modulus mismatch");
    for (auto& [g, v] : b.mult)
        if (!atoms.base.contains(g)) throw std::invalid_argument("factor_lengths: support outside atom base");
    if (seq_sum(Seq(atoms.base, b.mult)) != 0) throw std::invalid_argument("factor_lengths: input is not zero-sum");
    LengthEngine engine(atoms);
    return bits_to_list(engine.lengths(residual_of(b, atoms)));
}

std::set<i64> delta_of(const LengthSet& lengths) {
    std::set<i64> gaps;
    for (std::size_t i = 1; i < lengths.size(); ++i) gaps.insert(lengths[i] - lengths[i - 1]);
    return gaps;
}

std::string method_name(DeltaMethod m) {
    switch (m) {
        case DeltaMethod::kernel: return "kernel";
        case DeltaMethod::geroldinger: return "geroldinger";
        case DeltaMethod::continued_fraction: return "continued_fraction";
        case DeltaMethod::reduction: return "reduction";
    }
    return "?";
}

namespace {

IntMat atom_columns(const AtomSet& atoms) {
    IntMat cols;
    cols.reserve(atoms.count());
    for (auto& row : atoms.rows) {
        IntVec c;
        c.reserve(row.size());
        for (i64 m : row) c.emplace_back(m);
        cols.push_back(std::move(c));
    }
    return cols;
}

// Nonzero-order element of G0 generating <G0>, if any (smallest residue).
std::optional<i64> subgroup_generator_in(const GroupSubset& g0) {
    i64 m = generated_subgroup_order(g0);
    for (i64 g : g0.elements)
        if (element_order(g0.n, g) == m) return g;
    return std::nullopt;
}

DeltaResult kernel_route(const AtomSet& atoms, bool want_witness) {
    IntMat cols = atom_columns(atoms);
    BigInt g = kernel_sum_gcd(cols);
    DeltaResult res;
    res.method = DeltaMethod::kernel;
    res.min_delta = g.convert_to<i64>();
    if (res.min_delta > 0 && want_witness) {
        DeltaWitness w;
        w.kind = "kernel_vector";
        if (auto z = kernel_sum_witness(cols)) {
            w.kernel_vector.reserve(z->size());
            for (auto& x : *z) w.kernel_vector.push_back(x.str());
        }
        res.witness = std::move(w);
    }
    return res;
}

DeltaResult geroldinger_route(const GroupSubset& g0, const AtomSet& atoms, i64 e, bool want_witness) {
    const i64 m = element_order(g0.n, e);
    DeltaResult res;
    res.method = DeltaMethod::geroldinger;
    i64 g = 0;
    std::optional<std::size_t> witness_row;
    for (std::size_t i = 0; i < atoms.count(); ++i) {
        i64 s = atoms.sigma_row(i, e);
        if (s % m != 0) throw std::logic_error("geroldinger: sigma_e of a zero-sum atom not divisible by ord e");
        i64 val = s / m - 1;
        if (val != 0 && !witness_row) witness_row = i;
        g = std::gcd(g, val);
    }
    res.min_delta = g;
    if (g > 0 && want_witness && witness_row) {
        DeltaWitness w;
        w.kind = "atom";
        w.atom = atoms.seq_at(*witness_row);
        res.witness = std::move(w);
    }
    return res;
}

}  // namespace

DeltaResult min_delta_with_atoms(const GroupSubset& g0, const AtomSet& atoms, const MinDeltaOptions& opts) {
    using M = MinDeltaOptions::Method;
    switch (opts.method) {
        case M::kernel:
            return kernel_route(atoms, opts.want_witness);
        case M::geroldinger: {
            auto e = subgroup_generator_in(g0);
            if (!e) throw std::invalid_argument("geroldinger method needs an element generating <G0>");
            return geroldinger_route(g0, atoms, *e, opts.want_witness);
        }
        case M::cf:
            throw std::invalid_argument("cf method cannot reuse a precomputed atom set");
        case M::automatic:
        default: {
            if (auto e = subgroup_generator_in(g0)) return geroldinger_route(g0, atoms, *e, opts.want_witness);
            return kernel_route(atoms, opts.want_witness);
        }
    }
}

// defined in closedform.cpp, which owns the continued-fraction machinery
DeltaResult two_element_route(const GroupSubset& g0, const EnumLimits& limits);

DeltaResult min_delta(const GroupSubset& g0, const MinDeltaOptions& opts) {
    if (opts.method == MinDeltaOptions::Method::cf) return two_element_route(g0, opts.limits);
    AtomSet atoms = enumerate_atoms(g0, opts.limits);
    return min_delta_with_atoms(g0, atoms, opts);
}

DeltaExploration delta_exploration(const GroupSubset& g0, int max_atoms_per_product, const EnumLimits& limits) {
    AtomSet atoms = enumerate_atoms(g0, limits);
    DeltaExploration out;
    LengthEngine engine(atoms);
    std::vector<i64> residual(g0.size(), 0);
    // multisets of at most max_atoms_per_product atoms, atom indices non-decreasing
    auto explore = [&](auto&& self, std::size_t min_atom, int depth) -> void {
        auto lens = bits_to_list(engine.lengths(residual));
        for (std::size_t i = 1; i < lens.size(); ++i) out.distances.insert(lens[i] - lens[i - 1]);
        if (depth == max_atoms_per_product) return;
        for (std::size_t j = min_atom; j < atoms.count(); ++j) {
            for (std::size_t t = 0; t < residual.size(); ++t) residual[t] += atoms.rows[j][t];
            self(self, j, depth + 1);
            for (std::size_t t = 0; t < residual.size(); ++t) residual[t] -= atoms.rows[j][t];
        }
    };
    explore(explore, 0, 0);
    return out;
}

}  // namespace zsf
