#include "zsf/atoms.hpp"

#include <algorithm>

namespace zsf {

namespace {

thread_local i64 g_last_nodes = 0;

struct AtomDfs {
    const GroupSubset& g0;
    const EnumLimits& limits;
    i64 n;
    std::size_t k;
    std::vector<i64> orders;
    std::vector<i64> v;  // current S' multiplicities
    i64 sigma = 0;
    i64 target = 0;
    std::size_t min_idx = 0;
    i64 nodes = 0;
    std::vector<std::vector<i64>>* out = nullptr;

    explicit AtomDfs(const GroupSubset& s, const EnumLimits& lim) : g0(s), limits(lim), n(s.n), k(s.size()) {
        orders.reserve(k);
        for (i64 g : s.elements) orders.push_back(element_order(n, g));
        v.assign(k, 0);
    }

    void tick() {
        if (++nodes > limits.max_nodes) throw budget_error("atom enumeration node budget exceeded");
    }

    void emit() {
        std::vector<i64> row = v;
        row[min_idx] += 1;
        i64 len = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (row[i] > orders[i]) throw std::logic_error("atom exceeds order bound");
            len += row[i];
        }
        if (len > n) throw std::logic_error("atom exceeds Davenport bound");
        out->push_back(std::move(row));
        if ((i64)out->size() > limits.max_atoms) throw budget_error("atom count budget exceeded");
    }

    // sums = subsequence sums of the current S'
    void run(std::size_t idx, BitVec& sums) {
        tick();
        if (sigma == target) {
            emit();
            return;  // extensions of an emitting state cannot emit again
        }
        if (idx == k) return;
        run(idx + 1, sums);
        const i64 g = g0.elements[idx];
        const BitVec saved = sums;
        const i64 saved_v = v[idx];
        const i64 saved_sigma = sigma;
        while (true) {
            sums.close_with(g);
            if (sums.test(0)) break;  // zero-sum: prune this branch
            v[idx] += 1;
            sigma = (sigma + g) % n;
            run(idx + 1, sums);
        }
        v[idx] = saved_v;
        sigma = saved_sigma;
        sums = saved;
    }
};

}  // namespace

Seq AtomSet::seq_at(std::size_t i) const {
    Seq s(base);
    for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j]) s.add(base.elements[j], rows[i][j]);
    return s;
}

Rat AtomSet::cross_number_at(std::size_t i) const {
    Rat r = 0;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j]) r += Rat(rows[i][j], element_order(base.n, base.elements[j]));
    return r;
}

i64 AtomSet::length_at(std::size_t i) const {
    i64 len = 0;
    for (i64 m : rows[i]) len += m;
    return len;
}

i64 AtomSet::sigma_row(std::size_t i, i64 e) const {
    i64 acc = 0;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j]) acc += rows[i][j] * sigma_rep(base.n, e, base.elements[j]);
    return acc;
}

AtomSet enumerate_atoms(const GroupSubset& g0, const EnumLimits& limits) {
    AtomSet result{g0, {}, true};
    AtomDfs dfs(g0, limits);
    dfs.out = &result.rows;
    for (std::size_t gi = 0; gi < g0.size(); ++gi) {
        dfs.min_idx = gi;
        dfs.target = (g0.n - g0.elements[gi]) % g0.n;
        dfs.sigma = 0;
        BitVec sums(g0.n);
        dfs.run(gi, sums);
    }
    g_last_nodes = dfs.nodes;
    std::sort(result.rows.begin(), result.rows.end());
    return result;
}

i64 last_enumeration_nodes() { return g_last_nodes; }

Rat big_cross_number(const GroupSubset& g0, const EnumLimits& limits) {
    AtomSet atoms = enumerate_atoms(g0, limits);
    Rat best = 0;
    for (std::size_t i = 0; i < atoms.count(); ++i) best = std::max(best, atoms.cross_number_at(i));
    return best;
}

namespace {

struct ZsfDfs {
    const GroupSubset& g0;
    const EnumLimits& limits;
    i64 nodes = 0;
    Rat best = 0;

    void run(std::size_t idx, BitVec& sums, const Rat& k) {
        if (++nodes > limits.max_nodes) throw budget_error("zero-sum-free enumeration node budget exceeded");
        best = std::max(best, k);
        if (idx == g0.size()) return;
        run(idx + 1, sums, k);
        const i64 g = g0.elements[idx];
        const Rat step(1, element_order(g0.n, g));
        BitVec saved = sums;
        Rat cur = k;
        while (true) {
            sums.close_with(g);
            if (sums.test(0)) break;
            cur += step;
            run(idx + 1, sums, cur);
        }
        sums = std::move(saved);
    }
};

}  // namespace

Rat little_cross_number(const GroupSubset& g0, const EnumLimits& limits) {
    ZsfDfs dfs{g0, limits};
    BitVec sums(g0.n);
    dfs.run(0, sums, Rat(0));
    return dfs.best;
}

}  // namespace zsf
