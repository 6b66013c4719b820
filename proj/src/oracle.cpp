#include "zsf/oracle.hpp"

#include "zsf/errors.hpp"

#include <algorithm>
#include <numeric>

namespace zsf {
namespace oracle {

namespace {

// plain subset-sum closure; v is a multiplicity vector over elems
bool naive_zero_sum_free(const std::vector<i64>& elems, const std::vector<i64>& v, i64 n) {
    std::vector<char> sums(n, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (i64 c = 0; c < v[i]; ++c) {
            std::vector<char> next = sums;
            for (i64 s = 0; s < n; ++s)
                if (sums[s]) next[(s + elems[i]) % n] = 1;
            next[elems[i] % n] = 1;
            sums = std::move(next);
        }
    }
    return !sums[0];
}

struct Box {
    std::vector<i64> dims;     // per-coordinate sizes
    std::vector<i64> strides;  // mixed-radix strides
    i64 cells = 1;

    explicit Box(const std::vector<i64>& d) : dims(d), strides(d.size()) {
        for (std::size_t i = 0; i < dims.size(); ++i) {
            strides[i] = cells;
            cells *= dims[i];
        }
    }
};

constexpr std::uint8_t kUnreached = 0xff;

}  // namespace

i64 oracle_box_size(const GroupSubset& g0, i64 bound_factor) {
    i64 cells = 1;
    for (i64 g : g0.elements) {
        cells *= bound_factor * element_order(g0.n, g) + 1;
        if (cells < 0 || cells > (i64)4e18 / (g0.n + 1)) return (i64)4e18;  // effectively infinite
    }
    return cells;
}

AtomSet oracle_atoms(const GroupSubset& g0, const OracleLimits& limits) {
    const i64 n = g0.n;
    std::vector<i64> dims;
    for (i64 g : g0.elements) dims.push_back(element_order(n, g) + 1);
    Box box(dims);
    if (box.cells > limits.max_box) throw budget_error("oracle_atoms: instance too large");

    AtomSet out{g0, {}, true};
    std::vector<i64> coords(g0.size(), 0);
    i64 sigma = 0;
    while (true) {
        bool zero_vec = std::all_of(coords.begin(), coords.end(), [](i64 x) { return x == 0; });
        if (sigma == 0 && !zero_vec) {
            // remove one copy of the first supported element, then check freeness
            std::vector<i64> rest = coords;
            for (auto& m : rest)
                if (m > 0) {
                    --m;
                    break;
                }
            if (naive_zero_sum_free(g0.elements, rest, n)) out.rows.push_back(coords);
        }
        std::size_t i = 0;
        for (; i < coords.size(); ++i) {
            if (coords[i] + 1 < box.dims[i]) {
                coords[i] += 1;
                sigma = (sigma + g0.elements[i]) % n;
                break;
            }
            sigma = (sigma - coords[i] % n * (g0.elements[i] % n) % n + n) % n;
            coords[i] = 0;
        }
        if (i == coords.size()) break;
    }
    std::sort(out.rows.begin(), out.rows.end());
    return out;
}

// For every cell B of the bounded box this computes, exactly, the minimum of
// the factorization-length set L(B) together with the gcd of its internal
// gaps, by the closure L(B) = union over atoms A <= B of (1 + L(B - A)).
// Merging a component (m', g') into a running (m, g) keeps the pair exact:
// the gcd of all pairwise differences of a union is the gcd of the parts'
// internal gcds and of the differences of their minima.
i64 oracle_min_delta(const GroupSubset& g0, i64 bound_factor, const OracleLimits& limits) {
    if (bound_factor < 1) throw std::invalid_argument("oracle_min_delta: bound factor must be >= 1");
    const i64 n = g0.n;
    std::vector<i64> dims;
    i64 max_len = 0;
    for (i64 g : g0.elements) {
        dims.push_back(bound_factor * element_order(n, g) + 1);
        max_len += dims.back() - 1;
    }
    if (max_len > 254) throw budget_error("oracle_min_delta: length range exceeds the 8-bit cells");
    Box box(dims);
    if (box.cells > limits.max_box) throw budget_error("oracle_min_delta: instance too large");
    AtomSet atoms = oracle_atoms(g0, limits);
    const std::size_t k = g0.size();

    std::vector<std::uint8_t> minlen(box.cells, kUnreached);
    std::vector<std::uint8_t> gaps(box.cells, 0);
    minlen[0] = 0;

    std::vector<i64> offs(atoms.count(), 0);
    std::vector<i64> rows_flat(atoms.count() * k);
    for (std::size_t j = 0; j < atoms.count(); ++j)
        for (std::size_t i = 0; i < k; ++i) {
            offs[j] += atoms.rows[j][i] * box.strides[i];
            rows_flat[j * k + i] = atoms.rows[j][i];
        }

    i64 global = 0;
    std::vector<i64> coords(k, 0);
    i64 c = 0;
    while (true) {
        if (minlen[c] != kUnreached) {
            global = std::gcd(global, (i64)gaps[c]);
            for (std::size_t j = 0; j < atoms.count(); ++j) {
                const i64* row = rows_flat.data() + j * k;
                bool fits = true;
                for (std::size_t i = 0; i < k; ++i)
                    if (coords[i] + row[i] >= box.dims[i]) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                const i64 t = c + offs[j];
                const std::uint8_t cand = (std::uint8_t)(minlen[c] + 1);
                if (minlen[t] == kUnreached) {
                    minlen[t] = cand;
                    gaps[t] = gaps[c];
                } else {
                    i64 diff = (i64)minlen[t] - (i64)cand;
                    gaps[t] = (std::uint8_t)std::gcd(std::gcd((i64)gaps[t], (i64)gaps[c]),
                                                     diff < 0 ? -diff : diff);
                    if (cand < minlen[t]) minlen[t] = cand;
                }
            }
        }
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (coords[i] + 1 < box.dims[i]) {
                coords[i] += 1;
                break;
            }
            coords[i] = 0;
        }
        ++c;
        if (i == k) break;
    }
    return global;
}

}  // namespace oracle
}  // namespace zsf
