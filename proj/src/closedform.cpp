#include "zsf/closedform.hpp"

#include <algorithm>
#include <sstream>

namespace zsf {

std::vector<i64> divisors_of(i64 n) {
    std::vector<i64> ds;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<MTriple> m_triples(i64 n) {
    if (n < 1) throw std::invalid_argument("m_triples: n must be positive");
    std::vector<i64> divs = divisors_of(n);
    std::vector<MTriple> out;
    for (i64 c1 = 1; c1 <= n; ++c1) {
        if (n - c1 - 1 <= 0) break;
        for (i64 c2 = 1; c2 <= n; ++c2) {
            i64 D = n - c1 - c2;
            if (D <= 0) break;
            if (D % (c1 * c2)) continue;
            for (i64 d : divs)
                if ((D * d) % (c2 * n) == 0) out.push_back({c1, c2, d});
        }
    }
    return out;  // already lexicographic: c1 asc, c2 asc, d asc
}

bool is_m_triple(i64 n, const MTriple& t) {
    if (t.c1 < 1 || t.c1 > n || t.c2 < 1 || t.c2 > n || t.d < 1 || n % t.d) return false;
    i64 D = n - t.c1 - t.c2;
    return D > 0 && D % (t.c1 * t.c2) == 0 && (D * t.d) % (t.c2 * n) == 0;
}

std::set<i64> i_set(i64 n) {
    std::set<i64> out;
    for (const MTriple& t : m_triples(n)) out.insert(t.expected(n));
    return out;
}

std::set<i64> j_set(i64 n) {
    std::set<i64> out;
    for (i64 c1 = 1; c1 <= n; ++c1) {
        if (n - c1 - 1 <= 0) break;
        for (i64 c2 = 1; c2 <= n; ++c2) {
            i64 D = n - c1 - c2;
            if (D <= 0) break;
            if (D % (c1 * c2)) continue;
            for (i64 d : divisors_of(D / (c1 * c2))) out.insert(d);
        }
    }
    return out;
}

WitnessSet witness_set(i64 n, const MTriple& t) {
    if (!is_m_triple(n, t)) throw std::invalid_argument("witness_set: triple not in M(n)");
    GroupSubset s(n, {1 % n, ((n - t.c1) / t.c2) % n, t.d % n});
    return {std::move(s), t.expected(n)};
}

std::vector<i64> odd_continued_fraction(i64 p, i64 q) {
    if (q < 1 || p <= q) throw std::invalid_argument("odd_continued_fraction: need p > q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("odd_continued_fraction: p/q must be reduced");
    std::vector<i64> quots;
    while (q != 0) {
        quots.push_back(p / q);
        i64 r = p % q;
        p = q;
        q = r;
    }
    if (quots.size() % 2 == 0) {
        // canonical expansions end with a quotient >= 2, so this stays positive
        quots.back() -= 1;
        quots.push_back(1);
    }
    return quots;
}

namespace {

DeltaResult reduction_zero() {
    DeltaResult r;
    r.min_delta = 0;
    r.method = DeltaMethod::reduction;
    return r;
}

DeltaResult two_element_core(i64 n, i64 a, const EnumLimits& limits) {
    i64 t = std::gcd(a, n);
    if (t > 1) {
        i64 m = n / t, ap = a / t;
        if (m <= 2 || ap == 1) return reduction_zero();
        return two_element_core(m, ap, limits);
    }
    std::vector<i64> cf = odd_continued_fraction(n, a);
    if (cf.size() == 3) {
        i64 b = cf[0], d = cf[1], c = cf[2];
        if ((n - c) % b == 0 && (n - c) / b == a && (n - b - c) % (b * c) == 0 && (n - b - c) / (b * c) == d) {
            DeltaResult r;
            r.min_delta = d;
            r.method = DeltaMethod::continued_fraction;
            DeltaWitness w;
            w.kind = "cf";
            w.cf_c1 = c;
            w.cf_c2 = b;
            r.witness = std::move(w);
            return r;
        }
    }
    GroupSubset pair(n, {1, a});
    MinDeltaOptions opts;
    opts.method = MinDeltaOptions::Method::kernel;
    opts.limits = limits;
    return min_delta_with_atoms(pair, enumerate_atoms(pair, limits), opts);
}

// smallest k >= 1 with k*g in <t>, for t | n
i64 least_multiple_into(i64 g, i64 t) { return t / std::gcd(t, g); }

}  // namespace

DeltaResult two_element_min_delta(i64 n, i64 a, const EnumLimits& limits) {
    if (n < 3) throw std::invalid_argument("two_element_min_delta: need n >= 3");
    if (a < 2 || a > n - 1) throw std::invalid_argument("two_element_min_delta: need 2 <= a <= n-1");
    return two_element_core(n, a, limits);
}

DeltaResult two_element_route(const GroupSubset& g0, const EnumLimits& limits) {
    std::vector<i64> nz;
    for (i64 g : g0.elements)
        if (g != 0) nz.push_back(g);
    if (nz.size() != 2) throw std::invalid_argument("cf route needs exactly two nonzero elements");
    const i64 n = g0.n;
    i64 a = nz[0], b = nz[1];
    i64 ta = std::gcd(n, a), tb = std::gcd(n, b);
    i64 na = least_multiple_into(a, tb);
    i64 nb = least_multiple_into(b, ta);
    i64 img_a = na % n * (a % n) % n;
    i64 img_b = nb % n * (b % n) % n;
    if (img_a == img_b) return reduction_zero();
    i64 m = element_order(n, img_a);
    if (element_order(n, img_b) != m) throw std::logic_error("two-element reduction: image orders differ");
    i64 s = sigma_rep(n, img_a, img_b);
    if (s <= 1 || s >= m) throw std::logic_error("two-element reduction: degenerate representative");
    return two_element_core(m, s, limits);
}

std::set<i64> delta_star_closedform(i64 n, const Rat& c0) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    const BigInt p = numerator(c0), q = denominator(c0);
    if (p <= 0 || Rat(1, 10) > c0 || c0 > Rat(1, 2))
        throw std::invalid_argument("delta_star_closedform: threshold must lie in [1/10, 1/2]");
    if (BigInt(n) * p * p * p < 2 * q * q * q)
        throw std::invalid_argument("delta_star_closedform: n below the proven range 2/c0^3");
    std::set<i64> out;
    for (i64 m : divisors_of(n)) {
        // values >= c0*n force c1*c2 < 1/c0, so the scan is tiny
        for (i64 c1 = 1; BigInt(c1) * p < q; ++c1) {
            for (i64 c2 = 1; BigInt(c1) * c2 * p < q; ++c2) {
                i64 D = m - c1 - c2;
                if (D <= 0) continue;
                if (D % (c1 * c2)) continue;
                for (i64 d : divisors_of(m)) {
                    if ((D * d) % (c2 * m)) continue;
                    i64 g = std::gcd(D / (c1 * c2), D * d / (c2 * m));
                    if (BigInt(g) * q >= BigInt(p) * n) out.insert(g);
                }
            }
        }
    }
    return out;
}

std::set<i64> directweak_list(i64 n) {
    static const std::pair<i64, i64> forms[] = {{2, 1}, {2, 2}, {3, 2}, {4, 2}, {4, 3},
                                                {6, 3}, {4, 4}, {5, 4}, {6, 4}, {8, 4}};
    std::set<i64> out;
    for (auto [off, den] : forms) {
        i64 v = n - off;
        if (v <= 0 || v % den) continue;
        i64 val = v / den;
        if (5 * val >= n) out.insert(val);
    }
    return out;
}

namespace {

std::vector<i64> norm_coeffs(i64 n, std::vector<i64> cs) {
    for (auto& c : cs) c = ((c % n) + n) % n;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

InverseFamily make_family(i64 n, std::string tag, std::vector<i64> required, std::vector<i64> allowed,
                          std::string validity, bool met, i64 q = 0, i64 c1 = 0, i64 c2 = 0) {
    InverseFamily f;
    f.case_tag = std::move(tag);
    f.q = q;
    f.c1 = c1;
    f.c2 = c2;
    f.required = norm_coeffs(n, std::move(required));
    f.allowed = norm_coeffs(n, std::move(allowed));
    f.validity = std::move(validity);
    f.validity_met = met;
    return f;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace

std::vector<InverseFamily> inverse_family_predict(i64 n, i64 d) {
    if (n < 3 || d < 1) throw std::invalid_argument("inverse_family_predict: need n >= 3 and d >= 1");
    std::vector<InverseFamily> fams;
    const std::string big = "n >= 250";
    const bool big_met = n >= 250;

    if (d == n - 2) fams.push_back(make_family(n, "inverse-i", {1, -1}, {1, -1, 0}, big, big_met));
    if (2 * d == n - 2)
        fams.push_back(make_family(n, "inverse-ii", {1, -1, n / 2}, {1, -1, n / 2, 0}, big, big_met));
    if (2 * d == n - 3) fams.push_back(make_family(n, "inverse-iii", {1, -2}, {1, -2, 0}, big, big_met));
    if (2 * d == n - 4) {
        fams.push_back(make_family(n, "inverse-iv", {1, -2}, {1, 2, -2, 0}, big, big_met));
        fams.push_back(make_family(n, "inverse-iv", {2, -2}, {2, -2, 0}, big, big_met));
        if (n % 4 != 0)
            fams.push_back(make_family(n, "inverse-iv", {2, -2}, {2, -2, n / 2, 0}, big, big_met));
    }
    if (3 * d == n - 4) fams.push_back(make_family(n, "inverse-v", {1, -3}, {1, -3, 0}, big, big_met));
    if (3 * d == n - 6) {
        fams.push_back(make_family(n, "inverse-vi", {1, -3}, {1, 3, -3, 0}, big, big_met));
        fams.push_back(make_family(n, "inverse-vi", {3, -3}, {3, -3, 0}, big, big_met));
        if (n % 9 != 0)
            fams.push_back(make_family(n, "inverse-vi", {3, -3}, {3, -3, n / 3, 0}, big, big_met));
    }
    if (4 * d == n - 4) {
        fams.push_back(make_family(n, "inverse-vii", {1, (n - 2) / 2}, {1, (n - 2) / 2, 2, -2, n / 2, 0},
                                   big, big_met));
        fams.push_back(make_family(n, "inverse-vii", {1, -2, n / 2}, {1, 2, -2, n / 2, 0}, big, big_met));
        if (n % 8 != 0)
            fams.push_back(make_family(n, "inverse-vii", {2, -2, n / 2}, {2, -2, n / 4, n / 2, 0}, big, big_met));
    }
    if (4 * d == n - 5) fams.push_back(make_family(n, "inverse-viii", {1, -4}, {1, -4, 0}, big, big_met));
    if (4 * d == n - 6) {
        fams.push_back(make_family(n, "inverse-ix", {2, -4}, {2, -4, n / 2, 0}, big, big_met));
        fams.push_back(make_family(n, "inverse-ix", {1, -4}, {1, 2, -4, 0}, big, big_met));
        fams.push_back(make_family(n, "inverse-ix", {1, (n - 2) / 2}, {1, 2, (n - 2) / 2, n / 2, 0}, big, big_met));
    }
    if (4 * d == n - 8) {
        for (i64 j : {1, 2, 4})
            fams.push_back(make_family(n, "inverse-x", {j, -4}, {1, 2, 4, -4, 0}, big, big_met));
        if (n % 8 != 0)
            fams.push_back(make_family(n, "inverse-x", {4, -4}, {4, -4, n / 4, n / 2, 0}, big, big_met));
    }

    // q-parametric families
    if ((n - 1) % (d + 1) == 0) {
        i64 q = (n - 1) / (d + 1);
        if (q >= 1 && d * q == n - q - 1)
            fams.push_back(make_family(n, "q-family-A", {1, -q}, {1, -q, 0}, "8*q^3 <= n", 8 * q * q * q <= n, q));
    }
    if (n % (d + 2) == 0) {
        i64 q = n / (d + 2);
        if ((q == 1 || is_prime(q)) && n % q == 0 && d * q == n - 2 * q) {
            std::vector<i64> allowed1 = {q, -q, 0};
            if ((n / q) % q != 0) allowed1.push_back(n / q);  // q^2 | n puts the extra element at 0
            fams.push_back(make_family(n, "q-family-B", {q, -q}, allowed1, "8*q^3 < n", 8 * q * q * q < n, q));
            fams.push_back(make_family(n, "q-family-B", {1, -q}, {1, q, -q, 0}, "8*q^3 < n", 8 * q * q * q < n, q));
        }
    }
    for (i64 q = 3; q * q <= n; q += 2) {
        if (!is_prime(q) || n % q != 0) continue;
        if (q * q * d + 2 * q == n) {
            std::vector<i64> allowed = {0, 1, q, -q, n / q, (n - q) / q};
            std::string cond = "64*q^6 <= n";
            bool met = 64 * q * q * q * q * q * q <= n;
            fams.push_back(make_family(n, "q-family-C", {1, -q, n / q}, allowed, cond, met, q));
            fams.push_back(make_family(n, "q-family-C", {1, (n - q) / q}, allowed, cond, met, q));
        }
    }

    // prime order, d at least (2n^2)^(1/3); n - c1 = c2*(d*c1 + 1) pins c2
    if (is_prime(n) && (BigInt(d) * d * d >= 2 * BigInt(n) * n)) {
        for (i64 c1 = 1; d * c1 + c1 + 1 <= n - 1; ++c1) {
            if ((n - c1) % (d * c1 + 1)) continue;
            i64 c2 = (n - c1) / (d * c1 + 1);
            if (c2 < 1) continue;
            fams.push_back(make_family(n, "prime", {1, (n - c1) / c2}, {1, (n - c1) / c2, 0},
                                       "n prime and d^3 >= 2*n^2", true, 0, c1, c2));
        }
    }

    // the q-lemmas at small q restate cases of the main list; keep one record
    // per distinct (required, allowed) pair, first (main-list) tag wins
    {
        std::vector<InverseFamily> uniq;
        for (auto& f : fams) {
            bool seen = false;
            for (auto& u : uniq)
                if (u.required == f.required && u.allowed == f.allowed) {
                    seen = true;
                    break;
                }
            if (!seen) uniq.push_back(std::move(f));
        }
        fams = std::move(uniq);
    }

    if (fams.empty()) {
        std::ostringstream os;
        os << "minimal distance " << d << " mod " << n
           << " is not a covered closed form; covered: n-2, (n-2)/2, (n-3)/2, (n-4)/2, (n-4)/3, (n-6)/3, "
              "(n-4)/4, (n-5)/4, (n-6)/4, (n-8)/4, (n-q-1)/q, (n-2q)/q, (n-2q)/q^2, and (n-c1-c2)/(c1*c2) "
              "for prime n with d^3 >= 2n^2";
        throw std::invalid_argument(os.str());
    }
    return fams;
}

GroupSubset instantiate_coeffs(i64 n, const std::vector<i64>& coeffs, i64 f) {
    std::vector<i64> elems;
    elems.reserve(coeffs.size());
    for (i64 c : coeffs) elems.push_back((((c % n) * (f % n)) % n + n) % n);
    return GroupSubset(n, std::move(elems));
}

std::vector<GroupSubset> family_instances(const InverseFamily& fam, i64 n, i64 f) {
    std::vector<i64> extras;
    for (i64 c : fam.allowed)
        if (!std::binary_search(fam.required.begin(), fam.required.end(), c)) extras.push_back(c);
    std::vector<GroupSubset> out;
    const std::size_t combos = std::size_t(1) << extras.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        std::vector<i64> coeffs = fam.required;
        for (std::size_t b = 0; b < extras.size(); ++b)
            if (mask & (std::size_t(1) << b)) coeffs.push_back(extras[b]);
        out.push_back(instantiate_coeffs(n, coeffs, f));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<GroupSubset> family_instances_all_generators(const InverseFamily& fam, i64 n) {
    std::vector<GroupSubset> out;
    for (i64 f : units_mod(n))
        for (GroupSubset& s : family_instances(fam, n, f)) out.push_back(canonical_under_units(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace zsf
