#include "zsf/search.hpp"

#include "zsf/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace zsf {

namespace {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// canonical unit-orbit representatives among subsets of [first, n) with at
// most max_size elements, in lexicographic order
std::vector<GroupSubset> canonical_subsets(i64 n, bool include_zero, i64 max_size) {
    std::vector<GroupSubset> out;
    std::vector<i64> cur;
    const i64 first = include_zero ? 0 : 1;
    std::function<void(i64)> rec = [&](i64 next) {
        GroupSubset s(n, cur);
        if (s == canonical_under_units(s)) out.push_back(std::move(s));
        if ((i64)cur.size() == max_size) return;
        for (i64 g = next; g < n; ++g) {
            cur.push_back(g);
            rec(g + 1);
            cur.pop_back();
        }
    };
    rec(first);
    return out;
}

class DeltaMemo {
public:
    explicit DeltaMemo(const EnumLimits& lim) : lim_(lim) {}

    i64 get(const GroupSubset& s) {
        auto key = std::make_pair(s.n, s.elements);
        if (auto it = m_.find(key); it != m_.end()) return it->second;
        MinDeltaOptions o;
        o.limits = lim_;
        o.want_witness = false;
        i64 v = min_delta(s, o).min_delta;
        m_.emplace(std::move(key), v);
        return v;
    }

private:
    EnumLimits lim_;
    std::map<std::pair<i64, std::vector<i64>>, i64> m_;
};

struct Agg {
    bool pass = true;
    std::string first_failure;

    void fail(const std::string& what) {
        if (pass) first_failure = what;
        pass = false;
    }

    SuiteEntry entry(i64 n, std::string check) const { return {n, std::move(check), pass, first_failure}; }
};

}  // namespace

OrbitDeltas compute_orbit_deltas(i64 n, const SearchLimits& lim) {
    if (n < 1) throw std::invalid_argument("compute_orbit_deltas: n must be positive");
    if (n > lim.max_n)
        throw budget_error("exhaustive search cap exceeded (n > max_n; raise the cap explicitly)");
    OrbitDeltas od;
    od.n = n;
    od.reps = canonical_subsets(n, false, n);
    od.delta.assign(od.reps.size(), 0);
    std::atomic<i64> nodes{0};
    parallel_for(od.reps.size(), lim.workers, [&](std::size_t i) {
        MinDeltaOptions o;
        o.limits = lim.enum_limits;
        o.want_witness = false;
        od.delta[i] = min_delta(od.reps[i], o).min_delta;
        nodes += last_enumeration_nodes();
    });
    od.nodes_used = nodes.load();
    return od;
}

DeltaStarTable delta_star_from(const OrbitDeltas& od) {
    DeltaStarTable t;
    t.n = od.n;
    t.orbit_count = (i64)od.reps.size();
    t.nodes_used = od.nodes_used;
    for (std::size_t i = 0; i < od.reps.size(); ++i)
        if (od.delta[i] > 0) t.witnesses[od.delta[i]].push_back(od.reps[i]);
    for (auto& [v, w] : t.witnesses) {
        std::sort(w.begin(), w.end());
        t.values.push_back(v);
    }
    return t;
}

DeltaStarTable delta_star_bruteforce(i64 n, const SearchLimits& lim) {
    if (n < 3) throw std::invalid_argument("delta_star_bruteforce: needs n >= 3");
    return delta_star_from(compute_orbit_deltas(n, lim));
}

std::vector<InverseHit> inverse_search_from(const OrbitDeltas& od, i64 d) {
    std::vector<InverseHit> hits;
    for (std::size_t i = 0; i < od.reps.size(); ++i)
        if (od.delta[i] == d) hits.push_back({od.reps[i], true});
    std::sort(hits.begin(), hits.end(), [](auto& a, auto& b) { return a.rep < b.rep; });
    return hits;
}

std::vector<InverseHit> inverse_search(i64 n, i64 d, const SearchLimits& lim) {
    if (d < 1) throw std::invalid_argument("inverse_search: d must be positive");
    return inverse_search_from(compute_orbit_deltas(n, lim), d);
}

AlphaBounds alpha_bounds_exact_from(const OrbitDeltas& od, i64 d) {
    AlphaBounds b;
    i64 lo = 0, up = 0;
    for (std::size_t i = 0; i < od.reps.size(); ++i) {
        if (od.delta[i] <= 0) continue;
        i64 card = (i64)od.reps[i].size() + 1;  // the adjoinable 0
        if (od.delta[i] == d) lo = std::max(lo, card);
        if (od.delta[i] % d == 0) up = std::max(up, card);
    }
    b.lower = lo;
    b.upper = up;
    return b;
}

AlphaBounds alpha_bounds_exact(i64 n, i64 d, const SearchLimits& lim) {
    if (d < 1) throw std::invalid_argument("alpha_bounds: d must be positive");
    return alpha_bounds_exact_from(compute_orbit_deltas(n, lim), d);
}

AlphaBounds alpha_bounds_witness(i64 n, i64 d) {
    AlphaBounds b;
    for (const InverseFamily& fam : inverse_family_predict(n, d))
        b.lower = std::max(b.lower, (i64)instantiate_coeffs(n, fam.allowed, 1).size());
    return b;
}

i64 two_gen_threshold(i64 n) {
    i64 t = 1;
    while (t * t * t < 2 * n * n) ++t;
    return t;
}

bool SuiteReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.pass; });
}

namespace {

bool is_prime_power(i64 n) {
    if (n < 2) return false;
    i64 p = 2;
    while (p * p <= n && n % p) ++p;
    if (p * p > n) p = n;
    while (n % p == 0) n /= p;
    return n == 1;
}

void suite_gerohami(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    DeltaStarTable t = delta_star_bruteforce(n, lim);
    Agg max_ok, second_ok, one_ok;
    if (t.values.empty() || t.values.back() != n - 2) max_ok.fail("max != n-2");
    i64 second = (n - 2) / 2;
    if (second >= 1) {
        if (t.values.size() < 2 || t.values[t.values.size() - 2] != second)
            second_ok.fail("second-largest != floor((n-2)/2)");
    } else if (t.values.size() != 1) {
        second_ok.fail("expected a single value");
    }
    if (!std::binary_search(t.values.begin(), t.values.end(), (i64)1)) one_ok.fail("1 missing");
    rep.entries.push_back(max_ok.entry(n, "max-is-n-2"));
    rep.entries.push_back(second_ok.entry(n, "second-max-is-half"));
    rep.entries.push_back(one_ok.entry(n, "contains-1"));
}

void suite_min_is_one(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    DeltaStarTable t = delta_star_bruteforce(n, lim);
    Agg a;
    if (!std::binary_search(t.values.begin(), t.values.end(), (i64)1)) a.fail("1 missing");
    rep.entries.push_back(a.entry(n, "contains-1"));
}

void suite_two_element(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    Agg agree, decomp;
    for (i64 a = 2; a <= n - 1; ++a) {
        DeltaResult cf = two_element_min_delta(n, a, lim.enum_limits);
        GroupSubset pair(n, {1, a});
        MinDeltaOptions o;
        o.method = MinDeltaOptions::Method::kernel;
        o.limits = lim.enum_limits;
        o.want_witness = false;
        i64 kd = min_delta(pair, o).min_delta;
        if (cf.min_delta != kd) agree.fail("a=" + std::to_string(a));
        if (kd * kd > n) {
            // the (c1, c2) description concerns coprime pairs; reduce first
            i64 t = std::gcd(a, n), m = n / t, aa = a / t;
            bool found = false;
            for (i64 c2 = 1; aa * c2 < m && !found; ++c2) {
                i64 c1 = m - aa * c2;
                if (c1 >= 1 && m - c1 - c2 == kd * c1 * c2) found = true;
            }
            if (!found) decomp.fail("a=" + std::to_string(a));
        }
    }
    rep.entries.push_back(agree.entry(n, "cf-equals-kernel"));
    rep.entries.push_back(decomp.entry(n, "large-value-decomposition"));
}

void suite_witnesses(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    Agg a;
    MinDeltaOptions o;
    o.limits = lim.enum_limits;
    o.want_witness = false;
    for (const MTriple& t : m_triples(n)) {
        WitnessSet ws = witness_set(n, t);
        if (min_delta(ws.set, o).min_delta != ws.expected) {
            std::ostringstream os;
            os << "(c1,c2,d)=(" << t.c1 << "," << t.c2 << "," << t.d << ") set=" << ws.set.text();
            a.fail(os.str());
        }
    }
    rep.entries.push_back(a.entry(n, "witness-formula"));
}

void suite_directweak(SuiteReport& rep, i64 n) {
    Agg a;
    if (delta_star_closedform(n, Rat(1, 5)) != directweak_list(n)) a.fail("sets differ");
    rep.entries.push_back(a.entry(n, "closedform-equals-formula-list"));
}

void suite_pgroups(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    if (!is_prime_power(n)) return;
    i64 threshold = two_gen_threshold(n);
    DeltaStarTable t = delta_star_bruteforce(n, lim);
    std::set<i64> lhs, rhs;
    for (i64 v : t.values)
        if (v >= threshold) lhs.insert(v);
    for (i64 m : divisors_of(n))
        for (i64 v : i_set(m))
            if (v >= threshold) rhs.insert(v);
    Agg a;
    if (lhs != rhs) a.fail("brute-force and closed-form sets differ");
    rep.entries.push_back(a.entry(n, "prime-power-large-values"));
}

void suite_inverse_forward(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    DeltaMemo memo(lim.enum_limits);
    for (i64 d = 1; d <= n - 2; ++d) {
        std::vector<InverseFamily> fams;
        try {
            fams = inverse_family_predict(n, d);
        } catch (const std::invalid_argument&) {
            continue;
        }
        Agg a;
        for (const InverseFamily& fam : fams)
            for (const GroupSubset& s : family_instances(fam, n, 1))
                if (memo.get(s) != d) {
                    a.fail("case=" + fam.case_tag + " set=" + s.text());
                    break;
                }
        rep.entries.push_back(a.entry(n, "forward-d=" + std::to_string(d)));
    }
}

void suite_inverse_exhaustive(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    auto hits = inverse_search(n, n - 2, lim);
    Agg a;
    GroupSubset expected(n, {1, n - 1});
    if (hits.size() != 1 || !(hits[0].rep == expected) || !hits[0].zero_augmentable)
        a.fail("hits != { {1,-1} orbit }");
    rep.entries.push_back(a.entry(n, "n-2-orbit-unique"));
}

void suite_classify(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    const i64 max_size = n <= 12 ? n : 4;
    DeltaMemo memo(lim.enum_limits);
    std::map<std::pair<i64, i64>, bool> pair_whf;  // nonzero pair -> whf_arithmetic
    auto pair_is_whf = [&](i64 x, i64 y) {
        auto key = std::minmax(x, y);
        if (auto it = pair_whf.find(key); it != pair_whf.end()) return it->second;
        bool w = classify_set(GroupSubset(n, {x, y}), lim.enum_limits).whf_arithmetic;
        pair_whf.emplace(key, w);
        return w;
    };
    Agg hf_ok, struct_ok, lcn_ok, pair_ok, three_ok, chain_ok;
    for (const GroupSubset& s : canonical_subsets(n, true, max_size)) {
        HFReport c = classify_set(s, lim.enum_limits);
        if (c.hf != (memo.get(s) == 0)) hf_ok.fail(s.text());
        if (c.whf_arithmetic != c.whf_structural) struct_ok.fail(s.text());
        if (c.whf_arithmetic != c.lcn) lcn_ok.fail(s.text());
        if ((c.hf && !c.whf_arithmetic) || (c.whf_arithmetic && !c.lcn)) chain_ok.fail(s.text());
        if (!c.whf_arithmetic) {
            bool found = false;
            for (std::size_t i = 0; i < s.size() && !found; ++i)
                for (std::size_t j = i + 1; j < s.size() && !found; ++j)
                    if (s.elements[i] != 0 && !pair_is_whf(s.elements[i], s.elements[j])) found = true;
            if (!found) pair_ok.fail(s.text());
        }
        if (s.size() == 3 && c.whf_arithmetic && !c.hf) three_ok.fail(s.text());
    }
    rep.entries.push_back(hf_ok.entry(n, "hf-iff-all-cross-numbers-one"));
    rep.entries.push_back(struct_ok.entry(n, "whf-arithmetic-iff-structural"));
    rep.entries.push_back(lcn_ok.entry(n, "whf-iff-lcn"));
    rep.entries.push_back(pair_ok.entry(n, "non-whf-contains-non-whf-pair"));
    rep.entries.push_back(three_ok.entry(n, "whf-3-subset-is-hf"));
    rep.entries.push_back(chain_ok.entry(n, "hf-implies-whf-implies-lcn"));
    if (n == 30) {
        Agg ex;
        GroupSubset s(30, {1, 6, 10, 15});
        HFReport c = classify_set(s, lim.enum_limits);
        if (c.hf) ex.fail("set is half-factorial");
        if (find_non_hf_pair(s, lim.enum_limits)) ex.fail("found a non-HF pair");
        rep.entries.push_back(ex.entry(n, "example-1-6-10-15"));
    }
}

void suite_transfer(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    DeltaMemo memo(lim.enum_limits);
    Agg reduce_ok, extend_ok, delta3_ok;
    for (const GroupSubset& s : canonical_subsets(n, true, n)) {
        i64 base = memo.get(s);
        if (memo.get(reduce_higher_order(s)) != base) reduce_ok.fail(s.text());
        if (memo.get(extend_to_generating(s)) != base) extend_ok.fail(s.text());
        i64 nonzero = (i64)s.size() - (s.contains(0) ? 1 : 0);
        if (n <= 10 && nonzero <= 3) {
            auto lhs = delta_exploration(s, 3, lim.enum_limits).distances;
            auto rhs = delta_exploration(reduce_higher_order(s), 3, lim.enum_limits).distances;
            if (lhs != rhs) delta3_ok.fail(s.text());
        }
    }
    rep.entries.push_back(reduce_ok.entry(n, "reduce-preserves-min-delta"));
    rep.entries.push_back(extend_ok.entry(n, "extend-preserves-min-delta"));
    rep.entries.push_back(delta3_ok.entry(n, "delta3-agrees-under-reduce"));
}

void suite_smallelements(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    DeltaMemo memo(lim.enum_limits);
    Agg a;
    for (const GroupSubset& s : canonical_subsets(n, true, n)) {
        for (i64 e : s.elements) {
            if (std::gcd(e, n) != 1) continue;
            for (i64 x = 1; x <= n; ++x) {
                GroupSubset t = s.with(x % n * e % n);
                i64 dt = memo.get(t);
                if (dt >= x && dt != memo.get(s)) {
                    std::ostringstream os;
                    os << "S=" << s.text() << " e=" << e << " x=" << x;
                    a.fail(os.str());
                }
            }
        }
    }
    rep.entries.push_back(a.entry(n, "small-adjoined-element-preserves"));
}

void suite_lem_n68(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    if (n % 8 != 6) return;
    MinDeltaOptions o;
    o.limits = lim.enum_limits;
    o.want_witness = false;
    GroupSubset s(n, {1, 2, n / 2, n - 4});
    Agg a;
    if (min_delta(s, o).min_delta != (n - 6) / 8) a.fail(s.text());
    rep.entries.push_back(a.entry(n, "value-(n-6)/8"));
}

void suite_oracle_mindelta(SuiteReport& rep, i64 n, const SearchLimits& lim) {
    Agg atoms_ok, delta_ok, stab_ok;
    MinDeltaOptions o;
    o.limits = lim.enum_limits;
    o.want_witness = false;
    oracle::OracleLimits big;
    big.max_box = 320'000'000;  // 640 MB of transient cell pairs
    const std::size_t total = std::size_t(1) << n;
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<i64> elems;
        for (i64 g = 0; g < n; ++g)
            if (mask & (std::size_t(1) << g)) elems.push_back(g);
        GroupSubset s(n, std::move(elems));
        AtomSet fast = enumerate_atoms(s, lim.enum_limits);
        AtomSet slow = oracle::oracle_atoms(s, big);
        if (fast.rows != slow.rows) atoms_ok.fail(s.text());
        i64 prod = min_delta_with_atoms(s, fast, o).min_delta;
        // the bound-2 box is exact; the dozen largest subsets exceed the
        // guard and are checked at bound 1 (still a full equality assert)
        const bool b2 = oracle::oracle_box_size(s, 2) <= big.max_box;
        i64 ref = oracle::oracle_min_delta(s, b2 ? 2 : 1, big);
        if (prod != ref) delta_ok.fail(s.text() + (b2 ? "" : " (bound 1)"));
        if (b2) {
            i64 d1 = oracle::oracle_min_delta(s, 1, big);
            bool ok = ref == 0 ? d1 == 0 : d1 % ref == 0;
            if (!ok) stab_ok.fail(s.text() + " bound 1 not a coarsening");
            // the bound-3 cross-check is a self-diagnostic; keep it to boxes
            // that rescan in milliseconds
            if (oracle::oracle_box_size(s, 3) <= 4'000'000 && oracle::oracle_min_delta(s, 3, big) != ref)
                stab_ok.fail(s.text() + " bounds 2 and 3 differ");
        }
    }
    rep.entries.push_back(atoms_ok.entry(n, "oracle-atoms-equal"));
    rep.entries.push_back(delta_ok.entry(n, "oracle-min-delta-equal"));
    rep.entries.push_back(stab_ok.entry(n, "oracle-bound-stabilization"));
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"gerohami",        "min-is-one", "two-element",           "witnesses",
            "directweak",      "pgroups",    "inverse-forward",       "inverse-exhaustive",
            "classify-equivalences", "transfer",   "smallelements",         "lem-n68",
            "oracle-mindelta"};
}

SuiteReport verify_suite(const std::string& name, i64 lo, i64 hi, const SearchLimits& lim) {
    SuiteReport rep;
    rep.suite = name;
    if (lo > hi || lo < 1) throw std::invalid_argument("verify_suite: bad range");
    if (name == "directweak" && lo < 250)
        throw std::invalid_argument("directweak: the formula identity is only claimed for n >= 250");
    for (i64 n = lo; n <= hi; ++n) {
        if (name == "gerohami")
            suite_gerohami(rep, n, lim);
        else if (name == "min-is-one")
            suite_min_is_one(rep, n, lim);
        else if (name == "two-element")
            suite_two_element(rep, n, lim);
        else if (name == "witnesses")
            suite_witnesses(rep, n, lim);
        else if (name == "directweak")
            suite_directweak(rep, n);
        else if (name == "pgroups")
            suite_pgroups(rep, n, lim);
        else if (name == "inverse-forward")
            suite_inverse_forward(rep, n, lim);
        else if (name == "inverse-exhaustive")
            suite_inverse_exhaustive(rep, n, lim);
        else if (name == "classify-equivalences")
            suite_classify(rep, n, lim);
        else if (name == "transfer")
            suite_transfer(rep, n, lim);
        else if (name == "smallelements")
            suite_smallelements(rep, n, lim);
        else if (name == "lem-n68")
            suite_lem_n68(rep, n, lim);
        else if (name == "oracle-mindelta")
            suite_oracle_mindelta(rep, n, lim);
        else
            throw std::invalid_argument("unknown suite: " + name);
    }
    return rep;
}

SuiteReport check_two_generator_structure(i64 n, const SearchLimits& lim) {
    SuiteReport rep;
    rep.suite = "two-generator-structure";
    OrbitDeltas od = compute_orbit_deltas(n, lim);
    std::set<i64> in = i_set(n);
    std::vector<MTriple> triples = m_triples(n);
    for (std::size_t i = 0; i < od.reps.size(); ++i) {
        const i64 d = od.delta[i];
        if (d <= 0 || d * d * d < 2 * n * n) continue;
        const GroupSubset& s = od.reps[i];
        std::vector<i64> gens;
        for (i64 g : s.elements)
            if (std::gcd(g, n) == 1) gens.push_back(g);
        if (gens.size() < 2) continue;
        Agg a;
        if (gens.size() != 2) a.fail("more than two generators: " + s.text());
        if (!in.count(d)) a.fail("value not in I(n): " + s.text());
        bool related = false;
        for (const MTriple& t : triples) {
            if (t.expected(n) != d) continue;
            for (int flip = 0; flip < 2 && !related; ++flip) {
                i64 e = gens[flip], g = gens[1 - flip];
                if (sigma_rep(n, e, g) == (n - t.c1) / t.c2 && (t.d * e - t.d * g) % n == 0) related = true;
            }
            if (related) break;
        }
        if (!related) a.fail("no M(n) triple relates the generators: " + s.text());
        rep.entries.push_back(a.entry(n, "two-gen-structure"));
    }
    return rep;
}

}  // namespace zsf
