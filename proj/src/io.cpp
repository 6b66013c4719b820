#include "zsf/io.hpp"

namespace zsf {

json to_json(const GroupSubset& s) { return json{{"n", s.n}, {"elements", s.elements}}; }

json to_json(const Seq& s) {
    json mult = json::object();
    for (auto& [g, v] : s.mult) mult[std::to_string(g)] = v;
    return json{{"n", s.base.n}, {"mult", mult}};
}

json to_json(const AtomSet& a) {
    json atoms = json::array();
    for (std::size_t i = 0; i < a.count(); ++i)
        atoms.push_back(json{{"mult", a.rows[i]},
                             {"text", a.seq_at(i).text()},
                             {"length", a.length_at(i)},
                             {"cross_number", rat_text(a.cross_number_at(i))}});
    return json{{"n", a.base.n}, {"elements", a.base.elements}, {"complete", a.complete}, {"atoms", atoms}};
}

json to_json(const DeltaResult& r) {
    json j{{"min_delta", r.min_delta}, {"method", method_name(r.method)}};
    if (r.witness) {
        json w{{"kind", r.witness->kind}};
        if (!r.witness->kernel_vector.empty()) w["kernel_vector"] = r.witness->kernel_vector;
        if (r.witness->atom) w["atom"] = to_json(*r.witness->atom);
        if (r.witness->kind == "cf") {
            w["c1"] = r.witness->cf_c1;
            w["c2"] = r.witness->cf_c2;
        }
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const HFReport& r) {
    json j{{"hf", r.hf},
           {"whf_arithmetic", r.whf_arithmetic},
           {"whf_structural", r.whf_structural},
           {"lcn", r.lcn}};
    j["witness_atom"] = r.witness_atom ? to_json(*r.witness_atom) : json(nullptr);
    return j;
}

json to_json(const DeltaStarTable& t) {
    json witnesses = json::object();
    for (auto& [v, sets] : t.witnesses) {
        json arr = json::array();
        for (auto& s : sets) arr.push_back(s.elements);
        witnesses[std::to_string(v)] = arr;
    }
    return json{{"n", t.n},
                {"values", t.values},
                {"witnesses", witnesses},
                {"orbit_count", t.orbit_count},
                {"nodes_used", t.nodes_used},
                {"zero_augmented_variants", "every witness also works with 0 adjoined"}};
}

json to_json(const std::vector<InverseHit>& hits) {
    json arr = json::array();
    for (auto& h : hits) arr.push_back(json{{"set", h.rep.elements}, {"zero_augmentable", h.zero_augmentable}});
    return arr;
}

json to_json(const InverseFamily& f) {
    json j{{"case", f.case_tag},
           {"required", f.required},
           {"allowed", f.allowed},
           {"validity", f.validity},
           {"validity_met", f.validity_met}};
    if (f.q) j["q"] = f.q;
    if (f.c1) j["c1"] = f.c1;
    if (f.c2) j["c2"] = f.c2;
    return j;
}

json to_json(const SuiteReport& r) {
    json entries = json::array();
    for (auto& e : r.entries) {
        json je{{"n", e.n}, {"check", e.check}, {"status", e.pass ? "pass" : "fail"}};
        if (!e.pass) je["counterexample"] = e.counterexample;
        entries.push_back(je);
    }
    return json{{"suite", r.suite}, {"entries", entries}, {"all_pass", r.all_pass()}};
}

json to_json(const AlphaBounds& b) {
    json j{{"lower", b.lower}};
    j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
    return j;
}

}  // namespace zsf
