#include "zsf/cli.hpp"

#include "zsf/io.hpp"
#include "zsf/oracle.hpp"
#include "zsf/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

namespace zsf {

namespace {

GroupSubset parse_set(i64 n, const std::string& list) { return GroupSubset::parse(std::to_string(n) + ":" + list); }

std::pair<i64, i64> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("--range expects A..B");
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
        if (!quote) {
            out << cells[i];
            continue;
        }
        out << '"';
        for (char c : cells[i]) {
            if (c == '"') out << '"';
            out << c;
        }
        out << '"';
    }
    out << '\n';
}

std::string join_i64(const std::vector<i64>& v, char sep = ' ') {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations of factorization invariants for zero-sum sequences over subsets of Z/nZ"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    std::string cache_dir;
    if (const char* env = std::getenv("ZSF_CACHE_DIR")) cache_dir = env;
    app.add_option("--cache-dir", cache_dir, "atom cache directory (env ZSF_CACHE_DIR)");
    int workers = 1;
    if (const char* env = std::getenv("ZSF_WORKERS")) workers = std::max(1, std::atoi(env));
    app.add_option("--workers", workers, "worker threads for searches (env ZSF_WORKERS)")
        ->check(CLI::PositiveNumber);
    i64 node_budget = EnumLimits{}.max_nodes, atom_budget = EnumLimits{}.max_atoms;
    app.add_option("--node-budget", node_budget, "atom enumeration node budget")->check(CLI::PositiveNumber);
    app.add_option("--atom-budget", atom_budget, "atom count budget")->check(CLI::PositiveNumber);
    i64 cap = SearchLimits{}.max_n;
    app.add_option("--cap", cap, "feasibility cap for exhaustive searches")->check(CLI::PositiveNumber);

    i64 n = 0, d = 0;
    std::string set_list, method = "auto", which = "i", suite, range, threshold = "1/5";
    bool brute = false, closed_form = false, do_search = false, do_predict = false;
    bool truly = false, exact_mode = false, witness_mode = false;

    CLI::App* atoms_cmd = app.add_subcommand("atoms", "enumerate the minimal zero-sum sequences");
    atoms_cmd->add_option("--n", n)->required();
    atoms_cmd->add_option("--set", set_list)->required();

    CLI::App* mindelta_cmd = app.add_subcommand("mindelta", "minimal distance of a subset");
    mindelta_cmd->add_option("--n", n)->required();
    mindelta_cmd->add_option("--set", set_list)->required();
    mindelta_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "kernel", "geroldinger", "cf"}));

    CLI::App* dstar_cmd = app.add_subcommand("delta-star", "the set of minimal distances");
    dstar_cmd->add_option("--n", n)->required();
    dstar_cmd->add_flag("--brute", brute, "exhaustive orbit search");
    dstar_cmd->add_flag("--closed-form", closed_form, "large values from the closed forms");
    dstar_cmd->add_option("--threshold", threshold, "closed-form cutoff as an exact rational P/Q");

    CLI::App* cf_cmd = app.add_subcommand("closed-form", "triple set M(n) and value sets I(n), J(n)");
    cf_cmd->add_option("--n", n)->required();
    cf_cmd->add_option("--which", which)->check(CLI::IsMember({"m", "i", "j"}));

    CLI::App* inverse_cmd = app.add_subcommand("inverse", "sets attaining a given minimal distance");
    inverse_cmd->add_option("--n", n)->required();
    inverse_cmd->add_option("--d", d)->required();
    inverse_cmd->add_flag("--search", do_search, "exhaustive search");
    inverse_cmd->add_flag("--predict", do_predict, "closed-form family prediction");

    CLI::App* classify_cmd = app.add_subcommand("classify", "half-factoriality predicates");
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--set", set_list)->required();

    CLI::App* chf_cmd = app.add_subcommand("chf", "congruence half-factoriality");
    chf_cmd->add_option("--n", n)->required();
    chf_cmd->add_option("--set", set_list)->required();
    chf_cmd->add_option("--d", d)->required();
    chf_cmd->add_flag("--truly", truly);

    CLI::App* alpha_cmd = app.add_subcommand("alpha", "extremal cardinalities for a minimal distance");
    alpha_cmd->add_option("--n", n)->required();
    alpha_cmd->add_option("--d", d)->required();
    alpha_cmd->add_flag("--exact", exact_mode);
    alpha_cmd->add_flag("--witness", witness_mode);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("--suite", suite)->required();
    verify_cmd->add_option("--range", range, "modulus range A..B")->required();

    std::vector<std::string> argv_vec = args;
    std::vector<char*> argv;
    std::string prog = "zsf";
    argv.push_back(prog.data());
    for (auto& a : argv_vec) argv.push_back(a.data());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    EnumLimits limits{node_budget, atom_budget};
    SearchLimits slim{cap, workers, limits};

    try {
        if (atoms_cmd->parsed()) {
            GroupSubset s = parse_set(n, set_list);
            AtomSet a = cache_dir.empty() ? enumerate_atoms(s, limits) : AtomCache(cache_dir).get(s, limits);
            if (format == "json") {
                json j = to_json(a);
                j["schema"] = "atomset/1";
                out << j.dump() << "\n";
            } else if (format == "csv") {
                emit_csv_row(out, {"atom", "length", "cross_number"});
                for (std::size_t i = 0; i < a.count(); ++i)
                    emit_csv_row(out, {a.seq_at(i).text(), std::to_string(a.length_at(i)),
                                       rat_text(a.cross_number_at(i))});
            } else {
                out << "A(" << s.text() << "): " << a.count() << " atoms\n";
                for (std::size_t i = 0; i < a.count(); ++i)
                    out << "  " << a.seq_at(i).text() << "  length=" << a.length_at(i)
                        << "  cross_number=" << rat_text(a.cross_number_at(i)) << "\n";
            }
            return 0;
        }

        if (mindelta_cmd->parsed()) {
            GroupSubset s = parse_set(n, set_list);
            MinDeltaOptions opts;
            opts.limits = limits;
            if (method == "kernel") opts.method = MinDeltaOptions::Method::kernel;
            if (method == "geroldinger") opts.method = MinDeltaOptions::Method::geroldinger;
            if (method == "cf") opts.method = MinDeltaOptions::Method::cf;
            DeltaResult r = min_delta(s, opts);
            if (format == "json") {
                json j = to_json(r);
                j["schema"] = "mindelta/1";
                j["n"] = n;
                j["set"] = s.elements;
                out << j.dump() << "\n";
            } else if (format == "csv") {
                emit_csv_row(out, {"n", "set", "min_delta", "method"});
                emit_csv_row(out, {std::to_string(n), join_i64(s.elements), std::to_string(r.min_delta),
                                   method_name(r.method)});
            } else {
                out << "min_delta(" << s.text() << ") = " << r.min_delta << "  [" << method_name(r.method)
                    << "]\n";
            }
            return 0;
        }

        if (dstar_cmd->parsed()) {
            if (brute == closed_form)
                throw std::invalid_argument("delta-star needs exactly one of --brute and --closed-form");
            if (brute) {
                DeltaStarTable t = delta_star_bruteforce(n, slim);
                if (format == "json") {
                    json j = to_json(t);
                    j["schema"] = "deltastar/1";
                    out << j.dump() << "\n";
                } else if (format == "csv") {
                    emit_csv_row(out, {"value", "witness"});
                    for (i64 v : t.values)
                        for (auto& w : t.witnesses.at(v))
                            emit_csv_row(out, {std::to_string(v), join_i64(w.elements)});
                } else {
                    out << "delta-star(C_" << n << ") = {" << join_i64(t.values, ',') << "}\n";
                    for (i64 v : t.values) {
                        out << "  " << v << ":";
                        for (auto& w : t.witnesses.at(v)) out << " {" << join_i64(w.elements, ',') << "}";
                        out << "\n";
                    }
                }
            } else {
                Rat c0 = parse_rat(threshold);
                std::set<i64> vals = delta_star_closedform(n, c0);
                std::vector<i64> sorted(vals.begin(), vals.end());
                if (format == "json") {
                    json j{{"schema", "deltastar-closedform/1"},
                           {"n", n},
                           {"threshold", rat_text(c0)},
                           {"values", sorted}};
                    out << j.dump() << "\n";
                } else if (format == "csv") {
                    emit_csv_row(out, {"value"});
                    for (i64 v : sorted) emit_csv_row(out, {std::to_string(v)});
                } else {
                    out << "delta-star(C_" << n << ") above " << rat_text(c0) << "*n: {"
                        << join_i64(sorted, ',') << "}\n";
                }
            }
            return 0;
        }

        if (cf_cmd->parsed()) {
            if (format == "json") {
                json j{{"schema", "closedform/1"}, {"n", n}, {"which", which}};
                if (which == "m") {
                    json arr = json::array();
                    for (const MTriple& t : m_triples(n))
                        arr.push_back(json{{"c1", t.c1}, {"c2", t.c2}, {"d", t.d}, {"value", t.expected(n)}});
                    j["triples"] = arr;
                } else {
                    auto vals = which == "i" ? i_set(n) : j_set(n);
                    j["values"] = std::vector<i64>(vals.begin(), vals.end());
                }
                out << j.dump() << "\n";
            } else if (format == "csv") {
                if (which == "m") {
                    emit_csv_row(out, {"c1", "c2", "d", "value"});
                    for (const MTriple& t : m_triples(n))
                        emit_csv_row(out, {std::to_string(t.c1), std::to_string(t.c2), std::to_string(t.d),
                                           std::to_string(t.expected(n))});
                } else {
                    emit_csv_row(out, {"value"});
                    for (i64 v : which == "i" ? i_set(n) : j_set(n)) emit_csv_row(out, {std::to_string(v)});
                }
            } else {
                if (which == "m") {
                    out << "M(" << n << "):\n";
                    for (const MTriple& t : m_triples(n))
                        out << "  (" << t.c1 << "," << t.c2 << "," << t.d << ") -> " << t.expected(n) << "\n";
                } else {
                    auto vals = which == "i" ? i_set(n) : j_set(n);
                    out << (which == "i" ? "I(" : "J(") << n << ") = {"
                        << join_i64(std::vector<i64>(vals.begin(), vals.end()), ',') << "}\n";
                }
            }
            return 0;
        }

        if (inverse_cmd->parsed()) {
            if (do_search == do_predict)
                throw std::invalid_argument("inverse needs exactly one of --search and --predict");
            if (do_search) {
                auto hits = inverse_search(n, d, slim);
                if (format == "json") {
                    json j{{"schema", "inverse-search/1"}, {"n", n}, {"d", d}, {"hits", to_json(hits)}};
                    out << j.dump() << "\n";
                } else if (format == "csv") {
                    emit_csv_row(out, {"set", "zero_augmentable"});
                    for (auto& h : hits)
                        emit_csv_row(out, {join_i64(h.rep.elements), h.zero_augmentable ? "true" : "false"});
                } else {
                    out << hits.size() << " orbit(s) with min_delta " << d << " mod " << n << "\n";
                    for (auto& h : hits) out << "  {" << join_i64(h.rep.elements, ',') << "} (+0 variant)\n";
                }
            } else {
                auto fams = inverse_family_predict(n, d);
                if (format == "json") {
                    json arr = json::array();
                    for (auto& f : fams) arr.push_back(to_json(f));
                    json j{{"schema", "inverse-predict/1"}, {"n", n}, {"d", d}, {"families", arr}};
                    out << j.dump() << "\n";
                } else if (format == "csv") {
                    emit_csv_row(out, {"case", "q", "c1", "c2", "required", "allowed", "validity",
                                       "validity_met"});
                    for (auto& f : fams)
                        emit_csv_row(out, {f.case_tag, std::to_string(f.q), std::to_string(f.c1),
                                           std::to_string(f.c2), join_i64(f.required), join_i64(f.allowed),
                                           f.validity, f.validity_met ? "true" : "false"});
                } else {
                    for (auto& f : fams) {
                        out << f.case_tag << ": required {" << join_i64(f.required, ',') << "}*f, allowed {"
                            << join_i64(f.allowed, ',') << "}*f";
                        if (f.q) out << ", q=" << f.q;
                        if (f.c1) out << ", c1=" << f.c1 << ", c2=" << f.c2;
                        out << ", exhaustive when " << f.validity << (f.validity_met ? " (met)" : " (not met)")
                            << "\n";
                    }
                }
            }
            return 0;
        }

        if (classify_cmd->parsed()) {
            GroupSubset s = parse_set(n, set_list);
            HFReport r = classify_set(s, limits);
            auto pair = find_non_hf_pair(s, limits);
            if (format == "json") {
                json j = to_json(r);
                j["schema"] = "classify/1";
                j["n"] = n;
                j["set"] = s.elements;
                j["non_hf_pair"] = pair ? json(pair->elements) : json(nullptr);
                out << j.dump() << "\n";
            } else if (format == "csv") {
                emit_csv_row(out, {"n", "set", "hf", "whf_arithmetic", "whf_structural", "lcn", "non_hf_pair"});
                emit_csv_row(out, {std::to_string(n), join_i64(s.elements), r.hf ? "true" : "false",
                                   r.whf_arithmetic ? "true" : "false", r.whf_structural ? "true" : "false",
                                   r.lcn ? "true" : "false", pair ? join_i64(pair->elements) : ""});
            } else {
                out << s.text() << ": hf=" << (r.hf ? "yes" : "no")
                    << " whf=" << (r.whf_arithmetic ? "yes" : "no")
                    << " whf_structural=" << (r.whf_structural ? "yes" : "no")
                    << " lcn=" << (r.lcn ? "yes" : "no");
                if (r.witness_atom) out << " witness=" << r.witness_atom->text();
                if (pair)
                    out << " non_hf_pair={" << join_i64(pair->elements, ',') << "}";
                else
                    out << " non_hf_pair=none";
                out << "\n";
            }
            return 0;
        }

        if (chf_cmd->parsed()) {
            GroupSubset s = parse_set(n, set_list);
            bool result = truly ? is_truly_d_chf(s, d, limits) : is_d_chf(s, d, limits);
            if (format == "json") {
                json j{{"schema", "chf/1"}, {"n", n},      {"set", s.elements},
                       {"d", d},           {"truly", truly}, {"result", result}};
                out << j.dump() << "\n";
            } else if (format == "csv") {
                emit_csv_row(out, {"n", "set", "d", "truly", "result"});
                emit_csv_row(out, {std::to_string(n), join_i64(s.elements), std::to_string(d),
                                   truly ? "true" : "false", result ? "true" : "false"});
            } else {
                out << s.text() << " is " << (result ? "" : "not ") << (truly ? "truly " : "") << d
                    << "-congruence half-factorial\n";
            }
            return 0;
        }

        if (alpha_cmd->parsed()) {
            if (exact_mode && witness_mode)
                throw std::invalid_argument("alpha takes at most one of --exact and --witness");
            bool use_witness = witness_mode;
            AlphaBounds b = use_witness ? alpha_bounds_witness(n, d) : alpha_bounds_exact(n, d, slim);
            if (format == "json") {
                json j = to_json(b);
                j["schema"] = "alpha/1";
                j["n"] = n;
                j["d"] = d;
                j["mode"] = use_witness ? "witness" : "exact";
                out << j.dump() << "\n";
            } else if (format == "csv") {
                emit_csv_row(out, {"n", "d", "mode", "lower", "upper"});
                emit_csv_row(out, {std::to_string(n), std::to_string(d), use_witness ? "witness" : "exact",
                                   std::to_string(b.lower), b.upper ? std::to_string(*b.upper) : ""});
            } else {
                out << "alpha bounds for d=" << d << " mod " << n << ": lower=" << b.lower;
                if (b.upper)
                    out << " upper=" << *b.upper << "\n";
                else
                    out << " (witness mode, no upper bound)\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto [lo, hi] = parse_range(range);
            SuiteReport r = verify_suite(suite, lo, hi, slim);
            if (format == "json") {
                json j = to_json(r);
                j["schema"] = "suite/1";
                out << j.dump() << "\n";
            } else if (format == "csv") {
                emit_csv_row(out, {"suite", "n", "check", "status", "counterexample"});
                for (auto& e : r.entries)
                    emit_csv_row(out, {r.suite, std::to_string(e.n), e.check, e.pass ? "pass" : "fail",
                                       e.counterexample});
            } else {
                for (auto& e : r.entries) {
                    out << (e.pass ? "[pass] " : "[FAIL] ") << r.suite << " n=" << e.n << " " << e.check;
                    if (!e.pass) out << "  (" << e.counterexample << ")";
                    out << "\n";
                }
                out << (r.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
            }
            return r.all_pass() ? 0 : 1;
        }
    } catch (const budget_error& e) {
        err << "budget/cap error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace zsf
