#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deltaj/checks.hpp"
#include "deltaj/classify.hpp"
#include "deltaj/corpus.hpp"
#include "deltaj/error.hpp"
#include "deltaj/expansion.hpp"
#include "deltaj/lattice.hpp"
#include "deltaj/report.hpp"
#include "deltaj/ring_spec.hpp"
#include "deltaj/search.hpp"

namespace deltaj {

namespace detail {

// Expansion table file: a JSON array of ["gens", "gens"] pairs mapping each
// ideal of the ring (by a generator list) to its image. Must cover every
// ideal exactly once and satisfy the expansion axioms.
inline ExpansionFn load_table_expansion(const RingPtr& R, const LatticePtr& lat,
                                        const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open expansion table file '" + path + "'");
    json spec;
    try {
        in >> spec;
    } catch (const std::exception& e) {
        throw parse_error("expansion table '" + path + "' is not valid JSON: " +
                          std::string(e.what()));
    }
    if (!spec.is_array())
        throw parse_error("expansion table must be a JSON array of [\"gens\", \"gens\"] pairs");
    std::vector<int> table(lat->count(), -1);
    for (const json& row : spec) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_string() || !row[1].is_string())
            throw parse_error("expansion table rows must be [\"gens\", \"gens\"] string pairs");
        int src = lat->find(parse_ideal(R, row[0].get<std::string>()));
        int dst = lat->find(parse_ideal(R, row[1].get<std::string>()));
        if (table[src] != -1)
            throw domain_error("expansion table assigns " + lat->at(src).display() + " twice");
        table[src] = dst;
    }
    for (int i = 0; i < lat->count(); ++i)
        if (table[i] == -1)
            throw domain_error("expansion table gives no image for " + lat->at(i).display());
    std::string base = path;
    if (auto slash = base.find_last_of("/\\"); slash != std::string::npos)
        base = base.substr(slash + 1);
    return make_table_expansion(R, lat, std::move(table), "table:" + base);
}

}  // namespace detail

inline ExpansionFn parse_expansion_selector(const RingPtr& R, const LatticePtr& lat,
                                            const std::string& sel) {
    if (sel == "delta0") return make_identity_expansion(R, lat);
    if (sel == "delta1") return make_radical_expansion(R, lat);
    if (sel.rfind("plusM:", 0) == 0)
        return make_add_ideal_expansion(R, lat, parse_ideal(R, sel.substr(6)));
    if (sel.rfind("table:", 0) == 0) return detail::load_table_expansion(R, lat, sel.substr(6));
    throw parse_error("unknown expansion selector '" + sel +
                      "' (expected delta0 | delta1 | plusM:<gens> | table:<file>)");
}

namespace detail {

inline const char* yn(bool b) { return b ? "yes" : "no"; }

inline std::string witness_text(const FiniteRing& R, const std::pair<int, int>& w) {
    return "(" + R.name(w.first) + "," + R.name(w.second) + ")";
}

inline int ring_characteristic(const FiniteRing& R) {
    int k = 1;
    for (int a = R.one; a != R.zero; a = R.add(a, R.one)) ++k;
    return k;
}

inline json info_json(const RingPtr& R, const IdealLattice& lat) {
    int units = 0;
    for (int a = 0; a < R->order; ++a)
        if (R->is_unit(a)) ++units;
    int maximal = 0;
    for (int i = 0; i < lat.count(); ++i)
        if (lat.is_maximal[i]) ++maximal;
    json j;
    j["ring"] = R->spec;
    j["order"] = R->order;
    j["zero"] = R->name(R->zero);
    j["one"] = R->name(R->one);
    j["characteristic"] = ring_characteristic(*R);
    j["units"] = units;
    j["ideals"] = lat.count();
    j["maximal_ideals"] = maximal;
    j["jacobson"] = lat.at(lat.jacobson_idx).display();
    j["quasi_local"] = lat.quasi_local;
    return j;
}

inline void cmd_info(const std::string& spec, bool as_json, std::ostream& out) {
    RingPtr R = make_ring(spec);
    LatticePtr lat = all_ideals(R);
    json j = info_json(R, *lat);
    if (as_json) {
        out << j.dump(2) << "\n";
        return;
    }
    out << "ring            " << j["ring"].get<std::string>() << "\n"
        << "order           " << j["order"].get<int>() << "\n"
        << "zero            " << j["zero"].get<std::string>() << "\n"
        << "one             " << j["one"].get<std::string>() << "\n"
        << "characteristic  " << j["characteristic"].get<int>() << "\n"
        << "units           " << j["units"].get<int>() << "\n"
        << "ideals          " << j["ideals"].get<int>() << "\n"
        << "maximal ideals  " << j["maximal_ideals"].get<int>() << "\n"
        << "jacobson        " << j["jacobson"].get<std::string>() << "\n"
        << "quasi-local     " << yn(j["quasi_local"].get<bool>()) << "\n";
}

inline void cmd_ideals(const std::string& spec, bool as_json, std::ostream& out) {
    RingPtr R = make_ring(spec);
    LatticePtr lat = all_ideals(R);
    json rows = json::array();
    for (int i = 0; i < lat->count(); ++i) {
        json r;
        r["ideal"] = lat->at(i).display();
        r["size"] = static_cast<int>(lat->at(i).members.size());
        r["principal"] = lat->is_principal[i] != 0;
        r["prime"] = lat->is_prime[i] != 0;
        r["maximal"] = lat->is_maximal[i] != 0;
        r["primary"] = lat->is_primary[i] != 0;
        r["superfluous"] = lat->is_superfluous_f[i] != 0;
        rows.push_back(std::move(r));
    }
    if (as_json) {
        json j;
        j["ring"] = R->spec;
        j["count"] = lat->count();
        j["ideals"] = std::move(rows);
        out << j.dump(2) << "\n";
        return;
    }
    for (const json& r : rows) {
        std::ostringstream line;
        line << std::left << std::setw(16) << r["ideal"].get<std::string>() << " size="
             << std::setw(4) << r["size"].get<int>();
        for (const char* f : {"principal", "prime", "maximal", "primary", "superfluous"})
            if (r[f].get<bool>()) line << " " << f;
        out << line.str() << "\n";
    }
    out << R->spec << ": " << lat->count() << " ideals\n";
}

inline void cmd_classify(const std::string& spec, const std::string& gens,
                         const std::string& delta_sel, bool as_json, std::ostream& out) {
    RingPtr R = make_ring(spec);
    LatticePtr lat = all_ideals(R);
    Ideal I = parse_ideal(R, gens);
    std::vector<ExpansionFn> deltas;
    if (delta_sel.empty()) deltas = registered_expansions(R, lat);
    else deltas.push_back(parse_expansion_selector(R, lat, delta_sel));
    IdealProfile p = ideal_profile(lat, I, deltas);
    if (as_json) {
        out << profile_to_json(p).dump(2) << "\n";
        return;
    }
    out << "ring " << R->spec << "  ideal " << I.display() << "\n";
    auto flag = [&](const char* name, bool v, const std::string& w) {
        out << "  " << std::left << std::setw(15) << name << yn(v);
        if (!w.empty()) out << "  witness " << w;
        out << "\n";
    };
    auto pw = [&](const std::optional<std::pair<int, int>>& w) {
        return w ? witness_text(*R, *w) : std::string();
    };
    flag("proper", p.proper, "");
    flag("prime", p.prime, pw(p.prime_witness));
    flag("maximal", p.maximal, p.maximal_witness);
    flag("primary", p.primary, pw(p.primary_witness));
    flag("superfluous", p.superfluous, p.superfluous_witness);
    flag("n_ideal", p.n_ideal, pw(p.n_ideal_witness));
    flag("J_ideal", p.J_ideal, pw(p.J_ideal_witness));
    flag("quasi_J_ideal", p.quasi_J_ideal, pw(p.quasi_J_ideal_witness));
    for (const ExpansionProfile& ep : p.expansions) {
        out << "  expansion " << ep.delta << "\n";
        auto sub = [&](const char* name, bool v, const std::optional<std::pair<int, int>>& w) {
            out << "    " << std::left << std::setw(15) << name << yn(v);
            if (w) out << "  witness " << witness_text(*R, *w);
            out << "\n";
        };
        sub("delta_primary", ep.delta_primary, ep.delta_primary_witness);
        sub("delta_n_ideal", ep.delta_n_ideal, ep.delta_n_ideal_witness);
        sub("delta_J_ideal", ep.delta_J_ideal, ep.delta_J_ideal_witness);
    }
}

inline void print_outcome_text(const CheckOutcome& o, const char* label, std::ostream& out) {
    out << "    " << label << ": " << outcome_to_text(o) << "\n";
    for (const std::string& n : o.notes) out << "      note: " << n << "\n";
    for (const json& c : o.counterexamples) out << "      cex: " << c.dump() << "\n";
}

inline bool cmd_verify(std::vector<std::string> ids, const CorpusConfig& cfg,
                       const CheckOptions& opt, bool as_json, std::ostream& out) {
    if (ids.empty()) ids = all_check_ids();
    Corpus corpus = generate_corpus(cfg);
    std::vector<CheckReport> reports;
    for (const std::string& id : ids) reports.push_back(run_check(id, corpus, opt));
    bool all_pass = std::all_of(reports.begin(), reports.end(),
                                [](const CheckReport& r) { return r.pass(); });
    if (as_json) {
        json j;
        j["command"] = "verify";
        j["rings"] = static_cast<int>(corpus.rings.size());
        json arr = json::array();
        for (const CheckReport& r : reports) arr.push_back(report_to_json(r));
        j["reports"] = std::move(arr);
        j["outcome"] = all_pass ? "pass" : "fail";
        out << j.dump(2) << "\n";
        return all_pass;
    }
    out << "corpus: " << corpus.rings.size() << " rings\n";
    for (const CheckReport& r : reports) {
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << r.seconds;
        out << r.id << "  " << (r.pass() ? (r.vacuous() ? "pass (VACUOUS)" : "pass") : "FAIL")
            << "  (" << secs.str() << "s)\n";
        for (const CheckPart& p : r.parts) {
            out << "  " << p.id << "  " << p.what << "\n";
            print_outcome_text(p.gating, "gating", out);
            if (p.stated) print_outcome_text(*p.stated, "stated", out);
        }
    }
    long passed = std::count_if(reports.begin(), reports.end(),
                                [](const CheckReport& r) { return r.pass(); });
    out << passed << "/" << reports.size() << " checks pass\n";
    return all_pass;
}

inline void cmd_search(const std::string& tmpl, const CorpusConfig& cfg, bool as_json,
                       std::ostream& out) {
    Corpus corpus = generate_corpus(cfg);
    std::vector<json> hits = search_counterexample(tmpl, corpus);
    if (as_json) {
        json j;
        j["command"] = "search";
        j["template"] = tmpl;
        j["count"] = static_cast<int>(hits.size());
        j["witnesses"] = hits;
        out << j.dump(2) << "\n";
        return;
    }
    out << "template: " << tmpl << "\n";
    for (const json& h : hits) {
        out << "  ring=" << h["ring"].get<std::string>();
        if (h.contains("ideal")) out << " ideal=" << h["ideal"].get<std::string>();
        if (h.contains("delta")) out << " delta=" << h["delta"].get<std::string>();
        out << "\n";
    }
    out << hits.size() << " witnesses\n";
}

}  // namespace detail

// Front end over the library; returns the process exit code. 0: success
// (verify additionally requires every requested check to pass or be
// vacuous); 1: a domain precondition was violated or a check failed;
// 2: unusable command line.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite commutative ring workbench: ideal expansions and delta-J classification"};
    app.name("deltaj");
    app.require_subcommand(1);

    std::string format = "text";
    std::string ring_spec, ideal_gens, delta_sel, tmpl;
    std::vector<std::string> check_ids;
    bool run_all = false;
    CorpusConfig cfg;
    CheckOptions opt;
    std::string typo = "corrected";
    bool no_poly = false, no_idealizations = false, no_quotients = false;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "output form")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto add_corpus = [&](CLI::App* c) {
        c->add_option("--zn-max", cfg.zn_max, "largest cyclic ring Z_n")->capture_default_str();
        c->add_option("--prod-max", cfg.prod_max, "largest product ring order")
            ->capture_default_str();
        c->add_flag("--no-poly", no_poly, "omit the polynomial quotient rings");
        c->add_flag("--no-idealizations", no_idealizations, "omit the idealization rings");
        c->add_option("--idealization-cap", cfg.idealization_cap, "largest idealization order")
            ->capture_default_str();
        c->add_flag("--no-quotients", no_quotients, "omit the quotient rings");
    };

    CLI::App* c_info = app.add_subcommand("info", "basic structure of one ring");
    c_info->add_option("--ring", ring_spec, "ring spec")->required();
    add_format(c_info);

    CLI::App* c_ideals = app.add_subcommand("ideals", "list every ideal of one ring");
    c_ideals->add_option("--ring", ring_spec, "ring spec")->required();
    add_format(c_ideals);

    CLI::App* c_classify = app.add_subcommand("classify", "classification profile of one ideal");
    c_classify->add_option("--ring", ring_spec, "ring spec")->required();
    c_classify->add_option("--ideal", ideal_gens, "ideal generator list")->required();
    c_classify->add_option("--delta", delta_sel,
                           "expansion selector (delta0 | delta1 | plusM:<gens> | table:<file>); "
                           "default: all registered expansions");
    add_format(c_classify);

    CLI::App* c_verify = app.add_subcommand("verify", "run named checks over a generated corpus");
    c_verify->add_option("--check", check_ids, "check ids (repeatable)");
    c_verify->add_flag("--all", run_all, "run every check");
    c_verify->add_option("--typo-reading", typo,
                         "which reading gates checks whose statement contradicts its proof")
        ->check(CLI::IsMember({"corrected", "stated"}))
        ->capture_default_str();
    c_verify->add_option("--stated-cex-cap", opt.stated_cex_cap,
                         "counterexample cap for non-gating readings (-1: unlimited)")
        ->capture_default_str();
    add_corpus(c_verify);
    add_format(c_verify);

    CLI::App* c_search = app.add_subcommand("search", "scan a corpus for tuples matching a template");
    c_search->add_option("--template", tmpl, "conjunctive template over the classification flags")
        ->required();
    add_corpus(c_search);
    add_format(c_search);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    cfg.poly = !no_poly;
    cfg.idealizations = !no_idealizations;
    cfg.quotients = !no_quotients;
    opt.typo = typo == "stated" ? TypoReading::stated : TypoReading::corrected;
    bool as_json = format == "json";

    try {
        if (c_info->parsed()) {
            detail::cmd_info(ring_spec, as_json, out);
            return 0;
        }
        if (c_ideals->parsed()) {
            detail::cmd_ideals(ring_spec, as_json, out);
            return 0;
        }
        if (c_classify->parsed()) {
            detail::cmd_classify(ring_spec, ideal_gens, delta_sel, as_json, out);
            return 0;
        }
        if (c_verify->parsed()) {
            if (run_all == !check_ids.empty()) {
                err << "verify: pass either --all or at least one --check\n";
                return 2;
            }
            return detail::cmd_verify(check_ids, cfg, opt, as_json, out) ? 0 : 1;
        }
        if (c_search->parsed()) {
            detail::cmd_search(tmpl, cfg, as_json, out);
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command given\n";
    return 2;
}

}  // namespace deltaj
