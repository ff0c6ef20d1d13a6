// Command-line front end: JSON in, JSON or text reports out.
//
// Reports embed the input presentations and all invariant factors, so every
// claim can be recomputed by hand.  Exit codes: 0 success, 1 computation
// error, 2 schema error.  Unknown isomorphism decisions are reported
// outcomes, not failures.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fpf/json_io.hpp"
#include "fpf/linkage.hpp"
#include "fpf/selftest.hpp"
#include "fpf/testkit.hpp"

using nlohmann::json;
using namespace fpf;

namespace {

std::string read_payload(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw SchemaError("cannot open file " + arg.substr(1));
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return arg;
}

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw SchemaError(std::string(what) + ": malformed JSON");
    return j;
}

struct Options {
    std::string format = "text";
    std::uint64_t seed = 1;
    long budget = 4096;
};

IsoBudget make_budget(const Options& o) {
    IsoBudget b;
    b.max_enumeration = o.budget;
    b.random_trials = static_cast<int>(std::max(64L, o.budget / 64));
    b.seed = o.seed;
    return b;
}

std::string chain_str(const InvariantFactors& inv) { return inv.to_string(); }

json module_report(const RingSpec& ring, const FpModule& m) {
    json j;
    j["ring"] = ring_to_json(ring);
    j["module"] = module_to_json(m);
    j["invariant_factors"] = invariants_to_json(invariant_factors(m));
    j["zero"] = is_zero_module(m);
    j["projective"] = is_projective(m);
    return j;
}

void emit(const json& report, const Options& o,
          const std::string& text_rendering) {
    if (o.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text_rendering;
}

std::vector<FpModule> testbed_modules(const RingSpec& ring,
                                      const std::string& testbed_file,
                                      std::uint64_t seed) {
    if (testbed_file.empty()) return default_testbed(ring, seed).modules;
    json j = parse_json(read_payload("@" + testbed_file), "testbed");
    if (!j.is_array()) throw SchemaError("testbed: expected an array of modules");
    std::vector<FpModule> mods;
    for (const auto& mj : j) mods.push_back(module_from_json(mj, ring));
    if (mods.empty()) throw SchemaError("testbed: must be nonempty");
    return mods;
}

int run_module_cmd(const std::string& op, const RingSpec& ring,
                   const FpModule& m, const Options& o) {
    std::ostringstream text;
    json rep = module_report(ring, m);
    rep["op"] = "module " + op;
    if (op == "info") {
        text << "module over " << ring.to_string() << ": " << m.gens
             << " generators, " << m.rel.cols() << " relations\n"
             << "  invariant factors: "
             << chain_str(invariant_factors(m)) << "\n"
             << "  projective: " << (is_projective(m) ? "yes" : "no") << "\n";
    } else if (op == "tr" || op == "syzygy") {
        FpModule out = (op == "tr") ? transpose(m) : syzygy(m);
        rep["result"] = module_to_json(out);
        rep["result_ring"] = ring_to_json(out.ring);
        rep["result_invariant_factors"] =
            invariants_to_json(invariant_factors(out));
        text << op << " over " << ring.to_string() << " -> module over "
             << out.ring.to_string() << " with invariant factors "
             << chain_str(invariant_factors(out)) << "\n";
    } else if (op == "linked") {
        LinkageResult lr = linked_module(m);
        rep["linked"] = lr.linked;
        rep["stably_zero"] = lr.trace.stably_zero;
        json stages = json::array();
        static const char* names[] = {"M", "TrM", "OTrM", "TrOTrM", "OTrOTrM"};
        for (size_t i = 0; i < lr.trace.stages.size(); ++i) {
            json st;
            st["stage"] = names[i];
            st["module"] = module_to_json(lr.trace.stages[i]);
            st["invariant_factors"] =
                invariants_to_json(lr.trace.stage_invariants[i]);
            stages.push_back(st);
        }
        rep["trace"] = stages;
        text << "horizontally linked: " << (lr.linked ? "true" : "false")
             << (lr.trace.stably_zero ? " (stably zero)" : "") << "\n";
        for (size_t i = 0; i < lr.trace.stages.size(); ++i)
            text << "  " << names[i] << ": "
                 << chain_str(lr.trace.stage_invariants[i]) << "\n";
    }
    emit(rep, o, text.str());
    return 0;
}

int run_ext_tor(bool ext, int n, const RingSpec& ring, const FpModule& m,
                const FpModule& nn, const Options& o) {
    FpModule v = ext ? ext_value(n, m, nn) : tor_value(n, m, nn);
    json rep;
    rep["op"] = std::string(ext ? "ext" : "tor") + " n=" + std::to_string(n);
    rep["ring"] = ring_to_json(ring);
    rep["M"] = module_to_json(m);
    rep["N"] = module_to_json(nn);
    rep["value"] = module_to_json(v);
    rep["invariant_factors"] = invariants_to_json(invariant_factors(v));
    std::ostringstream text;
    text << (ext ? "Ext^" : "Tor_") << n << " over " << ring.to_string()
         << ": " << chain_str(invariant_factors(v)) << "\n";
    emit(rep, o, text.str());
    return 0;
}

const char* verdict_name(IsoDecision::Verdict v) {
    switch (v) {
        case IsoDecision::Verdict::yes: return "yes";
        case IsoDecision::Verdict::no: return "no";
        default: return "unknown";
    }
}

int run_functor_cmd(const std::string& op, const RingSpec& ring,
                    const FpFunctor& f, const FpModule* at, int k,
                    const std::string& testbed_file, const Options& o) {
    json rep;
    rep["op"] = "functor " + op;
    rep["ring"] = ring_to_json(ring);
    rep["functor"] = functor_to_json(f);
    std::ostringstream text;
    if (op == "eval") {
        FpModule v = evaluate(f, *at);
        rep["at"] = module_to_json(*at);
        rep["value"] = module_to_json(v);
        rep["invariant_factors"] = invariants_to_json(invariant_factors(v));
        text << "F(A) over " << ring.to_string() << ": "
             << chain_str(invariant_factors(v)) << "\n";
    } else if (op == "dual" || op == "satellite") {
        FpFunctor out = (op == "dual") ? dual(f) : satellite(f, k);
        rep["result"] = functor_to_json(out);
        rep["result_ring"] = ring_to_json(out.ring);
        if (op == "satellite") rep["k"] = k;
        text << op << (op == "satellite" ? " k=" + std::to_string(k) : "")
             << " -> functor over " << out.ring.to_string() << " with arrow "
             << out.x().to_string() << " -> " << out.y().to_string() << "\n";
    } else if (op == "defect") {
        FpModule w = defect(f);
        rep["value"] = module_to_json(w);
        rep["invariant_factors"] = invariants_to_json(invariant_factors(w));
        text << "defect: " << chain_str(invariant_factors(w)) << "\n";
    } else if (op == "linked") {
        IsoDecision d = linked_functor(
            f, make_budget(o), testbed_modules(ring, testbed_file, o.seed));
        rep["verdict"] = verdict_name(d.verdict);
        rep["note"] = d.note;
        if (d.certificate)
            rep["certificate_module"] = module_to_json(*d.certificate);
        text << "horizontally linked: " << verdict_name(d.verdict);
        if (!d.note.empty()) text << " (" << d.note << ")";
        text << "\n";
    }
    emit(rep, o, text.str());
    return 0;
}

int run_linkage_table(const RingSpec& ring, const Options& o) {
    if (ring.kind != RingKind::integers_mod)
        throw std::invalid_argument("linkage-table: requires a Zmod ring");
    if (!ring.modulus.fits_slong_p())
        throw std::invalid_argument("linkage-table: modulus too large");
    long n = ring.modulus.get_si();
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);

    const int rows = static_cast<int>(divisors.size());
    std::vector<LinkageResult> results(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < rows; ++i)
        results[i] = linked_module(FpModule::cyclic(ring, divisors[i]));

    json rep;
    rep["op"] = "linkage-table";
    rep["ring"] = ring_to_json(ring);
    json tab = json::array();
    std::ostringstream text;
    text << "linkage table over " << ring.to_string() << ":\n";
    for (int i = 0; i < rows; ++i) {
        json row;
        row["d"] = divisors[i];
        row["linked"] = results[i].linked;
        row["stably_zero"] = results[i].trace.stably_zero;
        json chains = json::array();
        for (const auto& inv : results[i].trace.stage_invariants)
            chains.push_back(inv.to_string());
        row["trace"] = chains;
        tab.push_back(row);
        text << "  R/(" << divisors[i] << "): linked="
             << (results[i].linked ? "true" : "false")
             << (results[i].trace.stably_zero ? " [stably zero]" : "")
             << "  chain:";
        for (const auto& inv : results[i].trace.stage_invariants)
            text << " " << inv.to_string();
        text << "\n";
    }
    rep["rows"] = tab;
    emit(rep, o, text.str());
    return 0;
}

int run_selftest(const RingSpec& ring, const Options& o) {
    SelftestReport r = selftest(ring, o.seed, make_budget(o));
    json rep;
    rep["op"] = "selftest";
    rep["ring"] = ring_to_json(ring);
    rep["seed"] = o.seed;
    json suites = json::array();
    std::ostringstream text;
    text << "selftest over " << ring.to_string() << " (seed " << o.seed
         << ")\n";
    for (const auto& s : r.suites) {
        json sj;
        sj["name"] = s.name;
        sj["checks"] = s.checks;
        sj["failures"] = s.failures;
        sj["skipped"] = s.skipped;
        if (!s.failure_notes.empty()) sj["notes"] = s.failure_notes;
        suites.push_back(sj);
        text << "  [" << (s.failures == 0 ? "pass" : "FAIL") << "] " << s.name
             << ": " << s.checks << " checks";
        if (s.skipped) text << ", " << s.skipped << " skipped";
        if (s.failures) text << ", " << s.failures << " FAILURES";
        text << "\n";
        for (const auto& note : s.failure_notes)
            text << "      " << note << "\n";
    }
    rep["ok"] = r.ok();
    text << (r.ok() ? "all suites passed\n" : "FAILURES present\n");
    emit(rep, o, text.str());
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for finitely presented functors over Z, "
                 "Z/n and GF(p)"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::string ring_str = "Z", format = "text";
    std::string module_str, m_str, n_str, functor_str, at_str, testbed_file;
    int ext_n = 1, sat_k = 1;

    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for generators and searches");
    app.add_option("--budget", opt.budget,
                   "isomorphism search budget (candidate count)");

    auto add_ring = [&](CLI::App* c) {
        c->add_option("--ring", ring_str,
                      "ring: Z | Zmod:<n> | GFp:<p> | JSON");
    };

    CLI::App* mod = app.add_subcommand("module", "module-level operations");
    mod->fallthrough();
    add_ring(mod);
    mod->add_option("--module", module_str, "module JSON, @file or -")
        ->required();
    CLI::App* mod_info = mod->add_subcommand("info", "invariant factors");
    CLI::App* mod_tr = mod->add_subcommand("tr", "transpose");
    CLI::App* mod_syz = mod->add_subcommand("syzygy", "syzygy module");
    CLI::App* mod_linked =
        mod->add_subcommand("linked", "horizontal linkage with trace");
    mod->require_subcommand(1);

    CLI::App* ext = app.add_subcommand("ext", "Ext^n(M,N)");
    add_ring(ext);
    ext->add_option("--n", ext_n, "degree n >= 0");
    ext->add_option("--M", m_str, "module JSON, @file or -")->required();
    ext->add_option("--N", n_str, "module JSON, @file or -")->required();

    CLI::App* tor = app.add_subcommand("tor", "Tor_n(M,N)");
    add_ring(tor);
    tor->add_option("--n", ext_n, "degree n >= 0");
    tor->add_option("--M", m_str, "module JSON, @file or -")->required();
    tor->add_option("--N", n_str, "module JSON, @file or -")->required();

    CLI::App* fun = app.add_subcommand("functor", "functor-level operations");
    fun->fallthrough();
    add_ring(fun);
    fun->add_option("--functor", functor_str, "functor JSON, @file or -")
        ->required();
    CLI::App* fun_eval = fun->add_subcommand("eval", "evaluate at a module");
    fun_eval->add_option("--at", at_str, "module JSON, @file or -")
        ->required();
    CLI::App* fun_dual =
        fun->add_subcommand("dual", "Auslander-Gruson-Jensen dual");
    CLI::App* fun_sat = fun->add_subcommand("satellite", "satellite S^k/S_k");
    fun_sat->add_option("--k", sat_k, "satellite index (negative = left)");
    CLI::App* fun_defect = fun->add_subcommand("defect", "defect module w(F)");
    CLI::App* fun_linked =
        fun->add_subcommand("linked", "horizontal linkage of the functor");
    fun_linked->add_option("--testbed", testbed_file,
                           "JSON file with an array of test modules");
    fun->require_subcommand(1);

    CLI::App* table =
        app.add_subcommand("linkage-table", "linkage of R/(d) for all d | n");
    add_ring(table);

    CLI::App* st = app.add_subcommand("selftest", "run the property suites");
    add_ring(st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opt.format = format;
    try {
        RingSpec ring = ring_from_string(ring_str);
        if (mod->parsed()) {
            FpModule m = module_from_json(
                parse_json(read_payload(module_str), "module"), ring);
            std::string op = mod_info->parsed()  ? "info"
                             : mod_tr->parsed()  ? "tr"
                             : mod_syz->parsed() ? "syzygy"
                                                 : "linked";
            (void)mod_linked;
            return run_module_cmd(op, ring, m, opt);
        }
        if (ext->parsed() || tor->parsed()) {
            if (ext_n < 0) throw SchemaError("--n must be >= 0");
            FpModule m =
                module_from_json(parse_json(read_payload(m_str), "M"), ring);
            FpModule n =
                module_from_json(parse_json(read_payload(n_str), "N"), ring);
            return run_ext_tor(ext->parsed(), ext_n, ring, m, n, opt);
        }
        if (fun->parsed()) {
            FpFunctor f = functor_from_json(
                parse_json(read_payload(functor_str), "functor"), ring);
            std::string op = fun_eval->parsed()     ? "eval"
                             : fun_dual->parsed()   ? "dual"
                             : fun_sat->parsed()    ? "satellite"
                             : fun_defect->parsed() ? "defect"
                                                    : "linked";
            (void)fun_linked;
            FpModule at = FpModule::zero(ring);
            if (fun_eval->parsed())
                at = module_from_json(parse_json(read_payload(at_str), "at"),
                                      ring);
            return run_functor_cmd(op, ring, f,
                                   fun_eval->parsed() ? &at : nullptr, sat_k,
                                   testbed_file, opt);
        }
        if (table->parsed()) return run_linkage_table(ring, opt);
        if (st->parsed()) return run_selftest(ring, opt);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
