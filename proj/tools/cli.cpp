#include "cli.hpp"

#include <qlwb/axioms.hpp>
#include <qlwb/caps.hpp>
#include <qlwb/completion.hpp>
#include <qlwb/corpus.hpp>
#include <qlwb/deciders.hpp>
#include <qlwb/diagrams.hpp>
#include <qlwb/embedding.hpp>
#include <qlwb/error.hpp>
#include <qlwb/factors.hpp>
#include <qlwb/model_search.hpp>
#include <qlwb/quantum.hpp>
#include <qlwb/quantum_io.hpp>
#include <qlwb/states.hpp>
#include <qlwb/structure_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace qlwb::cli {

namespace {

using nlohmann::json;

struct Report
{
    std::string verdict = "done";
    json result = json::object();
    std::string text;
    std::optional<std::uint64_t> seed;
};

auto verdict_exit(const std::string & verdict) -> int
{
    if (verdict == "valid" || verdict == "true" || verdict == "found" || verdict == "done")
        return exit_ok;
    if (verdict == "invalid" || verdict == "false" || verdict == "not_found")
        return exit_negative;
    return exit_unknown;
}

auto ends_with(const std::string & s, std::string_view suffix) -> bool
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

auto is_diagram_location(const std::string & loc) -> bool
{
    if (is_corpus_uri(loc))
        return corpus_entry(loc.substr(7)).kind == CorpusKind::diagram;
    return ends_with(loc, ".gd");
}

auto load_structure(const std::string & loc) -> StructureTable
{
    if (is_corpus_uri(loc))
        return corpus_structure(loc.substr(7));
    auto text = read_text_file(loc);
    if (ends_with(loc, ".gd"))
        return paste_to_omp(parse_greechie(text));
    return parse_struct(text);
}

auto labels_json(const StructureTable & s, const std::vector<Element> & elements) -> json
{
    json out = json::array();
    for (auto e : elements)
        out.push_back(s.label(e));
    return out;
}

auto structure_json(const StructureTable & s) -> json
{
    return {{"size", s.size()}, {"labels", s.labels()}};
}

auto witness_json(const StructureTable & s, const Witness & w) -> json
{
    return {{"law", law_name(w.law)}, {"elements", labels_json(s, w.elements)}};
}

auto state_json(const StructureTable & s, const State & st) -> json
{
    json out = json::object();
    for (Element e = 0; e < s.size(); ++e)
        out[s.label(e)] = format_rational(st.values[e]);
    return out;
}

auto pair_text(const StructureTable & s, std::pair<Element, Element> p) -> std::string
{
    return "(" + s.label(p.first) + ", " + s.label(p.second) + ")";
}

auto assignment_json(const StructureTable & s, const Assignment & a) -> json
{
    json out = json::object();
    for (auto & [name, e] : a)
        out[name] = s.label(e);
    return out;
}

auto emit_structure(Report & r, const StructureTable & s, const std::string & out_path)
{
    auto text = write_struct(s);
    if (out_path.empty())
        r.text += text;
    else {
        write_text_file(out_path, text);
        r.text += "written: " + out_path + "\n";
        r.result["out"] = out_path;
    }
    r.result["structure"] = structure_json(s);
    r.result["struct"] = text;
}

// check

auto cmd_check(const std::string & in, const std::string & require) -> Report
{
    auto s = load_structure(in);
    auto rep = check_axioms(s);
    Report r;
    std::ostringstream text;
    text << "structure: " << in << " (" << s.size() << " elements)\n";
    std::pair<const char *, const LawCheck *> rows[] = {
        {"lattice", &rep.lattice}, {"ol", &rep.ol}, {"omp", &rep.omp},
        {"oml", &rep.oml}, {"mol", &rep.mol}, {"boolean", &rep.boolean}};
    json props = json::object();
    for (auto [name, check] : rows) {
        text << "is_" << name << ": " << (check->holds ? "true" : "false");
        json p = {{"holds", check->holds}};
        if (check->witness) {
            text << "  witness " << describe(s, *check->witness);
            p["witness"] = witness_json(s, *check->witness);
        }
        text << '\n';
        props[name] = p;
    }
    r.result = {{"input", in}, {"size", s.size()}, {"properties", props}};
    if (! require.empty()) {
        bool holds = props.at(require).at("holds").get<bool>();
        r.verdict = holds ? "true" : "false";
        r.result["require"] = require;
        text << "require " << require << ": " << r.verdict << '\n';
    }
    r.text = text.str();
    return r;
}

// completions

auto cmd_macneille(const std::string & in, const std::string & out_path) -> Report
{
    auto p = load_structure(in);
    auto c = p.has_ortho() ? macneille_ortho(p) : macneille(p);
    Report r;
    r.text = "macneille: " + std::to_string(p.size()) + " -> " + std::to_string(c.lattice.size()) + " elements\n";
    r.result["input_size"] = p.size();
    r.result["embedding"] = labels_json(c.lattice, c.embedding);
    if (c.lattice.has_ortho())
        r.result["is_ol"] = check_axioms(c.lattice).is_ol();
    emit_structure(r, c.lattice, out_path);
    return r;
}

auto cmd_kalmbach(const std::string & in, const std::string & out_path, int max_chains) -> Report
{
    auto p = load_structure(in);
    auto k = kalmbach(p, max_chains);
    Report r;
    r.text = "kalmbach: " + std::to_string(p.size()) + " -> " + std::to_string(k.size()) + " elements\n";
    r.result["input_size"] = p.size();
    r.result["is_omp"] = is_omp(k);
    emit_structure(r, k, out_path);
    return r;
}

// decide

struct DecideOptions
{
    std::string theory = "oml";
    std::string equation;
    int max_model_size = 8;
    long max_proof_steps = 20000;
    double timeout = 10.0;
    std::uint64_t seed = 1;
    std::vector<std::string> catalog;
};

auto counterexample_json(const Counterexample & c) -> json
{
    return {{"model", c.model_name}, {"model_size", c.model.size()},
        {"assignment", assignment_json(c.model, c.assignment)}, {"struct", write_struct(c.model)}};
}

auto theory_allows(const std::string & theory, const AxiomReport & rep) -> bool
{
    if (theory == "ba")
        return rep.is_boolean();
    if (theory == "ol")
        return rep.is_ol();
    return rep.is_oml();
}

auto decide_quasi(const DecideOptions & o) -> Report
{
    auto q = parse_quasi_equation(o.equation);
    std::vector<std::pair<std::string, StructureTable>> catalog;
    if (o.catalog.empty()) {
        for (auto & [name, s] : corpus_structures())
            if (theory_allows(o.theory, check_axioms(s)))
                catalog.emplace_back(name, s);
        if (o.theory == "ol" || o.theory == "oml") {
            auto th = o.theory == "ol" ? Theory::ol : Theory::oml;
            for (int n = 2; n <= std::min(o.max_model_size, 8); n += 2) {
                const auto & models = models_of_size(th, n);
                for (std::size_t i = 0; i < models.size(); ++i)
                    catalog.emplace_back(o.theory + "-" + std::to_string(n) + "#" + std::to_string(i + 1), models[i]);
            }
        }
    }
    else {
        for (auto & loc : o.catalog) {
            auto s = load_structure(loc);
            if (! theory_allows(o.theory, check_axioms(s)))
                throw PreconditionError("catalog structure " + loc + " is not a model of " + o.theory);
            catalog.emplace_back(loc, s);
        }
    }
    auto c = quasi_counterexample(q, catalog);
    Report r;
    r.seed = o.seed;
    r.result = {{"theory", o.theory}, {"quasi_equation", to_string(q)}, {"catalog_size", catalog.size()}};
    std::ostringstream text;
    if (c) {
        r.verdict = "invalid";
        r.result["counterexample"] = counterexample_json(*c);
        text << "invalid: " << to_string(q) << '\n';
        text << "model: " << c->model_name << " (" << c->model.size() << " elements)\nassignment:";
        for (auto & [name, e] : c->assignment)
            text << ' ' << name << '=' << c->model.label(e);
        text << "\nmodel structure:\n" << write_struct(c->model);
    }
    else {
        r.verdict = "unknown";
        text << "unknown: no counterexample among " << catalog.size() << " catalog structures\n";
    }
    r.text = text.str();
    return r;
}

auto cmd_decide(const DecideOptions & o) -> Report
{
    if (o.equation.find("=>") != std::string::npos)
        return decide_quasi(o);
    auto eq = parse_equation(o.equation);
    Verdict v;
    if (o.theory == "ba")
        v = decide_ba(eq);
    else if (o.theory == "oml2")
        v = decide_oml2(eq);
    else {
        FepBudget budget;
        budget.max_model_size = o.max_model_size;
        budget.max_proof_steps = o.max_proof_steps;
        budget.timeout_seconds = o.timeout;
        v = fep_decide(o.theory == "ol" ? Theory::ol : Theory::oml, eq, budget);
    }
    Report r;
    r.seed = o.seed;
    r.verdict = verdict_name(v.kind);
    r.result = {{"theory", o.theory}, {"equation", to_string(eq)}, {"method", v.method}};
    r.text = format_verdict(eq, v);
    if (v.proof) {
        r.result["proof"] = format_proof(*v.proof);
        r.result["proof_steps"] = v.proof->steps.size();
    }
    if (v.counterexample) {
        r.result["counterexample"] = counterexample_json(*v.counterexample);
        r.text += "model structure:\n" + write_struct(v.counterexample->model);
    }
    return r;
}

// states

auto cmd_states(const std::string & in, const std::string & mode, const std::string & lp_file, int pure_cap) -> Report
{
    auto s = load_structure(in);
    Report r;
    std::ostringstream text;
    r.result["input"] = in;
    r.result["mode"] = mode;
    if (mode == "two-valued") {
        auto states = two_valued_states(s);
        json list = json::array();
        text << states.size() << " two-valued states\n";
        for (auto & st : states) {
            list.push_back(state_json(s, st));
            text << format_state(s, st) << '\n';
        }
        r.result["states"] = list;
        r.verdict = states.empty() ? "not_found" : "found";
    }
    else if (mode == "concrete") {
        auto c = is_concrete(s);
        r.verdict = c.concrete ? "true" : "false";
        text << "concrete: " << r.verdict << '\n';
        json fam = json::array();
        for (auto & st : c.family) {
            fam.push_back(state_json(s, st));
            text << format_state(s, st) << '\n';
        }
        r.result["family"] = fam;
        if (c.failing_pair) {
            text << "unseparated pair: " << pair_text(s, *c.failing_pair) << '\n';
            r.result["failing_pair"] = {s.label(c.failing_pair->first), s.label(c.failing_pair->second)};
        }
    }
    else if (mode == "sod") {
        auto d = strongly_order_determining(s);
        r.verdict = d.holds ? "true" : "false";
        text << "strongly order determining: " << r.verdict << '\n';
        if (d.failing_pair) {
            text << "failing pair: " << pair_text(s, *d.failing_pair)
                 << (d.failing_pair_infeasible ? " (no state gives the first element value 1)" : "") << '\n';
            r.result["failing_pair"] = {s.label(d.failing_pair->first), s.label(d.failing_pair->second)};
            r.result["failing_pair_infeasible"] = d.failing_pair_infeasible;
        }
    }
    else if (mode == "guz") {
        auto g = guz_conditions(s, pure_cap);
        bool all = g.condition1 && g.condition2 && g.condition3;
        r.verdict = all ? "true" : "false";
        text << "condition 1: " << (g.condition1 ? "true" : "false") << '\n';
        text << "condition 2: " << (g.condition2 ? "true" : "false") << '\n';
        text << "condition 3: " << (g.condition3 ? "true" : "false") << '\n';
        text << g.pure.size() << " pure states\n";
        json pure = json::array();
        for (auto & st : g.pure) {
            pure.push_back(state_json(s, st));
            text << format_state(s, st) << '\n';
        }
        r.result["conditions"] = {g.condition1, g.condition2, g.condition3};
        r.result["pure_states"] = pure;
    }
    else {
        auto constraints = parse_state_constraints(resolve_text(lp_file), s);
        auto st = state_lp(s, constraints);
        r.result["constraints"] = constraints.size();
        if (st) {
            r.verdict = "found";
            r.result["state"] = state_json(s, *st);
            text << "feasible\n" << format_state(s, *st) << '\n';
        }
        else {
            r.verdict = "not_found";
            text << "infeasible\n";
        }
    }
    r.text = text.str();
    return r;
}

// fact

auto cmd_fact(int n, const std::string & out_path, int fact_cap) -> Report
{
    auto f = enumerate_fact(n, fact_cap);
    Report r;
    r.text = "Fact(" + std::to_string(n) + "): " + std::to_string(f.size()) + " elements\n";
    r.result["n"] = n;
    r.result["is_omp"] = is_omp(f);
    emit_structure(r, f, out_path);
    return r;
}

// embed

auto cmd_embed(const std::string & small_loc, const std::string & big_loc, const std::string & mode, long max_nodes)
    -> Report
{
    auto small = load_structure(small_loc);
    auto big = load_structure(big_loc);
    auto m = mode == "ol" ? EmbedMode::ol : EmbedMode::omp;
    auto map = embed_search(small, big, m, SearchBudget{static_cast<std::uint64_t>(max_nodes)});
    Report r;
    r.result = {{"mode", mode}, {"small_size", small.size()}, {"big_size", big.size()}};
    std::ostringstream text;
    if (map) {
        r.verdict = "found";
        json jm = json::object();
        text << "embedding found (" << mode << ")\n";
        for (Element e = 0; e < small.size(); ++e) {
            jm[small.label(e)] = big.label((*map)[e]);
            text << small.label(e) << " -> " << big.label((*map)[e]) << '\n';
        }
        r.result["map"] = jm;
    }
    else {
        r.verdict = "not_found";
        text << "no embedding (" << mode << ")\n";
    }
    r.text = text.str();
    return r;
}

// hrep

auto cmd_hrep_verify(const std::string & gd, const std::string & rep_file) -> Report
{
    auto h = parse_hypergraph(resolve_text(gd));
    auto rep = parse_representation(resolve_text(rep_file), h);
    auto v = verify_hrep(h, rep);
    Report r;
    r.verdict = v.valid ? "valid" : "invalid";
    r.result = {{"vertices", h.vertices.size()}, {"edges", h.edges.size()}, {"reason", v.reason}};
    r.text = r.verdict + (v.reason.empty() ? "" : ": " + v.reason) + "\n";
    if (v.vertex)
        r.result["vertex"] = h.vertices[*v.vertex];
    if (v.edge)
        r.result["edge"] = *v.edge;
    return r;
}

auto cmd_hrep_search(const std::string & gd, int dim, const std::string & candidates, const std::string & out_path,
    long max_nodes) -> Report
{
    auto h = parse_hypergraph(resolve_text(gd));
    auto vectors = parse_vectors(resolve_text(candidates));
    auto rep = search_hrep(h, dim, vectors, max_nodes);
    Report r;
    r.result = {{"dim", dim}, {"candidates", vectors.size()}};
    if (! rep) {
        r.verdict = "not_found";
        r.text = "no representation from the candidate set in dimension " + std::to_string(dim) + "\n";
        return r;
    }
    r.verdict = "found";
    auto text = write_representation(h, *rep);
    r.result["representation"] = json::parse(text);
    if (out_path.empty())
        r.text = text + "\n";
    else {
        write_text_file(out_path, text + "\n");
        r.text = "written: " + out_path + "\n";
        r.result["out"] = out_path;
    }
    return r;
}

// qsol

auto cmd_qsol_verify(const std::string & sys_file, const std::string & ops_file) -> Report
{
    auto sys = parse_system(resolve_text(sys_file));
    auto ops = parse_operators(resolve_text(ops_file));
    auto v = verify_qsolution(sys, ops);
    Report r;
    r.verdict = v.valid ? "valid" : "invalid";
    r.result = {{"variables", sys.variables}, {"equations", sys.equations.size()}, {"reason", v.reason}};
    if (! ops.empty())
        r.result["dim"] = ops.front().dim();
    r.text = r.verdict + (v.reason.empty() ? "" : ": " + v.reason) + "\n";
    return r;
}

auto cmd_qsol_classical(const std::string & sys_file) -> Report
{
    auto sys = parse_system(resolve_text(sys_file));
    auto x = gf2_solve(sys);
    Report r;
    r.result = {{"variables", sys.variables}, {"equations", sys.equations.size()}};
    if (! x) {
        r.verdict = "not_found";
        r.text = "UNSAT\n";
        return r;
    }
    r.verdict = "found";
    r.result["solution"] = *x;
    r.result["lift_verified"] = verify_qsolution(sys, lift_classical(*x)).valid;
    std::string line = "SAT:";
    for (int i = 0; i < sys.variables; ++i)
        line += " x" + std::to_string(i + 1) + "=" + std::to_string((*x)[i]);
    r.text = line + "\n";
    return r;
}

// subspace

auto cmd_subspace_refute(std::string eq_text, int ndist, int dim, int samples, std::uint64_t seed) -> Report
{
    if (eq_text.empty() && ndist < 0)
        throw InputError("subspace refute needs an equation or --ndist");
    auto eq = ndist >= 0 ? n_distributive_term(ndist) : parse_equation(eq_text);
    auto c = sample_refute(eq, dim, samples, seed);
    Report r;
    r.seed = seed;
    r.result = {{"equation", to_string(eq)}, {"dim", dim}, {"samples", samples}};
    std::ostringstream text;
    if (c) {
        r.verdict = "invalid";
        json a = json::object();
        text << "counterexample at sample " << c->sample << " (seed " << seed << ")\n";
        for (auto & [name, sub] : c->assignment) {
            a[name] = format_subspace(sub);
            text << name << " = " << format_subspace(sub) << '\n';
        }
        text << "lhs = " << format_subspace(c->lhs) << "\nrhs = " << format_subspace(c->rhs) << '\n';
        r.result["sample"] = c->sample;
        r.result["assignment"] = a;
        r.result["lhs"] = format_subspace(c->lhs);
        r.result["rhs"] = format_subspace(c->rhs);
    }
    else {
        r.verdict = "unknown";
        text << "no counterexample in " << samples << " samples (seed " << seed << ")\n";
    }
    r.text = text.str();
    return r;
}

// corpus, export

auto cmd_corpus_list() -> Report
{
    Report r;
    json list = json::array();
    std::ostringstream text;
    for (auto & e : corpus()) {
        list.push_back({{"name", e.name}, {"kind", corpus_kind_name(e.kind)}, {"file", e.file_name},
            {"provenance", e.provenance}});
        text << e.name << '\t' << corpus_kind_name(e.kind) << '\t' << e.provenance << '\n';
    }
    r.result["entries"] = list;
    r.text = text.str();
    return r;
}

auto cmd_corpus_show(const std::string & name) -> Report
{
    auto key = is_corpus_uri(name) ? name.substr(7) : name;
    const auto & e = corpus_entry(key);
    Report r;
    r.result = {{"name", e.name}, {"kind", corpus_kind_name(e.kind)}, {"file", e.file_name}, {"text", e.text}};
    r.text = e.text;
    return r;
}

auto cmd_export_dot(const std::string & in, const std::string & view, const std::string & out_path) -> Report
{
    std::string dot;
    if (view == "hasse")
        dot = export_dot(load_structure(in));
    else if (is_diagram_location(in))
        dot = export_dot(parse_greechie(resolve_text(in)));
    else
        dot = export_dot(extract_greechie(load_structure(in)));
    Report r;
    r.result = {{"view", view}, {"dot", dot}};
    if (out_path.empty())
        r.text = dot;
    else {
        write_text_file(out_path, dot);
        r.text = "written: " + out_path + "\n";
        r.result["out"] = out_path;
    }
    return r;
}

auto error_code(const std::exception & e) -> int
{
    if (dynamic_cast<const ResourceError *>(&e))
        return exit_resource;
    if (dynamic_cast<const InputError *>(&e) || dynamic_cast<const PreconditionError *>(&e))
        return exit_input;
    return exit_internal;
}

}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"qlwb: finite quantum structure workbench", "qlwb"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable report");

    std::string in, in2, out_path, require, view = "hasse", mode = "omp";
    std::function<Report()> action;
    std::string command;

    auto check = app.add_subcommand("check", "Check lattice, OL, OMP, OML, MOL and Boolean axioms");
    check->add_option("input", in, "Structure (.struct, .gd or corpus:name)")->required();
    check->add_option("--require", require, "Verdict is this property")
        ->check(CLI::IsMember({"lattice", "ol", "omp", "oml", "mol", "boolean"}));
    check->callback([&] { action = [&] { return cmd_check(in, require); }; });

    auto mac = app.add_subcommand("macneille", "MacNeille completion");
    mac->add_option("input", in)->required();
    mac->add_option("--out", out_path);
    mac->callback([&] { action = [&] { return cmd_macneille(in, out_path); }; });

    int max_chains = -1;
    auto kal = app.add_subcommand("kalmbach", "Kalmbach construction");
    kal->add_option("input", in)->required();
    kal->add_option("--out", out_path);
    kal->add_option("--max-chains", max_chains, "Chain cap (default 20000, cap name kalmbach)");
    kal->callback([&] {
        action = [&] { return cmd_kalmbach(in, out_path, max_chains >= 0 ? max_chains : cap("kalmbach", 20000)); };
    });

    DecideOptions dopt;
    int dmodel = -1;
    long dsteps = -1;
    auto dec = app.add_subcommand("decide", "Decide an equation or quasi-equation");
    dec->add_option("--theory", dopt.theory)->check(CLI::IsMember({"ba", "oml2", "ol", "oml"}));
    dec->add_option("equation", dopt.equation, "\"lhs = rhs\" or \"s = t, ... => u = v\"")->required();
    dec->add_option("--max-model-size", dmodel);
    dec->add_option("--max-proof-steps", dsteps);
    dec->add_option("--timeout", dopt.timeout);
    dec->add_option("--seed", dopt.seed);
    dec->add_option("--catalog", dopt.catalog, "Structures searched for quasi-equation counterexamples");
    dec->callback([&] {
        dopt.max_model_size = dmodel >= 0 ? dmodel : cap("model", 8);
        dopt.max_proof_steps = dsteps >= 0 ? dsteps : cap("proof", 20000);
        action = [&] { return cmd_decide(dopt); };
    });

    std::string lp_file;
    bool two_valued = false, concrete = false, sod = false, guz = false;
    int pure_cap = -1;
    auto st = app.add_subcommand("states", "State-space analysis");
    st->add_option("input", in)->required();
    auto f1 = st->add_flag("--two-valued", two_valued);
    auto f2 = st->add_flag("--concrete", concrete);
    auto f3 = st->add_flag("--sod", sod);
    auto f4 = st->add_flag("--guz", guz);
    auto f5 = st->add_option("--lp", lp_file, "Constraint file: lines like 'a = 1/2' or 'b <= 1/3'");
    for (auto * a : {f1, f2, f3, f4, f5})
        for (auto * b : {f1, f2, f3, f4, f5})
            if (a != b)
                a->excludes(b);
    st->add_option("--pure-cap", pure_cap, "Maximum free variables for pure-state enumeration");
    st->callback([&] {
        std::string m = concrete ? "concrete" : sod ? "sod" : guz ? "guz" : ! lp_file.empty() ? "lp" : "two-valued";
        int pc = pure_cap >= 0 ? pure_cap : cap("states", 24);
        action = [&, m, pc] { return cmd_states(in, m, lp_file, pc); };
    });

    int fact_n = 0, fact_cap = -1;
    auto fa = app.add_subcommand("fact", "Factor-pair OMP Fact(n)");
    fa->add_option("n", fact_n)->required()->check(CLI::PositiveNumber);
    fa->add_option("--out", out_path);
    fa->add_option("--cap", fact_cap, "Largest n accepted (default 8)");
    fa->callback([&] {
        int c = fact_cap >= 0 ? fact_cap : cap("fact", 8);
        action = [&, c] { return cmd_fact(fact_n, out_path, c); };
    });

    long max_nodes = -1;
    auto em = app.add_subcommand("embed", "Search an embedding of one structure into another");
    em->add_option("small", in)->required();
    em->add_option("big", in2)->required();
    em->add_option("--mode", mode)->check(CLI::IsMember({"omp", "ol"}));
    em->add_option("--max-nodes", max_nodes);
    em->callback([&] {
        long n = max_nodes >= 0 ? max_nodes : cap("embed", 20'000'000);
        action = [&, n] { return cmd_embed(in, in2, mode, n); };
    });

    auto hrep = app.add_subcommand("hrep", "Hypergraph quantum representations");
    hrep->require_subcommand(1);
    auto hv = hrep->add_subcommand("verify", "Verify a representation");
    hv->add_option("hypergraph", in)->required();
    hv->add_option("representation", in2)->required();
    hv->callback([&] { action = [&] { return cmd_hrep_verify(in, in2); }; });
    int hdim = 0;
    std::string candidates;
    auto hs = hrep->add_subcommand("search", "Search a representation from candidate vectors");
    hs->add_option("hypergraph", in)->required();
    hs->add_option("--dim", hdim)->required()->check(CLI::PositiveNumber);
    hs->add_option("--candidates", candidates)->required();
    hs->add_option("--out", out_path);
    hs->add_option("--max-nodes", max_nodes);
    hs->callback([&] {
        long n = max_nodes >= 0 ? max_nodes : cap("hrep", 5'000'000);
        action = [&, n] { return cmd_hrep_search(in, hdim, candidates, out_path, n); };
    });

    auto qsol = app.add_subcommand("qsol", "Quantum solutions of linear systems over Z2");
    qsol->require_subcommand(1);
    auto qv = qsol->add_subcommand("verify", "Verify an operator assignment");
    qv->add_option("system", in)->required();
    qv->add_option("operators", in2)->required();
    qv->callback([&] { action = [&] { return cmd_qsol_verify(in, in2); }; });
    auto qc = qsol->add_subcommand("classical", "Solve the system over GF(2)");
    qc->add_option("system", in)->required();
    qc->callback([&] { action = [&] { return cmd_qsol_classical(in); }; });

    auto sub = app.add_subcommand("subspace", "Subspace lattices of Q^n");
    sub->require_subcommand(1);
    std::string sub_eq;
    int sdim = 0, samples = 1000, ndist = -1;
    std::uint64_t sseed = 1;
    auto sr = sub->add_subcommand("refute", "Seeded random search for a counterexample");
    sr->add_option("equation", sub_eq);
    sr->add_option("--ndist", ndist, "Use the n-distributive law for this n");
    sr->add_option("--dim", sdim)->required()->check(CLI::PositiveNumber);
    sr->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    sr->add_option("--seed", sseed);
    sr->callback([&] { action = [&] { return cmd_subspace_refute(sub_eq, ndist, sdim, samples, sseed); }; });

    auto cor = app.add_subcommand("corpus", "Bundled corpus");
    cor->require_subcommand(1);
    auto cl = cor->add_subcommand("list", "List bundled entries");
    cl->callback([&] { action = [] { return cmd_corpus_list(); }; });
    auto cs = cor->add_subcommand("show", "Print a bundled entry");
    cs->add_option("name", in)->required();
    cs->callback([&] { action = [&] { return cmd_corpus_show(in); }; });

    auto ex = app.add_subcommand("export", "Export views");
    ex->require_subcommand(1);
    auto ed = ex->add_subcommand("dot", "Graphviz output");
    ed->add_option("input", in)->required();
    ed->add_option("--view", view)->check(CLI::IsMember({"hasse", "greechie"}));
    ed->add_option("--out", out_path);
    ed->callback([&] { action = [&] { return cmd_export_dot(in, view, out_path); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        auto * target = &app;
        for (auto * s = &app; s;) {
            auto subs = s->get_subcommands();
            s = subs.empty() ? nullptr : subs.front();
            if (s)
                target = s;
        }
        out << target->help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "qlwb: " << e.what() << '\n';
        return exit_usage;
    }

    for (auto * s = &app; s;) {
        auto subs = s->get_subcommands();
        s = subs.empty() ? nullptr : subs.front();
        if (s)
            command += (command.empty() ? "" : " ") + s->get_name();
    }

    json report = {{"schema", report_schema_id}, {"command", command}};
    int code = exit_ok;
    std::string text;
    try {
        auto r = action();
        code = verdict_exit(r.verdict);
        report["verdict"] = r.verdict;
        report["result"] = r.result;
        if (r.seed)
            report["seed"] = *r.seed;
        text = r.text;
    }
    catch (const std::exception & e) {
        code = error_code(e);
        report["verdict"] = "error";
        report["error"] = e.what();
        report["result"] = json::object();
        err << "qlwb: error: " << e.what() << '\n';
    }
    report["exit_code"] = code;
    if (as_json)
        out << report.dump(2) << '\n';
    else
        out << text;
    return code;
}

}
