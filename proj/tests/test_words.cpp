#include "support.hpp"

#include <qlwb/axioms.hpp>
#include <qlwb/constructors.hpp>
#include <qlwb/corpus.hpp>
#include <qlwb/deciders.hpp>
#include <qlwb/embedding.hpp>
#include <qlwb/error.hpp>
#include <qlwb/model_search.hpp>
#include <qlwb/proof.hpp>
#include <qlwb/term.hpp>

#include <doctest.h>

#include <sstream>

using namespace qlwb;

namespace {

auto all_assignments(const StructureTable & s, const std::vector<std::string> & vars)
    -> std::vector<std::map<std::string, Element>>
{
    std::vector<std::map<std::string, Element>> out;
    std::vector<int> idx(vars.size(), 0);
    while (true) {
        std::map<std::string, Element> a;
        for (std::size_t i = 0; i < vars.size(); ++i)
            a[vars[i]] = idx[i];
        out.push_back(a);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == s.size())
            idx[k++] = 0;
        if (k == idx.size())
            break;
    }
    return out;
}

auto holds_in(const Equation & eq, const StructureTable & s) -> bool
{
    for (auto & a : all_assignments(s, variables(eq)))
        if (oracle::violates(eq, s, a))
            return false;
    return true;
}

auto small_ols() -> std::vector<StructureTable>
{
    std::vector<StructureTable> out;
    for (auto & [name, s] : corpus_structures())
        if (s.size() <= 12 && oracle::laws(s).ol)
            out.push_back(s);
    return out;
}

void record_counterexample(const Equation & eq, const Verdict & v)
{
    if (! v.counterexample)
        return;
    bool ok = oracle::violates(eq, v.counterexample->model, v.counterexample->assignment);
    replay_ledger().record(ok);
    CHECK(ok);
    CHECK(replay(eq, *v.counterexample));
}

}

TEST_CASE("terms print with minimal parentheses and parse back")
{
    CHECK(to_string(parse_term("x | (x' & (x | y))")) == "x | x' & (x | y)");
    CHECK(to_string(parse_term("((x))''")) == "x''");
    CHECK(to_string(parse_term("(x & y)'")) == "(x & y)'");
    CHECK(to_string(parse_term("x & (y & z)")) == "x & (y & z)");
    CHECK(to_string(parse_term("(x & y) & z")) == "x & y & z");
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        auto t = oracle::random_term(rng, {"x", "y", "z"}, 5);
        auto back = parse_term(to_string(t));
        CHECK(back == t);
        CHECK(back.size() == t.size());
    }
}

TEST_CASE("term parser errors carry columns")
{
    auto col = [](const std::string & text) {
        try {
            parse_term(text);
        }
        catch (const ParseError & e) {
            return e.column();
        }
        return -1;
    };
    CHECK(col("x & ") > 0);
    CHECK(col("x & ) y") == 5);
    CHECK(col("x $ y") == 3);
    CHECK_THROWS_AS(parse_equation("x & y"), ParseError);
    CHECK_THROWS_AS(parse_quasi_equation("x = y =>"), ParseError);
    auto q = parse_quasi_equation("x | y = y, z = z => y = x | (x' & y)");
    CHECK(q.premises.size() == 2);
    CHECK(to_string(q.conclusion) == "y = x | x' & y");
}

TEST_CASE("substitution, subterms and replacement")
{
    auto t = parse_term("x & (y | x')");
    CHECK(to_string(subterm(t, {1})) == "y | x'");
    CHECK(to_string(subterm(t, {1, 1, 0})) == "x");
    CHECK(to_string(replace_at(t, {1, 0}, parse_term("0"))) == "x & (0 | x')");
    CHECK(to_string(substitute(t, {{"x", parse_term("a | b")}})) == "(a | b) & (y | (a | b)')");
    CHECK(variables(t) == std::vector<std::string>{"x", "y"});
}

TEST_CASE("library and compiled evaluation agree with naive evaluation")
{
    std::mt19937_64 rng(23);
    auto models = small_ols();
    for (int i = 0; i < 300; ++i) {
        auto t = oracle::random_term(rng, {"x", "y"}, 4);
        auto & s = models[rng() % models.size()];
        CompiledTerm c(t, {"x", "y"});
        for (int trial = 0; trial < 5; ++trial) {
            Element x = static_cast<Element>(rng() % s.size()), y = static_cast<Element>(rng() % s.size());
            Assignment a{{"x", x}, {"y", y}};
            auto want = oracle::eval(t, s, a);
            CHECK(eval(t, s, a) == want);
            CHECK(c.eval(s, {x, y}) == want);
        }
    }
}

TEST_CASE("Boolean decider matches truth tables")
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 400; ++i) {
        Equation eq{oracle::random_term(rng, {"x", "y", "z"}, 3), oracle::random_term(rng, {"x", "y", "z"}, 3)};
        auto v = decide_ba(eq);
        CHECK((v.kind == VerdictKind::valid) == oracle::truth_table_valid(eq));
        record_counterexample(eq, v);
    }
}

TEST_CASE("two-variable OML decider matches exhaustive checks in MO2 and 2")
{
    auto m2 = mo(2);
    auto two = boolean_algebra(1);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        Equation eq{oracle::random_term(rng, {"x", "y"}, 4), oracle::random_term(rng, {"x", "y"}, 4)};
        auto v = decide_oml2(eq);
        CHECK((v.kind == VerdictKind::valid) == (holds_in(eq, m2) && holds_in(eq, two)));
        record_counterexample(eq, v);
    }
    CHECK(decide_oml2(parse_equation("x | (x' & (x | y)) = x | y")).kind == VerdictKind::valid);
    auto v = decide_oml2(parse_equation("x & (y | y') = (x & y) | (x & y')"));
    REQUIRE(v.kind == VerdictKind::invalid);
    CHECK(v.counterexample->model_name == "MO2");
    auto c = *v.counterexample;
    CHECK(c.model.label(c.assignment.at("x")) == "a");
    CHECK(c.model.label(c.assignment.at("y")) == "b");
    CHECK_THROWS_AS(decide_oml2(parse_equation("x & (y | z) = (x & y) | (x & z)")), InputError);
}

TEST_CASE("the free two-generated OML has 96 elements")
{
    const auto & f = free_oml2_model();
    CHECK(f.size() == 96);
    CHECK(oracle::laws(f).oml);
}

TEST_CASE("ortholattice and OML model counts up to isomorphism")
{
    const std::vector<std::size_t> ol_counts{1, 1, 2, 5};
    const std::vector<std::size_t> oml_counts{1, 1, 1, 2};
    for (int k = 0; k < 4; ++k) {
        int n = 2 * k + 2;
        CAPTURE(n);
        auto & ols = models_of_size(Theory::ol, n);
        auto & omls = models_of_size(Theory::oml, n);
        CHECK(ols.size() == ol_counts[k]);
        CHECK(omls.size() == oml_counts[k]);
        for (std::size_t i = 0; i < ols.size(); ++i) {
            CHECK(oracle::laws(ols[i]).ol);
            for (std::size_t j = 0; j < i; ++j)
                CHECK_FALSE(isomorphic(ols[i], ols[j]));
        }
        for (auto & m : omls)
            CHECK(oracle::laws(m).oml);
        CHECK(static_cast<std::size_t>(std::count_if(ols.begin(), ols.end(),
                  [](auto & s) { return oracle::laws(s).oml; })) == omls.size());
    }
    auto has = [](Theory t, const StructureTable & s) {
        auto & ms = models_of_size(t, s.size());
        return std::any_of(ms.begin(), ms.end(), [&](auto & m) { return isomorphic(m, s); });
    };
    CHECK(has(Theory::ol, benzene()));
    CHECK(has(Theory::oml, mo(2)));
    CHECK(has(Theory::oml, mo(3)));
    CHECK(has(Theory::oml, boolean_algebra(3)));
    CHECK(has(Theory::ol, corpus_structure("hs_benzene_b2")));
    CHECK(models_of_size(Theory::ol, 5).empty());
}

TEST_CASE("proofs replay and every intermediate term stays equal in small ortholattices")
{
    auto models = small_ols();
    for (auto & text : {"(x & y)' = x' | y'", "x & x = x", "x | (y & x) = x", "(x' | y')' = x & y",
             "x & (x' | x) = x", "x'' & y = y & x"}) {
        CAPTURE(text);
        auto eq = parse_equation(text);
        auto v = fep_decide(Theory::ol, eq);
        REQUIRE(v.kind == VerdictKind::valid);
        REQUIRE(v.proof);
        CHECK(check_proof(*v.proof, eq));
        CHECK(v.proof->terms.front() == eq.lhs);
        CHECK(v.proof->terms.back() == eq.rhs);
        CHECK(v.proof->steps.size() + 1 == v.proof->terms.size());
        for (auto & t : v.proof->terms)
            for (auto & s : models)
                CHECK(holds_in(Equation{eq.lhs, t}, s));
        CHECK_FALSE(format_proof(*v.proof).empty());
    }
}

TEST_CASE("de Morgan and idempotence are one-step proofs")
{
    for (auto & text : {"(x & y)' = x' | y'", "x & x = x"}) {
        auto v = fep_decide(Theory::ol, parse_equation(text));
        REQUIRE(v.proof);
        CHECK(v.proof->steps.size() == 1);
    }
}

TEST_CASE("a tampered proof is rejected")
{
    auto eq = parse_equation("(x & y)' = x' | y'");
    auto p = *fep_decide(Theory::ol, eq).proof;
    auto bad = p;
    bad.terms.back() = parse_term("x' & y'");
    CHECK_FALSE(check_proof(bad, Equation{eq.lhs, parse_term("x' & y'")}));
    CHECK_FALSE(check_proof(p, parse_equation("(x & y)' = x'")));
}

TEST_CASE("finite model search refutes the orthomodular law in ortholattices")
{
    auto eq = parse_equation("x | (x' & (x | y)) = x | y");
    auto v = fep_decide(Theory::ol, eq);
    REQUIRE(v.kind == VerdictKind::invalid);
    CHECK(v.counterexample->model.size() == 6);
    CHECK(oracle::laws(v.counterexample->model).ol);
    CHECK_FALSE(oracle::laws(v.counterexample->model).oml);
    record_counterexample(eq, v);
    auto w = fep_decide(Theory::oml, eq);
    CHECK(w.kind == VerdictKind::valid);
    REQUIRE(w.proof);
    CHECK(check_proof(*w.proof, eq));
}

TEST_CASE("corpus term suites decide as labelled")
{
    auto lines = [](const std::string & name) {
        std::vector<Equation> out;
        std::istringstream in(corpus_entry(name).text);
        std::string line;
        while (std::getline(in, line))
            if (! line.empty() && line[0] != '#')
                out.push_back(parse_equation(line));
        return out;
    };
    for (auto & eq : lines("ol_identities")) {
        CAPTURE(to_string(eq));
        auto v = fep_decide(Theory::ol, eq);
        CHECK(v.kind == VerdictKind::valid);
        if (v.proof)
            CHECK(check_proof(*v.proof, eq));
    }
    for (auto & eq : lines("oml_separators")) {
        CAPTURE(to_string(eq));
        auto v = fep_decide(Theory::ol, eq);
        CHECK(v.kind == VerdictKind::invalid);
        record_counterexample(eq, v);
    }
}

TEST_CASE("tiny budgets give unknown")
{
    FepBudget b;
    b.max_model_size = 2;
    b.max_proof_steps = 10;
    b.timeout_seconds = 0.5;
    auto v = fep_decide(Theory::ol, parse_equation("x | (x' & (x | y)) = x | y"), b);
    CHECK(v.kind == VerdictKind::unknown);
    CHECK_FALSE(v.counterexample);
    CHECK_FALSE(v.proof);
}

TEST_CASE("quasi-equation counterexamples")
{
    auto q = parse_quasi_equation("x | y = y => y = x | (x' & y)");
    std::vector<std::pair<std::string, StructureTable>> catalog{{"MO3", mo(3)}, {"O6", benzene()}};
    auto c = quasi_counterexample(q, catalog);
    REQUIRE(c);
    CHECK(c->model_name == "O6");
    CHECK(replay(q, *c));
    bool premises = std::all_of(q.premises.begin(), q.premises.end(),
        [&](auto & p) { return ! oracle::violates(p, c->model, c->assignment); });
    bool ok = premises && oracle::violates(q.conclusion, c->model, c->assignment);
    replay_ledger().record(ok);
    CHECK(ok);
    CHECK_FALSE(quasi_counterexample(q, {{"MO3", mo(3)}, {"2^3", boolean_algebra(3)}}));
}

TEST_CASE("verdict text names the method and model")
{
    auto eq = parse_equation("x | (x' & (x | y)) = x | y");
    auto text = format_verdict(eq, fep_decide(Theory::ol, eq));
    CHECK(text.rfind("invalid: ", 0) == 0);
    CHECK(text.find("assignment:") != std::string::npos);
}
