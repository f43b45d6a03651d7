#include "support.hpp"

#include <qlwb/axioms.hpp>
#include <qlwb/constructors.hpp>
#include <qlwb/corpus.hpp>
#include <qlwb/error.hpp>
#include <qlwb/lp.hpp>
#include <qlwb/states.hpp>

#include <doctest.h>

using namespace qlwb;

namespace {

auto atom_values(const StructureTable & s, const GreechieDiagram & d, const State & st) -> std::vector<mpq_class>
{
    std::vector<mpq_class> out;
    for (auto & a : d.atoms)
        out.push_back(st.values[s.element(a)]);
    return out;
}

auto mo2_diagram() -> GreechieDiagram
{
    return GreechieDiagram{{"a", "a'", "b", "b'"}, {{0, 1}, {2, 3}}};
}

auto diagrams() -> std::vector<std::pair<std::string, GreechieDiagram>>
{
    std::vector<std::pair<std::string, GreechieDiagram>> out;
    for (auto & e : corpus())
        if (e.kind == CorpusKind::diagram && e.name != "thm55")
            out.emplace_back(e.name, parse_greechie(e.text));
    return out;
}

}

TEST_CASE("two-valued states match brute-force atom patterns")
{
    for (auto & [name, d] : diagrams()) {
        CAPTURE(name);
        auto s = paste_to_omp(d);
        auto states = two_valued_states(s);
        std::set<std::vector<int>> got;
        for (auto & st : states) {
            CHECK(oracle::is_state(s, st.values));
            std::vector<int> v;
            for (auto & q : atom_values(s, d, st))
                v.push_back(q == 1 ? 1 : 0);
            got.insert(v);
        }
        CHECK(got.size() == states.size());
        CHECK(got == oracle::two_valued_atom_patterns(d));
    }
    auto thm = corpus_diagram("thm55");
    auto s = paste_to_omp(thm);
    CHECK(two_valued_states(s).size() == oracle::two_valued_atom_patterns(thm).size());
}

TEST_CASE("horizontal sum 2^3 + 2^2 is concrete with six 2-valued states")
{
    auto s = corpus_structure("hs_2c3_2c2");
    CHECK(two_valued_states(s).size() == 6);
    auto c = is_concrete(s);
    CHECK(c.concrete);
    CHECK(c.family.size() == 6);
    for (auto & st : c.family)
        CHECK(oracle::is_state(s, st.values));
}

TEST_CASE("the nineteen-block OMP is neither concrete nor strongly order determining")
{
    auto s = corpus_structure("thm55");
    auto c = is_concrete(s);
    CHECK_FALSE(c.concrete);
    REQUIRE(c.failing_pair);
    auto [a, b] = *c.failing_pair;
    CHECK_FALSE(s.leq(a, b));
    for (auto & st : two_valued_states(s))
        CHECK_FALSE((st.values[a] == 1 && st.values[b] == 0));

    auto d = strongly_order_determining(s);
    CHECK_FALSE(d.holds);
    REQUIRE(d.failing_pair);
    auto [x, y] = *d.failing_pair;
    CHECK_FALSE(s.leq(x, y));
    // no state gives x value 1 and y a value below 1
    std::vector<StateConstraint> cons{{x, Relation::eq, 1}, {y, Relation::le, Rational(99, 100)}};
    bool infeasible = ! state_lp(s, cons).has_value();
    replay_ledger().record(infeasible);
    CHECK(infeasible);
}

TEST_CASE("strong order determination on orthomodular lattices in the corpus")
{
    for (auto & name : {"mo2", "mo3", "b3", "loop5", "hs_2c3_2c2", "two_x_mo2"}) {
        CAPTURE(name);
        CHECK(strongly_order_determining(corpus_structure(name)).holds);
    }
    CHECK_THROWS_AS(strongly_order_determining(benzene()), PreconditionError);
}

TEST_CASE("pure states are the vertices of the atom polytope")
{
    auto cases = diagrams();
    cases.emplace_back("mo2", mo2_diagram());
    for (auto & [name, d] : cases) {
        CAPTURE(name);
        auto s = name == "mo2" ? mo(2) : paste_to_omp(d);
        auto pure = pure_states(s, 32);
        std::set<std::vector<mpq_class>> got;
        for (auto & st : pure) {
            CHECK(oracle::is_state(s, st.values));
            got.insert(atom_values(s, d, st));
        }
        CHECK(got.size() == pure.size());
        CHECK(got == oracle::atom_polytope_vertices(d));
    }
}

TEST_CASE("midpoints of states are states")
{
    std::mt19937_64 rng(41);
    for (auto & name : {"loop4", "loop5", "loop6", "chain3", "tri_chain"}) {
        auto s = corpus_structure(name);
        auto pure = pure_states(s, 32);
        REQUIRE(pure.size() >= 2);
        for (int t = 0; t < 100; ++t) {
            auto & p = pure[rng() % pure.size()];
            auto & q = pure[rng() % pure.size()];
            State mid;
            for (std::size_t i = 0; i < p.values.size(); ++i)
                mid.values.push_back((p.values[i] + q.values[i]) / 2);
            CHECK(is_state(s, mid));
            CHECK(oracle::is_state(s, mid.values));
        }
    }
}

TEST_CASE("the 5-loop has a pure state with value 1/2 and the 4-loop does not")
{
    auto values_of = [](const StructureTable & s) {
        std::set<mpq_class> values;
        for (auto & st : pure_states(s))
            for (auto & v : st.values)
                values.insert(v);
        return values;
    };
    CHECK(values_of(corpus_structure("loop5")).count(mpq_class(1, 2)) == 1);
    CHECK(values_of(corpus_structure("loop4")).size() == 2);
}

TEST_CASE("Guz conditions for MO2")
{
    auto g = guz_conditions(mo(2));
    CHECK(g.condition1);
    CHECK(g.condition2);
    CHECK_FALSE(g.condition3);
    CHECK(g.pure.size() == 4);
    for (auto & st : g.pure)
        CHECK(std::all_of(st.values.begin(), st.values.end(), [](auto & v) { return v == 0 || v == 1; }));
}

TEST_CASE("state constraints parse and constrain the LP")
{
    auto s = mo(2);
    auto cons = parse_state_constraints("a = 1/3\nb <= 1/4\n# note\nb' >= 1/2\n", s);
    REQUIRE(cons.size() == 3);
    auto st = state_lp(s, cons);
    REQUIRE(st);
    CHECK(oracle::is_state(s, st->values));
    CHECK(st->values[s.element("a")] == mpq_class(1, 3));
    CHECK(st->values[s.element("b")] <= mpq_class(1, 4));
    CHECK_FALSE(state_lp(s, parse_state_constraints("a = 1\na' = 1/2\n", s)));
    CHECK_THROWS_AS(parse_state_constraints("z = 1\n", s), ParseError);
    CHECK_FALSE(state_lp(s, parse_state_constraints("a = 3/2\n", s)));
}

TEST_CASE("format_state prints exact fractions in element order")
{
    auto s = boolean_algebra(1);
    CHECK(format_state(s, State{{0, 1}}) == "0=0 1=1");
    auto m = mo(2);
    auto st = state_lp(m, parse_state_constraints("a = 1/2\nb = 2/3", m));
    REQUIRE(st);
    auto text = format_state(m, *st);
    CHECK(text.find("a=1/2") != std::string::npos);
    CHECK(text.find("b'=1/3") != std::string::npos);
}

TEST_CASE("two-valued states need an orthomodular poset")
{
    CHECK_THROWS_AS(two_valued_states(benzene()), PreconditionError);
}

namespace {

// min c.x s.t. A x = b, x >= 0, by trying every basis of the small system.
auto lp_oracle(const LinearProgram & lp) -> std::optional<mpq_class>
{
    const int n = lp.variables;
    std::optional<mpq_class> best;
    for (std::uint32_t support = 0; support < (1u << n); ++support) {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
            if ((support >> j) & 1u)
                cols.push_back(j);
        std::vector<std::vector<mpq_class>> rows;
        for (auto & r : lp.rows) {
            std::vector<mpq_class> row;
            for (int j : cols)
                row.push_back(r[j]);
            rows.push_back(row);
        }
        std::vector<mpq_class> rhs(lp.rhs.begin(), lp.rhs.end());
        std::optional<std::vector<mpq_class>> x;
        if (cols.empty()) {
            if (std::all_of(rhs.begin(), rhs.end(), [](auto & v) { return v == 0; }))
                x = std::vector<mpq_class>{};
        }
        else
            x = oracle::unique_solution(rows, rhs, static_cast<int>(cols.size()));
        if (! x || std::any_of(x->begin(), x->end(), [](auto & v) { return v < 0; }))
            continue;
        mpq_class value = 0;
        for (std::size_t k = 0; k < cols.size(); ++k)
            value += lp.objective[cols[k]] * (*x)[k];
        if (! best || value < *best)
            best = value;
    }
    return best;
}

}

TEST_CASE("simplex optimum matches basis enumeration on random bounded LPs")
{
    std::mt19937_64 rng(43);
    int optimal = 0, infeasible = 0;
    for (int t = 0; t < 300; ++t) {
        LinearProgram lp;
        lp.variables = 2 + static_cast<int>(rng() % 5);
        int m = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i) {
            Vector row;
            for (int j = 0; j < lp.variables; ++j)
                row.push_back(static_cast<int>(rng() % 5) - 1);
            lp.rows.push_back(row);
            lp.rhs.push_back(static_cast<int>(rng() % 5) - 1);
        }
        // bound the feasible region with sum x <= 10 through a slack variable
        for (auto & row : lp.rows)
            row.push_back(0);
        Vector bound(lp.variables + 1, 1);
        lp.rows.push_back(bound);
        lp.rhs.push_back(10);
        lp.variables += 1;
        for (int j = 0; j < lp.variables; ++j)
            lp.objective.push_back(static_cast<int>(rng() % 7) - 3);
        auto r = solve_lp(lp);
        auto want = lp_oracle(lp);
        CHECK((r.status == LpStatus::optimal) == want.has_value());
        if (r.status == LpStatus::optimal && want) {
            ++optimal;
            CHECK(r.value == *want);
            for (std::size_t i = 0; i < lp.rows.size(); ++i) {
                mpq_class lhs = 0;
                for (int j = 0; j < lp.variables; ++j)
                    lhs += lp.rows[i][j] * r.x[j];
                CHECK(lhs == lp.rhs[i]);
            }
            for (auto & v : r.x)
                CHECK(v >= 0);
        }
        else
            ++infeasible;
    }
    CHECK(optimal > 50);
    CHECK(infeasible > 10);
}

TEST_CASE("unbounded LP is reported")
{
    LinearProgram lp;
    lp.variables = 2;
    lp.rows = {{1, -1}};
    lp.rhs = {0};
    lp.objective = {-1, 0};
    CHECK(solve_lp(lp).status == LpStatus::unbounded);
}
