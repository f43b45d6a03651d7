#include "support.hpp"

#include <qlwb/corpus.hpp>
#include <qlwb/error.hpp>
#include <qlwb/linalg.hpp>
#include <qlwb/quantum.hpp>
#include <qlwb/quantum_io.hpp>

#include <doctest.h>

#include <numeric>

using namespace qlwb;

namespace {

auto det(std::vector<std::vector<mpq_class>> m) -> mpq_class
{
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class total = 0;
    do {
        mpq_class term = 1;
        for (int i = 0; i < n; ++i)
            term *= m[i][perm[i]];
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Largest k with a nonzero k x k minor.
auto minor_rank(const std::vector<Vector> & a, int cols) -> int
{
    const int rows = static_cast<int>(a.size());
    int best = 0;
    for (std::uint32_t rs = 1; rs < (1u << rows); ++rs)
        for (std::uint32_t cs = 1; cs < (1u << cols); ++cs) {
            int k = __builtin_popcount(rs);
            if (k != __builtin_popcount(cs) || k <= best)
                continue;
            std::vector<std::vector<mpq_class>> m;
            for (int i = 0; i < rows; ++i)
                if ((rs >> i) & 1u) {
                    std::vector<mpq_class> row;
                    for (int j = 0; j < cols; ++j)
                        if ((cs >> j) & 1u)
                            row.push_back(a[i][j]);
                    m.push_back(row);
                }
            if (det(m) != 0)
                best = k;
        }
    return best;
}

auto random_matrix(std::mt19937_64 & rng, int rows, int cols) -> std::vector<Vector>
{
    std::vector<Vector> a(rows, Vector(cols));
    for (auto & r : a)
        for (auto & v : r)
            v = static_cast<int>(rng() % 5) - 2;
    return a;
}

auto de_morgan_meet(const Subspace & a, const Subspace & b) -> Subspace
{
    return sub_ortho(sub_join(sub_ortho(a), sub_ortho(b)));
}

}

TEST_CASE("rational and Gaussian text")
{
    CHECK(parse_rational("3/6") == mpq_class(1, 2));
    CHECK(parse_rational("-1.5") == mpq_class(-3, 2));
    CHECK(parse_rational("0.25") == mpq_class(1, 4));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK(format_rational(mpq_class(-4, 6)) == "-2/3");
    CHECK(parse_gaussian("i") == Gaussian(0, 1));
    CHECK(parse_gaussian("-i") == Gaussian(0, -1));
    CHECK(parse_gaussian("3/2-1/2i") == Gaussian(mpq_class(3, 2), mpq_class(-1, 2)));
    std::mt19937_64 rng(53);
    for (int t = 0; t < 200; ++t) {
        Gaussian z(mpq_class(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4)),
            mpq_class(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4)));
        z.re.canonicalize();
        z.im.canonicalize();
        CHECK(parse_gaussian(format_gaussian(z)) == z);
    }
}

TEST_CASE("rank matches the largest nonzero minor and null spaces are annihilated")
{
    std::mt19937_64 rng(59);
    for (int t = 0; t < 200; ++t) {
        int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
        auto a = random_matrix(rng, rows, cols);
        int r = rank(a, cols);
        CHECK(r == minor_rank(a, cols));
        auto ns = null_space(a, cols);
        CHECK(static_cast<int>(ns.size()) == cols - r);
        for (auto & v : ns)
            for (auto & row : a)
                CHECK(dot(row, v) == 0);
    }
}

TEST_CASE("subspace meet by Zassenhaus agrees with the De Morgan route")
{
    for (int dim = 1; dim <= 4; ++dim) {
        SubspaceSampler sampler(dim, 100 + dim);
        for (int t = 0; t < 150; ++t) {
            auto a = sampler.next();
            auto b = sampler.next();
            auto m = sub_meet(a, b);
            auto j = sub_join(a, b);
            CHECK(m == de_morgan_meet(a, b));
            CHECK(m.dimension() + j.dimension() == a.dimension() + b.dimension());
            CHECK(sub_leq(m, a));
            CHECK(sub_leq(m, b));
            CHECK(sub_leq(a, j));
            CHECK(sub_leq(b, j));
            for (auto & v : m.basis()) {
                CHECK(a.contains(v));
                CHECK(b.contains(v));
            }
            auto o = sub_ortho(a);
            CHECK(o.dimension() + a.dimension() == dim);
            for (auto & u : a.basis())
                for (auto & w : o.basis())
                    CHECK(dot(u, w) == 0);
            CHECK(sub_ortho(o) == a);
        }
    }
}

TEST_CASE("subspace sampler is reproducible")
{
    SubspaceSampler a(3, 9), b(3, 9), c(3, 10);
    bool differs = false;
    for (int i = 0; i < 50; ++i) {
        auto x = a.next();
        CHECK(x == b.next());
        differs = differs || ! (x == c.next());
    }
    CHECK(differs);
}

TEST_CASE("n-distributivity holds up to dimension n and fails just above")
{
    for (int n = 1; n <= 2; ++n)
        for (std::uint64_t seed : {1, 2, 3}) {
            CAPTURE(n);
            CAPTURE(seed);
            auto eq = n_distributive_term(n);
            CHECK_FALSE(sample_refute(eq, n, 1000, seed));
            auto c = sample_refute(eq, n + 1, 2000, seed);
            REQUIRE(c);
            auto l = eval_subspace(eq.lhs, n + 1, c->assignment);
            auto r = eval_subspace(eq.rhs, n + 1, c->assignment);
            bool ok = ! (l == r) && l == c->lhs && r == c->rhs;
            replay_ledger().record(ok);
            CHECK(ok);
        }
    auto eq = n_distributive_term(1);
    CHECK(to_string(eq) == "x & (y0 | y1) = x & y1 | x & y0");
}

TEST_CASE("subspace refutation of the orthomodular law never succeeds")
{
    auto eq = parse_equation("x | (x' & (x | y)) = x | y");
    CHECK_FALSE(sample_refute(eq, 3, 300, 4));
    auto dist = parse_equation("x & (y | z) = (x & y) | (x & z)");
    CHECK(sample_refute(dist, 2, 300, 4));
}

TEST_CASE("projections")
{
    std::mt19937_64 rng(67);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(rng() % 4);
        int k = static_cast<int>(rng() % (n + 1));
        auto vs = random_matrix(rng, k, n);
        auto s = Subspace::span(n, vs);
        auto p = ExactMatrix::projection(s.basis(), n);
        CHECK(p.is_projection());
        CHECK(p.is_self_adjoint());
        CHECK(p * p == p);
        CHECK(p.real_rank() == s.dimension());
        auto q = ExactMatrix::identity(n) - p;
        CHECK((p * q).is_zero());
    }
}

TEST_CASE("bundled magic-square operators are the integer Pauli products")
{
    auto ops = parse_operators(corpus_entry("magic_square_ops").text);
    auto paulis = oracle::magic_square_paulis();
    REQUIRE(ops.size() == paulis.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        CHECK(oracle::same_matrix(paulis[i], ops[i]));
        CHECK(oracle::int_mul(paulis[i], paulis[i]) == oracle::int_identity(4));
    }
    auto sys = parse_system(corpus_entry("magic_square").text);
    CHECK(verify_qsolution(sys, ops).valid);
    CHECK(parse_operators(write_operators(ops)) == ops);
}

TEST_CASE("perturbed operator assignments are rejected")
{
    auto sys = parse_system(corpus_entry("magic_square").text);
    auto ops = parse_operators(corpus_entry("magic_square_ops").text);
    auto paulis = oracle::magic_square_paulis();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        auto bad = ops;
        bad[i] = bad[i].scaled(Gaussian(-1));
        auto v = verify_qsolution(sys, bad);
        CHECK_FALSE(v.valid);
        // some equation through variable i now has the wrong sign
        auto p = paulis;
        p[i] = oracle::int_mul(oracle::int_identity(4, -1), p[i]);
        bool wrong = false;
        for (std::size_t r = 0; r < sys.equations.size(); ++r) {
            auto prod = oracle::int_identity(4);
            for (int v2 : sys.equations[r])
                prod = oracle::int_mul(prod, p[v2]);
            wrong = wrong || ! (prod == oracle::int_identity(4, sys.rhs[r] ? -1 : 1));
        }
        replay_ledger().record(wrong);
        CHECK(wrong);
    }
    auto bad = ops;
    bad[0] = ExactMatrix::identity(4).scaled(Gaussian(2));
    CHECK_FALSE(verify_qsolution(sys, bad).valid);
    bad = ops;
    std::swap(bad[0], bad[4]);
    CHECK_FALSE(verify_qsolution(sys, bad).valid);
}

TEST_CASE("GF(2) solver agrees with brute force")
{
    std::mt19937_64 rng(71);
    int sat = 0, unsat = 0;
    for (int t = 0; t < 300; ++t) {
        Gf2System s;
        s.variables = 1 + static_cast<int>(rng() % 8);
        int eqs = 1 + static_cast<int>(rng() % 10);
        for (int e = 0; e < eqs; ++e) {
            std::vector<int> vars;
            for (int v = 0; v < s.variables; ++v)
                if (rng() % 3 == 0)
                    vars.push_back(v);
            if (vars.empty())
                vars.push_back(0);
            s.equations.push_back(vars);
            s.rhs.push_back(static_cast<int>(rng() % 2));
        }
        bool any = false;
        for (std::uint32_t x = 0; x < (1u << s.variables) && ! any; ++x) {
            std::vector<int> v(s.variables);
            for (int i = 0; i < s.variables; ++i)
                v[i] = (x >> i) & 1u;
            any = gf2_check(s, v);
        }
        auto x = gf2_solve(s);
        CHECK(x.has_value() == any);
        if (x) {
            ++sat;
            CHECK(gf2_check(s, *x));
            CHECK(verify_qsolution(s, lift_classical(*x)).valid);
        }
        else
            ++unsat;
        CHECK(parse_system(write_system(s)).equations == s.equations);
    }
    CHECK(sat > 20);
    CHECK(unsat > 20);
}

TEST_CASE("the magic square has no classical solution")
{
    CHECK_FALSE(gf2_solve(parse_system(corpus_entry("magic_square").text)));
}

TEST_CASE("system parser errors")
{
    CHECK_THROWS_AS(parse_system("variables: 2\nx1 + x3 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_system("variables: 2\nx1 + x2 = 2\n"), ParseError);
    CHECK_THROWS_AS(parse_system("x1 + x1 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_system("x0 = 1\n"), ParseError);
    CHECK(parse_system("x1 + x3 = 1\n").variables == 3);
}

namespace {

auto tri_chain() -> Hypergraph { return parse_hypergraph(corpus_entry("tri_chain").text); }

auto edge_sums_ok(const Hypergraph & h, const Representation & rep) -> bool
{
    for (auto & e : h.edges) {
        ExactMatrix sum(rep.front().dim());
        for (int v : e)
            sum = sum + rep[v];
        if (! (sum == ExactMatrix::identity(rep.front().dim())))
            return false;
    }
    return std::all_of(rep.begin(), rep.end(), [](auto & p) { return p * p == p && p.is_self_adjoint(); });
}

}

TEST_CASE("bundled representations of the three-edge hypergraph")
{
    auto h = tri_chain();
    for (auto & name : {"tri_chain_rep1", "tri_chain_rep2", "tri_chain_rep3"}) {
        CAPTURE(name);
        auto rep = parse_representation(corpus_entry(name).text, h);
        CHECK(verify_hrep(h, rep).valid);
        CHECK(edge_sums_ok(h, rep));
        CHECK(parse_representation(write_representation(h, rep), h) == rep);
        for (std::size_t v = 0; v < rep.size(); ++v) {
            auto bad = rep;
            bad[v] = bad[v].is_zero() ? ExactMatrix::identity(bad[v].dim()) : ExactMatrix(bad[v].dim());
            CHECK_FALSE(verify_hrep(h, bad).valid);
            CHECK_FALSE(edge_sums_ok(h, bad));
        }
    }
}

TEST_CASE("non-projections and wrong dimensions are rejected")
{
    auto h = tri_chain();
    auto rep = parse_representation(corpus_entry("tri_chain_rep1").text, h);
    auto bad = rep;
    bad[0] = bad[0].scaled(Gaussian(2));
    auto v = verify_hrep(h, bad);
    CHECK_FALSE(v.valid);
    CHECK(v.vertex == 0);
    bad = rep;
    bad[1] = ExactMatrix::identity(2);
    CHECK_FALSE(verify_hrep(h, bad).valid);
    CHECK_FALSE(verify_hrep(h, Representation(rep.begin(), rep.begin() + 3)).valid);
}

TEST_CASE("representation search over candidate vectors")
{
    auto h = tri_chain();
    auto cands = parse_vectors(corpus_entry("tri_chain_candidates").text);
    CHECK(cands.size() == 7);
    CHECK(parse_vectors(write_vectors(cands)) == cands);
    for (int dim = 1; dim <= 3; ++dim) {
        auto cs = dim == 3 ? cands : std::vector<Vector>{};
        auto rep = search_hrep(h, dim, cs);
        REQUIRE(rep);
        CHECK(verify_hrep(h, *rep).valid);
        CHECK(edge_sums_ok(h, *rep));
    }
    auto loop = to_hypergraph(loop_diagram(4));
    auto r = search_hrep(loop, 3, cands);
    REQUIRE(r);
    CHECK(edge_sums_ok(loop, *r));
}

TEST_CASE("Kronecker products of Pauli matrices match integer arithmetic")
{
    auto to_exact = [](const oracle::IntMatrix & m) {
        ExactMatrix e(m.n);
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j)
                e(i, j) = Gaussian(mpq_class(m.at(i, j).first), mpq_class(m.at(i, j).second));
        return e;
    };
    for (char a : {'I', 'X', 'Y', 'Z'})
        for (char b : {'I', 'X', 'Y', 'Z'}) {
            auto k = kron(to_exact(oracle::pauli(a)), to_exact(oracle::pauli(b)));
            CHECK(oracle::same_matrix(oracle::int_kron(oracle::pauli(a), oracle::pauli(b)), k));
            CHECK(k.is_self_adjoint());
            CHECK(k * k == ExactMatrix::identity(4));
        }
}
