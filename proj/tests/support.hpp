#pragma once

// Independent oracles shared by the unit tests and the acceptance runner.
// Nothing here calls the library's meet/join tables, axiom checker or
// evaluators; structures are read only through leq, ortho and labels.

#include <qlwb/diagrams.hpp>
#include <qlwb/linalg.hpp>
#include <qlwb/structure.hpp>
#include <qlwb/term.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using qlwb::Element;
using qlwb::StructureTable;

inline auto greatest_of(const StructureTable & s, const std::vector<int> & xs) -> std::optional<int>
{
    for (int g : xs)
        if (std::all_of(xs.begin(), xs.end(), [&](int x) { return s.leq(x, g); }))
            return g;
    return std::nullopt;
}

inline auto least_of(const StructureTable & s, const std::vector<int> & xs) -> std::optional<int>
{
    for (int g : xs)
        if (std::all_of(xs.begin(), xs.end(), [&](int x) { return s.leq(g, x); }))
            return g;
    return std::nullopt;
}

inline auto meet(const StructureTable & s, int a, int b) -> std::optional<int>
{
    std::vector<int> lower;
    for (int x = 0; x < s.size(); ++x)
        if (s.leq(x, a) && s.leq(x, b))
            lower.push_back(x);
    return greatest_of(s, lower);
}

inline auto join(const StructureTable & s, int a, int b) -> std::optional<int>
{
    std::vector<int> upper;
    for (int x = 0; x < s.size(); ++x)
        if (s.leq(a, x) && s.leq(b, x))
            upper.push_back(x);
    return least_of(s, upper);
}

struct Laws
{
    bool lattice = false;
    bool orthoposet = false;
    bool ol = false;
    bool omp = false;
    bool oml = false;
    bool mol = false;
    bool boolean = false;
};

inline auto laws(const StructureTable & s) -> Laws
{
    const int n = s.size();
    Laws l;
    l.lattice = true;
    for (int a = 0; a < n && l.lattice; ++a)
        for (int b = 0; b < n && l.lattice; ++b)
            l.lattice = meet(s, a, b) && join(s, a, b);
    if (! s.has_ortho())
        return l;
    auto o = [&](int a) { return s.ortho(a); };
    l.orthoposet = true;
    for (int a = 0; a < n; ++a) {
        if (o(o(a)) != a)
            l.orthoposet = false;
        for (int b = 0; b < n; ++b)
            if (s.leq(a, b) && ! s.leq(o(b), o(a)))
                l.orthoposet = false;
        for (int x = 1; x < n; ++x)
            if (s.leq(x, a) && s.leq(x, o(a)) && x != 0)
                l.orthoposet = false;
    }
    if (! l.orthoposet)
        return l;
    l.omp = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (s.leq(a, o(b)) && ! join(s, a, b))
                l.omp = false;
        }
    for (int x = 0; x < n && l.omp; ++x)
        for (int y = 0; y < n && l.omp; ++y) {
            if (! s.leq(x, y))
                continue;
            auto j = join(s, x, o(y));
            auto k = j ? join(s, x, o(*j)) : std::nullopt;
            if (! k || *k != y)
                l.omp = false;
        }
    if (! l.lattice)
        return l;
    l.ol = true;
    std::vector<int> mt(n * n), jt(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            mt[a * n + b] = *meet(s, a, b);
            jt[a * n + b] = *join(s, a, b);
        }
    auto m = [&](int a, int b) { return mt[a * n + b]; };
    auto j = [&](int a, int b) { return jt[a * n + b]; };
    l.oml = l.mol = l.boolean = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (s.leq(x, y) && j(x, m(o(x), y)) != y)
                l.oml = false;
            for (int z = 0; z < n; ++z) {
                if (s.leq(x, z) && j(x, m(y, z)) != m(j(x, y), z))
                    l.mol = false;
                if (m(x, j(y, z)) != j(m(x, y), m(x, z)))
                    l.boolean = false;
            }
        }
    return l;
}

/// Term evaluation through naive meets and joins; nothing when an operation is undefined.
inline auto eval(const qlwb::Term & t, const StructureTable & s, const std::map<std::string, Element> & a)
    -> std::optional<Element>
{
    using qlwb::TermKind;
    switch (t.kind()) {
    case TermKind::variable:
        return a.at(t.name());
    case TermKind::zero:
        return 0;
    case TermKind::one:
        return s.size() - 1;
    case TermKind::complement: {
        auto c = oracle::eval(t.left(), s, a);
        if (! c || ! s.has_ortho())
            return std::nullopt;
        return s.ortho(*c);
    }
    default: {
        auto l = oracle::eval(t.left(), s, a);
        auto r = oracle::eval(t.right(), s, a);
        if (! l || ! r)
            return std::nullopt;
        return t.kind() == TermKind::meet ? meet(s, *l, *r) : join(s, *l, *r);
    }
    }
}

/// True iff the assignment makes the two sides of `eq` evaluate to different elements.
inline auto violates(const qlwb::Equation & eq, const StructureTable & s, const std::map<std::string, Element> & a)
    -> bool
{
    auto l = oracle::eval(eq.lhs, s, a);
    auto r = oracle::eval(eq.rhs, s, a);
    return l && r && *l != *r;
}

inline auto eval_bool(const qlwb::Term & t, const std::map<std::string, bool> & a) -> bool
{
    using qlwb::TermKind;
    switch (t.kind()) {
    case TermKind::variable:
        return a.at(t.name());
    case TermKind::zero:
        return false;
    case TermKind::one:
        return true;
    case TermKind::complement:
        return ! eval_bool(t.left(), a);
    case TermKind::meet:
        return eval_bool(t.left(), a) && eval_bool(t.right(), a);
    case TermKind::join:
        return eval_bool(t.left(), a) || eval_bool(t.right(), a);
    }
    return false;
}

inline auto truth_table_valid(const qlwb::Equation & eq) -> bool
{
    std::set<std::string> names;
    std::vector<qlwb::Term> todo{eq.lhs, eq.rhs};
    while (! todo.empty()) {
        auto t = todo.back();
        todo.pop_back();
        if (t.kind() == qlwb::TermKind::variable)
            names.insert(t.name());
        for (int i = 0; i < t.arity(); ++i)
            todo.push_back(t.child(i));
    }
    std::vector<std::string> vars(names.begin(), names.end());
    for (std::uint32_t bits = 0; bits < (1u << vars.size()); ++bits) {
        std::map<std::string, bool> a;
        for (std::size_t i = 0; i < vars.size(); ++i)
            a[vars[i]] = (bits >> i) & 1u;
        if (eval_bool(eq.lhs, a) != eval_bool(eq.rhs, a))
            return false;
    }
    return true;
}

/// Distinct Dedekind cuts, as closures LB(UB(S)) over every subset S. Feasible for n <= 20.
inline auto cuts(const StructureTable & p) -> std::set<std::uint32_t>
{
    const int n = p.size();
    std::set<std::uint32_t> out;
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
        std::uint32_t ub = 0, lb = 0;
        for (int x = 0; x < n; ++x) {
            bool above = true;
            for (int y = 0; y < n && above; ++y)
                if ((sub >> y) & 1u)
                    above = p.leq(y, x);
            if (above)
                ub |= 1u << x;
        }
        for (int x = 0; x < n; ++x) {
            bool below = true;
            for (int y = 0; y < n && below; ++y)
                if ((ub >> y) & 1u)
                    below = p.leq(x, y);
            if (below)
                lb |= 1u << x;
        }
        out.insert(lb);
    }
    return out;
}

/// Number of strictly increasing chains of even length (the empty chain included).
inline auto even_chain_count(const StructureTable & p) -> long
{
    long count = 0;
    std::vector<int> chain;
    auto rec = [&](auto && self, int last) -> void {
        if (chain.size() % 2 == 0)
            ++count;
        for (int x = 0; x < p.size(); ++x)
            if (last < 0 || p.less(last, x)) {
                chain.push_back(x);
                self(self, x);
                chain.pop_back();
            }
    };
    rec(rec, -1);
    return count;
}

/// Every bounded poset on n elements (labelled, bottom 0 and top n-1 fixed), 2 <= n <= 5.
inline auto bounded_posets(int n) -> std::vector<StructureTable>
{
    const int k = n - 2;
    std::vector<StructureTable> out;
    for (std::uint32_t rel = 0; rel < (1u << (k * k)); ++rel) {
        auto r = [&](int a, int b) { return (rel >> (a * k + b)) & 1u; };
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            if (r(a, a))
                ok = false;
            for (int b = 0; b < k && ok; ++b)
                for (int c = 0; c < k && ok; ++c)
                    if (r(a, b) && r(b, c) && ! r(a, c))
                        ok = false;
        }
        if (! ok)
            continue;
        std::vector<std::string> labels{"0"};
        for (int i = 0; i < k; ++i)
            labels.push_back("p" + std::to_string(i));
        labels.push_back("1");
        std::vector<std::pair<Element, Element>> less;
        less.emplace_back(0, n - 1);
        for (int a = 0; a < k; ++a) {
            less.emplace_back(0, a + 1);
            less.emplace_back(a + 1, n - 1);
            for (int b = 0; b < k; ++b)
                if (r(a, b))
                    less.emplace_back(a + 1, b + 1);
        }
        out.push_back(StructureTable::from_relation(labels, less));
    }
    return out;
}

/// Equivalence relations on {0..n-1} as n*n adjacency bitmasks, found by filtering all relations.
inline auto equivalence_relations(int n) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> out;
    auto bit = [n](int a, int b) { return 1u << (a * n + b); };
    for (std::uint32_t r = 0; r < (1u << (n * n)); ++r) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            ok = r & bit(a, a);
            for (int b = 0; b < n && ok; ++b) {
                if ((r & bit(a, b)) && ! (r & bit(b, a)))
                    ok = false;
                for (int c = 0; c < n && ok; ++c)
                    if ((r & bit(a, b)) && (r & bit(b, c)) && ! (r & bit(a, c)))
                        ok = false;
            }
        }
        if (ok)
            out.push_back(r);
    }
    return out;
}

inline auto relation_compose(int n, std::uint32_t r, std::uint32_t s) -> std::uint32_t
{
    std::uint32_t out = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if ((r >> (a * n + b) & 1u) && (s >> (b * n + c) & 1u))
                    out |= 1u << (a * n + c);
    return out;
}

struct RelPair
{
    std::uint32_t alpha, alpha_prime;
    auto operator<(const RelPair & o) const -> bool
    {
        return std::pair(alpha, alpha_prime) < std::pair(o.alpha, o.alpha_prime);
    }
    auto operator==(const RelPair & o) const -> bool = default;
};

inline auto factor_pair_oracle(int n) -> std::vector<RelPair>
{
    std::uint32_t diag = 0, all = (n * n == 32) ? ~0u : (1u << (n * n)) - 1;
    for (int a = 0; a < n; ++a)
        diag |= 1u << (a * n + a);
    auto eqs = equivalence_relations(n);
    std::vector<RelPair> out;
    for (auto a : eqs)
        for (auto b : eqs)
            if ((a & b) == diag && relation_compose(n, a, b) == all)
                out.push_back({a, b});
    return out;
}

inline auto fact_order_oracle(int n, const RelPair & x, const RelPair & y) -> bool
{
    auto sub = [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; };
    auto perm = [n](std::uint32_t a, std::uint32_t b) {
        return relation_compose(n, a, b) == relation_compose(n, b, a);
    };
    if (! sub(x.alpha, y.alpha) || ! sub(y.alpha_prime, x.alpha_prime))
        return false;
    std::uint32_t r[4] = {x.alpha, x.alpha_prime, y.alpha, y.alpha_prime};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (! perm(r[i], r[j]))
                return false;
    return true;
}

/// Atom 0/1 patterns with exactly one 1 in every block.
inline auto two_valued_atom_patterns(const qlwb::GreechieDiagram & d) -> std::set<std::vector<int>>
{
    const int m = static_cast<int>(d.atoms.size());
    std::set<std::vector<int>> out;
    std::vector<int> v(m, -1);
    // every block has exactly one atom set to 1, checked on partial assignments
    auto consistent = [&] {
        for (auto & b : d.blocks) {
            int ones = 0, open = 0;
            for (int a : b) {
                ones += v[a] == 1;
                open += v[a] == -1;
            }
            if (ones > 1 || (open == 0 && ones == 0))
                return false;
        }
        return true;
    };
    std::function<void(int)> go = [&](int a) {
        if (a == m) {
            out.insert(v);
            return;
        }
        for (int bit : {0, 1}) {
            v[a] = bit;
            if (consistent())
                go(a + 1);
        }
        v[a] = -1;
    };
    go(0);
    return out;
}

/// Solves the square-or-tall system A x = b by elimination; nothing unless the solution is unique.
inline auto unique_solution(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, int cols)
    -> std::optional<std::vector<mpq_class>>
{
    const int rows = static_cast<int>(a.size());
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0)
            return std::nullopt;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (int i = 0; i < rows; ++i)
            if (i != r && a[i][c] != 0) {
                mpq_class f = a[i][c] / a[r][c];
                for (int j = 0; j < cols; ++j)
                    a[i][j] -= f * a[r][j];
                b[i] -= f * b[r];
            }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols)
        return std::nullopt;
    for (int i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    std::vector<mpq_class> x(cols);
    for (int i = 0; i < r; ++i)
        x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

/// Vertices of {w >= 0 on atoms, every block sums to 1}: supports with a unique positive solution.
inline auto atom_polytope_vertices(const qlwb::GreechieDiagram & d) -> std::set<std::vector<mpq_class>>
{
    const int m = static_cast<int>(d.atoms.size());
    std::set<std::vector<mpq_class>> out;
    for (std::uint64_t support = 1; support < (std::uint64_t{1} << m); ++support) {
        std::vector<int> cols;
        for (int a = 0; a < m; ++a)
            if ((support >> a) & 1u)
                cols.push_back(a);
        std::vector<std::vector<mpq_class>> rows;
        std::vector<mpq_class> rhs;
        for (auto & blk : d.blocks) {
            std::vector<mpq_class> row(cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                row[j] = std::count(blk.begin(), blk.end(), cols[j]) ? 1 : 0;
            rows.push_back(row);
            rhs.push_back(1);
        }
        auto x = unique_solution(rows, rhs, static_cast<int>(cols.size()));
        if (! x || std::any_of(x->begin(), x->end(), [](const mpq_class & v) { return v <= 0; }))
            continue;
        std::vector<mpq_class> w(m);
        for (std::size_t j = 0; j < cols.size(); ++j)
            w[cols[j]] = (*x)[j];
        out.insert(w);
    }
    return out;
}

/// State axioms through naive joins: bounds, complements and additivity over orthogonal pairs.
inline auto is_state(const StructureTable & s, const std::vector<mpq_class> & v) -> bool
{
    const int n = s.size();
    if (static_cast<int>(v.size()) != n || v[0] != 0 || v[n - 1] != 1)
        return false;
    for (int a = 0; a < n; ++a) {
        if (v[a] < 0 || v[a] > 1 || v[a] + v[s.ortho(a)] != 1)
            return false;
        for (int b = 0; b < n; ++b)
            if (a != b && s.leq(a, s.ortho(b))) {
                auto j = join(s, a, b);
                if (j && v[*j] != v[a] + v[b])
                    return false;
            }
    }
    return true;
}

/// Random term over `vars` with at most `depth` levels of operators.
inline auto random_term(std::mt19937_64 & rng, const std::vector<std::string> & vars, int depth) -> qlwb::Term
{
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    if (depth == 0 || pick(4) == 0) {
        int k = pick(static_cast<int>(vars.size()) * 4 + 2);
        if (k == 0)
            return qlwb::Term::zero();
        if (k == 1)
            return qlwb::Term::one();
        return qlwb::Term::variable(vars[(k - 2) % vars.size()]);
    }
    switch (pick(3)) {
    case 0:
        return qlwb::Term::complement(random_term(rng, vars, depth - 1));
    case 1:
        return qlwb::Term::meet(random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
    default:
        return qlwb::Term::join(random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
    }
}

/// Integer complex 4x4 matrices for the two-qubit Pauli products.
struct IntMatrix
{
    int n = 0;
    std::vector<std::pair<long, long>> a;
    explicit IntMatrix(int n_ = 0) : n(n_), a(n_ * n_, {0, 0}) {}
    auto at(int r, int c) -> std::pair<long, long> & { return a[r * n + c]; }
    auto at(int r, int c) const -> const std::pair<long, long> & { return a[r * n + c]; }
    auto operator==(const IntMatrix &) const -> bool = default;
};

inline auto int_mul(const IntMatrix & x, const IntMatrix & y) -> IntMatrix
{
    IntMatrix z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            for (int k = 0; k < x.n; ++k) {
                auto [ar, ai] = x.at(i, k);
                auto [br, bi] = y.at(k, j);
                z.at(i, j).first += ar * br - ai * bi;
                z.at(i, j).second += ar * bi + ai * br;
            }
    return z;
}

inline auto int_kron(const IntMatrix & x, const IntMatrix & y) -> IntMatrix
{
    IntMatrix z(x.n * y.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            for (int k = 0; k < y.n; ++k)
                for (int l = 0; l < y.n; ++l) {
                    auto [ar, ai] = x.at(i, j);
                    auto [br, bi] = y.at(k, l);
                    z.at(i * y.n + k, j * y.n + l) = {ar * br - ai * bi, ar * bi + ai * br};
                }
    return z;
}

inline auto int_identity(int n, long scale = 1) -> IntMatrix
{
    IntMatrix z(n);
    for (int i = 0; i < n; ++i)
        z.at(i, i) = {scale, 0};
    return z;
}

/// Pauli I, X, Y, Z by letter.
inline auto pauli(char c) -> IntMatrix
{
    IntMatrix m(2);
    switch (c) {
    case 'I':
        return int_identity(2);
    case 'X':
        m.at(0, 1) = m.at(1, 0) = {1, 0};
        return m;
    case 'Y':
        m.at(0, 1) = {0, -1};
        m.at(1, 0) = {0, 1};
        return m;
    default:
        m.at(0, 0) = {1, 0};
        m.at(1, 1) = {-1, 0};
        return m;
    }
}

inline auto magic_square_paulis() -> std::vector<IntMatrix>
{
    const char * names[9] = {"XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"};
    std::vector<IntMatrix> out;
    for (auto * nm : names)
        out.push_back(int_kron(pauli(nm[0]), pauli(nm[1])));
    return out;
}

inline auto same_matrix(const IntMatrix & x, const qlwb::ExactMatrix & y) -> bool
{
    if (x.n != y.dim())
        return false;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            if (y(i, j).re != x.at(i, j).first || y(i, j).im != x.at(i, j).second)
                return false;
    return true;
}

}

/// Counts every witness-bearing result that a test re-evaluated independently.
struct ReplayLedger
{
    long checked = 0;
    long failed = 0;
    void record(bool ok)
    {
        ++checked;
        if (! ok)
            ++failed;
    }
};

inline auto replay_ledger() -> ReplayLedger &
{
    static ReplayLedger ledger;
    return ledger;
}
