#include "qlwb/quantum.hpp"
#include "qlwb/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qlwb {

namespace {
    void same_ambient(const Subspace & a, const Subspace & b)
    {
        if (a.ambient() != b.ambient())
            throw InputError("subspaces of different ambient dimensions");
    }
}

auto Subspace::span(int dim, std::vector<Vector> vectors) -> Subspace
{
    if (dim < 1)
        throw InputError("subspace: ambient dimension must be positive");
    for (auto & v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw InputError("subspace: vector length differs from ambient dimension");
    Subspace s;
    s._dim = dim;
    rref(vectors, dim);
    s._rows = std::move(vectors);
    return s;
}

auto Subspace::zero(int dim) -> Subspace
{
    return span(dim, {});
}

auto Subspace::whole(int dim) -> Subspace
{
    std::vector<Vector> rows;
    for (int i = 0; i < dim; ++i) {
        Vector v(dim, 0);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(dim, std::move(rows));
}

auto Subspace::contains(const Vector & v) const -> bool
{
    auto rows = _rows;
    rows.push_back(v);
    return rank(std::move(rows), _dim) == dimension();
}

auto sub_join(const Subspace & a, const Subspace & b) -> Subspace
{
    same_ambient(a, b);
    auto rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), std::move(rows));
}

auto sub_meet(const Subspace & a, const Subspace & b) -> Subspace
{
    same_ambient(a, b);
    const int n = a.ambient();
    // Zassenhaus: reduce [a | a] over [b | 0]; rows with zero left half span the intersection.
    std::vector<Vector> rows;
    for (auto & v : a.basis()) {
        Vector r(v);
        r.insert(r.end(), v.begin(), v.end());
        rows.push_back(std::move(r));
    }
    for (auto & v : b.basis()) {
        Vector r(v);
        r.resize(2 * n, 0);
        rows.push_back(std::move(r));
    }
    auto pivots = rref(rows, 2 * n);
    std::vector<Vector> meet;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (pivots[i] >= n)
            meet.emplace_back(rows[i].begin() + n, rows[i].end());
    return Subspace::span(n, std::move(meet));
}

auto sub_ortho(const Subspace & a) -> Subspace
{
    return Subspace::span(a.ambient(), null_space(a.basis(), a.ambient()));
}

auto sub_leq(const Subspace & a, const Subspace & b) -> bool
{
    return sub_join(a, b) == b;
}

auto format_subspace(const Subspace & s) -> std::string
{
    std::ostringstream out;
    out << "span{";
    for (std::size_t i = 0; i < s.basis().size(); ++i) {
        out << (i ? ", " : "") << '(';
        for (std::size_t j = 0; j < s.basis()[i].size(); ++j)
            out << (j ? "," : "") << format_rational(s.basis()[i][j]);
        out << ')';
    }
    out << '}';
    return out.str();
}

auto eval_subspace(const Term & t, int dim, const SubspaceAssignment & a) -> Subspace
{
    switch (t.kind()) {
    case TermKind::variable: {
        auto it = a.find(t.name());
        if (it == a.end())
            throw InputError("variable '" + t.name() + "' is not assigned");
        return it->second;
    }
    case TermKind::zero:
        return Subspace::zero(dim);
    case TermKind::one:
        return Subspace::whole(dim);
    case TermKind::complement:
        return sub_ortho(eval_subspace(t.left(), dim, a));
    case TermKind::meet:
        return sub_meet(eval_subspace(t.left(), dim, a), eval_subspace(t.right(), dim, a));
    case TermKind::join:
        return sub_join(eval_subspace(t.left(), dim, a), eval_subspace(t.right(), dim, a));
    }
    return Subspace::zero(dim);
}

SubspaceSampler::SubspaceSampler(int dim, std::uint64_t seed) : _dim(dim), _gen(seed)
{
    if (dim < 1)
        throw InputError("sampler: dimension must be positive");
}

auto SubspaceSampler::below(std::uint64_t n) -> std::uint64_t
{
    return _gen() % n;
}

auto SubspaceSampler::next() -> Subspace
{
    auto k = static_cast<int>(below(static_cast<std::uint64_t>(_dim) + 1));
    std::vector<Vector> vectors;
    for (int i = 0; i < k; ++i) {
        Vector v(_dim);
        for (auto & x : v)
            x = static_cast<int>(below(7)) - 3;
        vectors.push_back(std::move(v));
    }
    return Subspace::span(_dim, std::move(vectors));
}

auto sample_refute(const Equation & eq, int dim, int samples, std::uint64_t seed) -> std::optional<SubspaceCounterexample>
{
    SubspaceSampler sampler(dim, seed);
    auto vars = variables(eq);
    for (int i = 0; i < samples; ++i) {
        SubspaceAssignment a;
        for (auto & v : vars)
            a[v] = sampler.next();
        auto l = eval_subspace(eq.lhs, dim, a);
        auto r = eval_subspace(eq.rhs, dim, a);
        if (! (l == r)) {
            // Replay on a fresh evaluation before reporting.
            if (eval_subspace(eq.lhs, dim, a) == eval_subspace(eq.rhs, dim, a))
                throw Error("sample_refute: replay disagreed");
            return SubspaceCounterexample{i, std::move(a), std::move(l), std::move(r)};
        }
    }
    return std::nullopt;
}

auto n_distributive_term(int n) -> Equation
{
    if (n < 1)
        throw InputError("n-distributive law: n must be at least 1");
    auto x = Term::variable("x");
    std::vector<Term> y;
    for (int i = 0; i <= n; ++i)
        y.push_back(Term::variable("y" + std::to_string(i)));
    auto join_except = [&](int skip) {
        std::optional<Term> acc;
        for (int j = 0; j <= n; ++j)
            if (j != skip)
                acc = acc ? Term::join(*acc, y[j]) : y[j];
        return *acc;
    };
    auto lhs = Term::meet(x, join_except(-1));
    std::optional<Term> rhs;
    for (int i = 0; i <= n; ++i) {
        auto part = Term::meet(x, join_except(i));
        rhs = rhs ? Term::join(*rhs, part) : part;
    }
    return {lhs, *rhs};
}

auto verify_hrep(const Hypergraph & h, const Representation & rep) -> HrepVerdict
{
    HrepVerdict v;
    if (rep.size() != h.vertices.size()) {
        v.reason = "representation has " + std::to_string(rep.size()) + " projections for " + std::to_string(h.vertices.size())
            + " vertices";
        return v;
    }
    if (rep.empty() || rep[0].dim() < 1) {
        v.reason = "dimension must be positive";
        return v;
    }
    const int dim = rep[0].dim();
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (rep[i].dim() != dim) {
            v.reason = "projection for '" + h.vertices[i] + "' has a different dimension";
            v.vertex = static_cast<int>(i);
            return v;
        }
        if (! rep[i].is_projection()) {
            v.reason = "matrix for '" + h.vertices[i] + "' is not a projection (P = P* = P^2 fails)";
            v.vertex = static_cast<int>(i);
            return v;
        }
    }
    auto id = ExactMatrix::identity(dim);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        ExactMatrix sum(dim);
        for (auto x : h.edges[e])
            sum = sum + rep[x];
        if (! (sum == id)) {
            std::string names;
            for (auto x : h.edges[e])
                names += (names.empty() ? "" : " ") + h.vertices[x];
            v.reason = "edge {" + names + "} does not sum to the identity";
            v.edge = static_cast<int>(e);
            return v;
        }
    }
    v.valid = true;
    v.reason = "every edge sums to the identity";
    return v;
}

auto search_hrep(const Hypergraph & h, int dim, const std::vector<Vector> & candidates, long max_nodes)
    -> std::optional<Representation>
{
    validate(h);
    if (dim < 1)
        throw InputError("search_hrep: dimension must be positive");
    if (candidates.size() > 20)
        throw ResourceError("search_hrep: more than 20 candidate vectors");
    // Distinct spans of candidate subsets, with 0 and the whole space.
    std::set<std::vector<Vector>> seen;
    std::vector<ExactMatrix> proj;
    std::vector<int> proj_rank;
    auto add = [&](const Subspace & s) {
        if (seen.insert(s.basis()).second) {
            auto p = ExactMatrix::projection(s.basis(), dim);
            if (! p.is_projection())
                throw Error("search_hrep: candidate projection failed P = P* = P^2");
            proj.push_back(std::move(p));
            proj_rank.push_back(s.dimension());
        }
    };
    add(Subspace::zero(dim));
    add(Subspace::whole(dim));
    const std::size_t k = candidates.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i))
                vs.push_back(candidates[i]);
        add(Subspace::span(dim, vs));
    }
    const int c = static_cast<int>(proj.size());
    std::vector<std::vector<bool>> orth(c, std::vector<bool>(c));
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b)
            orth[a][b] = (proj[a] * proj[b]).is_zero();

    const int nv = static_cast<int>(h.vertices.size());
    std::vector<std::vector<int>> edges_of(nv);
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (auto x : h.edges[e])
            edges_of[x].push_back(static_cast<int>(e));
    std::vector<int> choice(nv, -1);
    std::vector<int> rank_sum(h.edges.size(), 0), assigned(h.edges.size(), 0);
    long nodes = 0;
    auto rec = [&](auto && self, int v) -> bool {
        if (++nodes > max_nodes)
            throw ResourceError("search_hrep: node budget exhausted");
        if (v == nv)
            return true;
        for (int p = 0; p < c; ++p) {
            bool ok = true;
            for (auto e : edges_of[v]) {
                int rs = rank_sum[e] + proj_rank[p];
                bool last = assigned[e] + 1 == static_cast<int>(h.edges[e].size());
                if (rs > dim || (last && rs != dim)) {
                    ok = false;
                    break;
                }
                for (auto u : h.edges[e])
                    if (u != v && choice[u] >= 0 && ! orth[choice[u]][p]) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    break;
            }
            if (! ok)
                continue;
            choice[v] = p;
            for (auto e : edges_of[v]) {
                rank_sum[e] += proj_rank[p];
                ++assigned[e];
            }
            if (self(self, v + 1))
                return true;
            for (auto e : edges_of[v]) {
                rank_sum[e] -= proj_rank[p];
                --assigned[e];
            }
            choice[v] = -1;
        }
        return false;
    };
    if (! rec(rec, 0))
        return std::nullopt;
    Representation rep;
    for (auto p : choice)
        rep.push_back(proj[p]);
    if (! verify_hrep(h, rep).valid)
        throw Error("search_hrep: result failed verification");
    return rep;
}

auto gf2_solve(const Gf2System & system) -> std::optional<std::vector<int>>
{
    const int n = system.variables;
    std::vector<std::vector<std::uint8_t>> rows;
    for (std::size_t r = 0; r < system.equations.size(); ++r) {
        std::vector<std::uint8_t> row(n + 1, 0);
        for (auto x : system.equations[r]) {
            if (x < 0 || x >= n)
                throw InputError("gf2_solve: variable index out of range");
            row[x] ^= 1;
        }
        row[n] = static_cast<std::uint8_t>(system.rhs[r] & 1);
        rows.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && ! rows[p][c])
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c])
                for (int k = c; k <= n; ++k)
                    rows[i][k] ^= rows[r][k];
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][n])
            return std::nullopt;
    std::vector<int> x(n, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = rows[i][n];
    return x;
}

auto gf2_check(const Gf2System & system, const std::vector<int> & x) -> bool
{
    if (static_cast<int>(x.size()) != system.variables)
        return false;
    for (std::size_t r = 0; r < system.equations.size(); ++r) {
        int s = 0;
        for (auto v : system.equations[r])
            s ^= x[v] & 1;
        if (s != (system.rhs[r] & 1))
            return false;
    }
    return true;
}

auto verify_qsolution(const Gf2System & system, const std::vector<ExactMatrix> & ops) -> QsolVerdict
{
    QsolVerdict v;
    if (static_cast<int>(ops.size()) != system.variables) {
        v.reason = "expected " + std::to_string(system.variables) + " operators, got " + std::to_string(ops.size());
        return v;
    }
    if (ops.empty() || ops[0].dim() < 1) {
        v.reason = "dimension must be positive";
        return v;
    }
    const int dim = ops[0].dim();
    auto id = ExactMatrix::identity(dim);
    for (int i = 0; i < system.variables; ++i) {
        if (ops[i].dim() != dim) {
            v.reason = "operator x" + std::to_string(i + 1) + " has a different dimension";
            v.variable = i;
            return v;
        }
        if (! ops[i].is_self_adjoint()) {
            v.reason = "operator x" + std::to_string(i + 1) + " is not self-adjoint";
            v.variable = i;
            return v;
        }
        if (! (ops[i] * ops[i] == id)) {
            v.reason = "operator x" + std::to_string(i + 1) + " does not square to 1";
            v.variable = i;
            return v;
        }
    }
    for (std::size_t e = 0; e < system.equations.size(); ++e) {
        const auto & eq = system.equations[e];
        for (std::size_t a = 0; a < eq.size(); ++a)
            for (std::size_t b = a + 1; b < eq.size(); ++b)
                if (! (ops[eq[a]] * ops[eq[b]] == ops[eq[b]] * ops[eq[a]])) {
                    v.reason = "x" + std::to_string(eq[a] + 1) + " and x" + std::to_string(eq[b] + 1) + " share equation "
                        + std::to_string(e + 1) + " but do not commute";
                    v.pair = std::make_pair(eq[a], eq[b]);
                    v.equation = static_cast<int>(e);
                    return v;
                }
    }
    for (std::size_t e = 0; e < system.equations.size(); ++e) {
        auto prod = id;
        for (auto x : system.equations[e])
            prod = prod * ops[x];
        auto want = (system.rhs[e] & 1) ? id.scaled(Gaussian(-1)) : id;
        if (! (prod == want)) {
            v.reason = "product over equation " + std::to_string(e + 1) + " is not " + ((system.rhs[e] & 1) ? "-1" : "1");
            v.equation = static_cast<int>(e);
            return v;
        }
    }
    v.valid = true;
    v.reason = "all operator conditions hold";
    return v;
}

auto lift_classical(const std::vector<int> & x) -> std::vector<ExactMatrix>
{
    std::vector<ExactMatrix> out;
    for (auto b : x) {
        ExactMatrix m(1);
        m(0, 0) = (b & 1) ? -1 : 1;
        out.push_back(std::move(m));
    }
    return out;
}

}
