#include "qlwb/analysis.hpp"
#include "qlwb/axioms.hpp"
#include "qlwb/error.hpp"

#include <algorithm>

namespace qlwb {

auto commutes(const StructureTable & s, Element a, Element b) -> std::optional<bool>
{
    auto ab = s.meet(a, b);
    auto ab_ = s.meet(a, s.ortho(b));
    if (! ab || ! ab_)
        return std::nullopt;
    auto j = s.join(*ab, *ab_);
    if (! j)
        return std::nullopt;
    return *j == a;
}

namespace {
    // Bron-Kerbosch with pivoting over the orthogonality graph of atoms.
    void maximal_cliques(const std::vector<ElementSet> & adj, ElementSet r, ElementSet p, ElementSet x,
        std::vector<std::vector<Element>> & out)
    {
        if (p.empty() && x.empty()) {
            out.push_back(r.members());
            return;
        }
        int pivot = -1, best = -1;
        for (auto set : {&p, &x})
            for (int u = set->first(); u != -1; u = set->next(u)) {
                auto c = (p & adj[u]).count();
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }
        auto candidates = p - adj[pivot];
        for (int v = candidates.first(); v != -1; v = candidates.next(v)) {
            auto r2 = r;
            r2.set(v);
            maximal_cliques(adj, r2, p & adj[v], x & adj[v], out);
            p.reset(v);
            x.set(v);
        }
    }
}

auto maximal_orthogonal_atom_sets(const StructureTable & s) -> std::vector<std::vector<Element>>
{
    if (! is_omp(s))
        throw PreconditionError("blocks require an orthomodular poset");
    const int n = s.size();
    auto & atoms = s.atoms();
    std::vector<ElementSet> adj(n, ElementSet(n));
    for (auto a : atoms)
        for (auto b : atoms)
            if (a != b && s.orthogonal(a, b))
                adj[a].set(b);
    ElementSet p(n);
    for (auto a : atoms)
        p.set(a);
    std::vector<std::vector<Element>> out;
    if (atoms.empty())
        return out;
    maximal_cliques(adj, ElementSet(n), p, ElementSet(n), out);
    std::sort(out.begin(), out.end());
    return out;
}

auto blocks(const StructureTable & s) -> std::vector<ElementSet>
{
    std::vector<ElementSet> result;
    if (s.size() <= 2) {
        // The one- and two-element structures are their own block.
        if (! is_omp(s))
            throw PreconditionError("blocks require an orthomodular poset");
        result.push_back(s.all_elements());
        return result;
    }
    for (auto & atom_set : maximal_orthogonal_atom_sets(s)) {
        std::vector<Element> members{s.bottom()};
        for (auto a : atom_set) {
            auto current = members.size();
            for (std::size_t i = 0; i < current; ++i)
                members.push_back(*s.join(members[i], a));
        }
        ElementSet block(s.size());
        for (auto m : members)
            block.set(m);
        result.push_back(std::move(block));
    }
    return result;
}

auto generated_sublattice(const StructureTable & s, const ElementSet & generators) -> ElementSet
{
    auto closure = generators;
    bool changed = true;
    while (changed) {
        changed = false;
        auto members = closure.members();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                auto m = s.meet(members[i], members[j]);
                auto k = s.join(members[i], members[j]);
                if (! m || ! k)
                    throw PreconditionError("sublattice generation needs existing meets and joins");
                for (auto e : {*m, *k})
                    if (! closure.test(e)) {
                        closure.set(e);
                        changed = true;
                    }
            }
    }
    return closure;
}

auto distributivity_violation(const StructureTable & s, const ElementSet & subset)
    -> std::optional<std::vector<Element>>
{
    auto members = subset.members();
    for (auto x : members)
        for (auto y : members)
            for (auto z : members) {
                auto lhs = s.meet(x, *s.join(y, z));
                auto rhs = s.join(*s.meet(x, y), *s.meet(x, z));
                if (lhs != rhs)
                    return std::vector<Element>{x, y, z};
            }
    return std::nullopt;
}

auto foulis_holland_hypothesis(const StructureTable & s, const ElementSet & subset, std::vector<Element> * failing)
    -> bool
{
    auto members = subset.members();
    const auto m = members.size();
    std::vector<std::vector<bool>> c(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            c[i][j] = commutes(s, members[i], members[j]).value_or(false);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                if (! (c[i][j] && c[i][k]) && ! (c[j][i] && c[j][k]) && ! (c[k][i] && c[k][j])) {
                    if (failing)
                        *failing = {members[i], members[j], members[k]};
                    return false;
                }
    return true;
}

auto foulis_holland_check(const StructureTable & s, const ElementSet & subset) -> FoulisHollandResult
{
    if (! is_oml(s))
        throw PreconditionError("Foulis-Holland check requires an orthomodular lattice");
    FoulisHollandResult result{FoulisHollandOutcome::hypothesis_not_met, ElementSet(s.size()), {}};
    if (! foulis_holland_hypothesis(s, subset, &result.witness))
        return result;
    result.generated = generated_sublattice(s, subset);
    if (auto v = distributivity_violation(s, result.generated)) {
        result.outcome = FoulisHollandOutcome::non_distributive;
        result.witness = *v;
    }
    else
        result.outcome = FoulisHollandOutcome::distributive;
    return result;
}

}
