#include "qlwb/proof.hpp"
#include "qlwb/error.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace qlwb {

auto theory_name(Theory t) -> std::string
{
    return t == Theory::ol ? "ol" : "oml";
}

namespace {
    auto build_axioms(bool orthomodular) -> std::vector<Axiom>
    {
        std::vector<std::pair<const char *, const char *>> raw = {
            {"meet-comm", "x & y = y & x"},
            {"join-comm", "x | y = y | x"},
            {"meet-assoc", "(x & y) & z = x & (y & z)"},
            {"join-assoc", "(x | y) | z = x | (y | z)"},
            {"meet-absorb", "x & (x | y) = x"},
            {"join-absorb", "x | (x & y) = x"},
            {"meet-idem", "x & x = x"},
            {"join-idem", "x | x = x"},
            {"involution", "x'' = x"},
            {"de-morgan-meet", "(x & y)' = x' | y'"},
            {"de-morgan-join", "(x | y)' = x' & y'"},
            {"contradiction", "x & x' = 0"},
            {"excluded-middle", "x | x' = 1"},
            {"meet-one", "x & 1 = x"},
            {"join-zero", "x | 0 = x"},
            {"meet-zero", "x & 0 = 0"},
            {"join-one", "x | 1 = 1"},
            {"zero-ortho", "0' = 1"},
        };
        if (orthomodular)
            raw.emplace_back("orthomodular", "x | (x' & (x | y)) = x | y");
        std::vector<Axiom> out;
        for (auto [name, text] : raw)
            out.push_back({name, parse_equation(text)});
        return out;
    }

    auto match(const Term & pattern, const Term & t, std::map<std::string, Term> & sigma) -> bool
    {
        if (pattern.kind() == TermKind::variable) {
            auto [it, fresh] = sigma.emplace(pattern.name(), t);
            return fresh || it->second == t;
        }
        if (pattern.kind() != t.kind())
            return false;
        for (int i = 0; i < pattern.arity(); ++i)
            if (! match(pattern.child(i), t.child(i), sigma))
                return false;
        return true;
    }

    void positions(const Term & t, std::vector<int> & path, std::vector<std::pair<std::vector<int>, const Term *>> & out)
    {
        out.emplace_back(path, &t);
        for (int i = 0; i < t.arity(); ++i) {
            path.push_back(i);
            positions(t.child(i), path, out);
            path.pop_back();
        }
    }

    auto position_text(const std::vector<int> & p) -> std::string
    {
        if (p.empty())
            return "root";
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i)
            s += (i ? "." : "") + std::to_string(p[i]);
        return s;
    }

    constexpr std::size_t max_stored = 1500000;
}

auto axioms(Theory t) -> const std::vector<Axiom> &
{
    static const std::vector<Axiom> ol = build_axioms(false);
    static const std::vector<Axiom> oml = build_axioms(true);
    return t == Theory::ol ? ol : oml;
}

struct ProofSearch::Impl
{
    struct Entry
    {
        Term term;
        std::string parent;
        std::optional<ProofStep> step;
    };

    struct Side
    {
        std::unordered_map<std::string, Entry> seen;
        std::deque<std::string> queue;
    };

    Theory theory;
    Equation goal;
    ProofBudget budget;
    std::vector<Term> pool;
    std::vector<std::vector<std::string>> target_free;
    Side sides[2];
    long expanded = 0;
    bool full = false;
    std::optional<Proof> found;

    Impl(Theory th, const Equation & g, ProofBudget b) : theory(th), goal(g), budget(b)
    {
        if (budget.max_term_size <= 0)
            budget.max_term_size = std::max(goal.lhs.size(), goal.rhs.size()) + 6;
        for (auto & v : variables(goal))
            pool.push_back(Term::variable(v));
        if (pool.empty())
            pool.push_back(Term::zero());
        sides[0].seen.emplace(goal.lhs.key(), Entry{goal.lhs, {}, {}});
        sides[0].queue.push_back(goal.lhs.key());
        sides[1].seen.emplace(goal.rhs.key(), Entry{goal.rhs, {}, {}});
        sides[1].queue.push_back(goal.rhs.key());
        if (goal.lhs == goal.rhs)
            found = Proof{theory, {goal.lhs}, {}};
    }

    auto chain_to_root(int side, const std::string & key) -> std::pair<std::vector<Term>, std::vector<ProofStep>>
    {
        std::vector<Term> terms;
        std::vector<ProofStep> steps;
        auto cur = key;
        while (true) {
            auto & e = sides[side].seen.at(cur);
            terms.push_back(e.term);
            if (! e.step)
                break;
            steps.push_back(*e.step);
            cur = e.parent;
        }
        return {terms, steps};
    }

    void build_proof(const std::string & meeting)
    {
        auto [lt, ls] = chain_to_root(0, meeting);
        auto [rt, rs] = chain_to_root(1, meeting);
        Proof p{theory, {}, {}};
        // lt runs meeting -> lhs; reverse it to read lhs -> meeting.
        p.terms.assign(lt.rbegin(), lt.rend());
        p.steps.assign(ls.rbegin(), ls.rend());
        // rt runs meeting -> rhs already, with steps recorded rhs-ward as parent -> child.
        for (std::size_t i = 0; i < rs.size(); ++i) {
            auto step = rs[i];
            step.left_to_right = ! step.left_to_right;
            p.steps.push_back(step);
            p.terms.push_back(rt[i + 1]);
        }
        found = std::move(p);
    }

    void expand_one(int side)
    {
        auto key = sides[side].queue.front();
        sides[side].queue.pop_front();
        Term t = sides[side].seen.at(key).term;
        ++expanded;
        std::vector<std::pair<std::vector<int>, const Term *>> at;
        std::vector<int> path;
        positions(t, path, at);
        const auto & ax = axioms(theory);
        for (auto & [pos, sub] : at) {
            for (std::size_t i = 0; i < ax.size(); ++i) {
                for (int dir = 0; dir < 2; ++dir) {
                    const Term & from = dir == 0 ? ax[i].equation.lhs : ax[i].equation.rhs;
                    const Term & to = dir == 0 ? ax[i].equation.rhs : ax[i].equation.lhs;
                    std::map<std::string, Term> sigma;
                    if (! match(from, *sub, sigma))
                        continue;
                    std::vector<std::string> free;
                    for (auto & v : variables(to))
                        if (! sigma.count(v))
                            free.push_back(v);
                    // Enumerate instantiations of variables that appear only in `to`.
                    std::vector<std::size_t> choice(free.size(), 0);
                    while (true) {
                        auto s = sigma;
                        for (std::size_t k = 0; k < free.size(); ++k)
                            s.emplace(free[k], pool[choice[k]]);
                        auto replacement = substitute(to, s);
                        if (t.size() - sub->size() + replacement.size() <= budget.max_term_size) {
                            auto next = replace_at(t, pos, replacement);
                            auto nk = next.key();
                            auto & mine = sides[side].seen;
                            if (! mine.count(nk)) {
                                if (mine.size() + sides[1 - side].seen.size() >= max_stored) {
                                    full = true;
                                }
                                else {
                                    ProofStep step{static_cast<int>(i), dir == 0, pos, s};
                                    mine.emplace(nk, Entry{next, key, step});
                                    sides[side].queue.push_back(nk);
                                    if (sides[1 - side].seen.count(nk)) {
                                        build_proof(nk);
                                        return;
                                    }
                                }
                            }
                        }
                        std::size_t k = 0;
                        while (k < free.size() && ++choice[k] == pool.size())
                            choice[k++] = 0;
                        if (k == free.size())
                            break;
                    }
                }
            }
        }
    }

    auto out_of_budget() const -> bool
    {
        if (expanded >= budget.max_steps)
            return true;
        if (budget.deadline && std::chrono::steady_clock::now() >= *budget.deadline)
            return true;
        return false;
    }

    auto exhausted() const -> bool
    {
        return ! found && (out_of_budget() || (sides[0].queue.empty() && sides[1].queue.empty()));
    }
};

ProofSearch::ProofSearch(Theory theory, const Equation & goal, ProofBudget budget) :
    _impl(std::make_unique<Impl>(theory, goal, budget))
{
}

ProofSearch::~ProofSearch() = default;
ProofSearch::ProofSearch(ProofSearch &&) noexcept = default;
auto ProofSearch::operator=(ProofSearch &&) noexcept -> ProofSearch & = default;

auto ProofSearch::advance(long steps) -> std::optional<Proof>
{
    auto & m = *_impl;
    for (long i = 0; i < steps && ! m.found; ++i) {
        if (m.out_of_budget())
            break;
        auto & a = m.sides[0].queue;
        auto & b = m.sides[1].queue;
        if (a.empty() && b.empty())
            break;
        int side = a.empty() ? 1 : b.empty() ? 0 : (a.size() <= b.size() ? 0 : 1);
        m.expand_one(side);
    }
    return m.found;
}

auto ProofSearch::expanded() const -> long
{
    return _impl->expanded;
}

auto ProofSearch::exhausted() const -> bool
{
    return _impl->exhausted();
}

auto prove(Theory theory, const Equation & goal, ProofBudget budget) -> std::optional<Proof>
{
    ProofSearch search(theory, goal, budget);
    return search.advance(budget.max_steps);
}

auto check_proof(const Proof & proof, const Equation & goal) -> bool
{
    if (proof.terms.empty() || proof.steps.size() + 1 != proof.terms.size())
        return false;
    if (! (proof.terms.front() == goal.lhs) || ! (proof.terms.back() == goal.rhs))
        return false;
    const auto & ax = axioms(proof.theory);
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        const auto & st = proof.steps[i];
        if (st.axiom < 0 || st.axiom >= static_cast<int>(ax.size()))
            return false;
        const auto & eq = ax[st.axiom].equation;
        for (auto & v : variables(eq))
            if (! st.substitution.count(v))
                return false;
        const Term & from = st.left_to_right ? eq.lhs : eq.rhs;
        const Term & to = st.left_to_right ? eq.rhs : eq.lhs;
        try {
            if (! (subterm(proof.terms[i], st.position) == substitute(from, st.substitution)))
                return false;
            if (! (replace_at(proof.terms[i], st.position, substitute(to, st.substitution)) == proof.terms[i + 1]))
                return false;
        }
        catch (const InputError &) {
            return false;
        }
    }
    return true;
}

auto format_proof(const Proof & proof) -> std::string
{
    std::ostringstream out;
    const auto & ax = axioms(proof.theory);
    if (proof.terms.empty())
        return {};
    out << "  " << to_string(proof.terms.front()) << '\n';
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        const auto & st = proof.steps[i];
        out << "= " << to_string(proof.terms[i + 1]) << "    [" << ax[st.axiom].name << (st.left_to_right ? " ->" : " <-")
            << " @" << position_text(st.position);
        bool first = true;
        for (auto & [v, t] : st.substitution) {
            out << (first ? "; " : ", ") << v << " := " << to_string(t);
            first = false;
        }
        out << "]\n";
    }
    return out.str();
}

}
