#include "qlwb/states.hpp"
#include "qlwb/analysis.hpp"
#include "qlwb/axioms.hpp"
#include "qlwb/error.hpp"
#include "qlwb/lp.hpp"

#include <algorithm>
#include <sstream>

namespace qlwb {

namespace {
    void require_omp(const StructureTable & s, const char * what)
    {
        if (! is_omp(s))
            throw PreconditionError(std::string(what) + ": structure is not an orthomodular poset");
    }

    /// Equality system over the n element values: bounds and additivity.
    struct System
    {
        std::vector<Vector> rows;
        Vector rhs;
    };

    auto state_system(const StructureTable & s) -> System
    {
        const int n = s.size();
        System sys;
        auto unit = [&](Element e, int v) {
            Vector row(n, 0);
            row[e] = 1;
            sys.rows.push_back(std::move(row));
            sys.rhs.emplace_back(v);
        };
        unit(s.bottom(), 0);
        unit(s.top(), 1);
        for (auto [a, b] : additive_pairs(s)) {
            auto j = *s.join(a, b);
            Vector row(n, 0);
            row[j] += 1;
            row[a] -= 1;
            row[b] -= 1;
            sys.rows.push_back(std::move(row));
            sys.rhs.emplace_back(0);
        }
        // Reduce once; every caller adds a few rows to this.
        std::vector<Vector> aug;
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            auto row = sys.rows[r];
            row.push_back(sys.rhs[r]);
            aug.push_back(std::move(row));
        }
        rref(aug, n + 1);
        System reduced;
        for (auto & row : aug) {
            reduced.rhs.push_back(row[n]);
            row.resize(n);
            reduced.rows.push_back(std::move(row));
        }
        return reduced;
    }

    auto solve_over_states(const StructureTable & s, const System & base, const std::vector<StateConstraint> & extra,
        const Vector & objective) -> LpResult
    {
        const int n = s.size();
        int slacks = 0;
        for (auto & c : extra)
            if (c.relation != Relation::eq)
                ++slacks;
        LinearProgram lp;
        lp.variables = n + slacks;
        for (std::size_t r = 0; r < base.rows.size(); ++r) {
            auto row = base.rows[r];
            row.resize(lp.variables, 0);
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(base.rhs[r]);
        }
        int slack = n;
        for (auto & c : extra) {
            if (c.element < 0 || c.element >= n)
                throw InputError("state constraint refers to an unknown element");
            Vector row(lp.variables, 0);
            row[c.element] = 1;
            if (c.relation == Relation::le)
                row[slack++] = 1;
            else if (c.relation == Relation::ge)
                row[slack++] = -1;
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(c.value);
        }
        lp.objective = objective;
        lp.objective.resize(lp.variables, 0);
        return solve_lp(lp);
    }

    auto to_state(const StructureTable & s, const Vector & x) -> State
    {
        State st;
        st.values.assign(x.begin(), x.begin() + s.size());
        return st;
    }
}

auto additive_pairs(const StructureTable & s) -> std::vector<std::pair<Element, Element>>
{
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 1; a < s.size(); ++a)
        for (Element b = a; b < s.size(); ++b)
            if (s.orthogonal(a, b) && s.join(a, b))
                out.emplace_back(a, b);
    return out;
}

auto is_state(const StructureTable & s, const State & state) -> bool
{
    if (static_cast<int>(state.values.size()) != s.size())
        return false;
    if (state.values[s.bottom()] != 0 || state.values[s.top()] != 1)
        return false;
    for (auto & v : state.values)
        if (v < 0 || v > 1)
            return false;
    for (auto [a, b] : additive_pairs(s))
        if (state.values[*s.join(a, b)] != state.values[a] + state.values[b])
            return false;
    return true;
}

auto two_valued_states(const StructureTable & s) -> std::vector<State>
{
    require_omp(s, "two_valued_states");
    const auto & atoms = s.atoms();
    auto blocks = maximal_orthogonal_atom_sets(s);
    std::vector<int> atom_pos(s.size(), -1);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        atom_pos[atoms[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> blocks_of(atoms.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (auto a : blocks[b])
            blocks_of[atom_pos[a]].push_back(static_cast<int>(b));

    // A maximal orthogonal set of atoms below each element; its size counts the element in any state.
    std::vector<std::vector<int>> decomposition(s.size());
    for (Element x = 0; x < s.size(); ++x)
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (! s.leq(atoms[i], x))
                continue;
            bool orth = true;
            for (auto j : decomposition[x])
                orth = orth && s.orthogonal(atoms[i], atoms[j]);
            if (orth)
                decomposition[x].push_back(static_cast<int>(i));
        }

    std::vector<int> ones(blocks.size(), 0), open(blocks.size(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        open[b] = static_cast<int>(blocks[b].size());
    std::vector<int> value(atoms.size(), 0);
    std::vector<State> out;

    auto finish = [&] {
        State st;
        st.values.resize(s.size());
        for (Element x = 0; x < s.size(); ++x) {
            int sum = 0;
            for (auto i : decomposition[x])
                sum += value[i];
            if (sum > 1)
                return;
            st.values[x] = sum;
        }
        if (is_state(s, st))
            out.push_back(std::move(st));
    };

    auto search = [&](auto && self, std::size_t i) -> void {
        if (i == atoms.size()) {
            finish();
            return;
        }
        for (int v : {0, 1}) {
            bool ok = true;
            for (auto b : blocks_of[i]) {
                if (v == 1 && ones[b] > 0)
                    ok = false;
                if (v == 0 && ones[b] == 0 && open[b] == 1)
                    ok = false;
            }
            if (! ok)
                continue;
            for (auto b : blocks_of[i]) {
                ones[b] += v;
                --open[b];
            }
            value[i] = v;
            self(self, i + 1);
            for (auto b : blocks_of[i]) {
                ones[b] -= v;
                ++open[b];
            }
        }
        value[i] = 0;
    };
    search(search, 0);
    std::sort(out.begin(), out.end());
    return out;
}

auto parse_state_constraints(std::string_view text, const StructureTable & s) -> std::vector<StateConstraint>
{
    std::vector<StateConstraint> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        Relation rel;
        std::size_t at, len;
        if ((at = line.find("<=")) != std::string::npos) {
            rel = Relation::le;
            len = 2;
        }
        else if ((at = line.find(">=")) != std::string::npos) {
            rel = Relation::ge;
            len = 2;
        }
        else if ((at = line.find('=')) != std::string::npos) {
            rel = Relation::eq;
            len = 1;
        }
        else
            throw ParseError("expected '=', '<=' or '>='", line_no);
        auto trim = [](std::string t) {
            auto b = t.find_first_not_of(" \t\r");
            auto e = t.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
        };
        auto name = trim(line.substr(0, at));
        auto value = trim(line.substr(at + len));
        auto e = s.index_of(name);
        if (! e)
            throw ParseError("unknown element '" + name + "'", line_no);
        Rational q;
        try {
            q = parse_rational(value);
        }
        catch (const InputError & err) {
            throw ParseError(err.what(), line_no);
        }
        out.push_back({*e, rel, q});
    }
    return out;
}

auto state_lp(const StructureTable & s, const std::vector<StateConstraint> & constraints) -> std::optional<State>
{
    require_omp(s, "state_lp");
    auto base = state_system(s);
    auto r = solve_over_states(s, base, constraints, {});
    if (r.status != LpStatus::optimal)
        return std::nullopt;
    return to_state(s, r.x);
}

auto is_concrete(const StructureTable & s) -> ConcreteResult
{
    auto states = two_valued_states(s);
    ConcreteResult out;
    std::vector<bool> used(states.size(), false);
    for (Element a = 0; a < s.size(); ++a)
        for (Element b = 0; b < s.size(); ++b) {
            if (s.leq(a, b))
                continue;
            bool found = false;
            for (std::size_t i = 0; i < states.size() && ! found; ++i)
                if (states[i].values[a] == 1 && states[i].values[b] == 0) {
                    found = true;
                    used[i] = true;
                }
            if (! found && ! out.failing_pair)
                out.failing_pair = std::make_pair(a, b);
        }
    out.concrete = ! out.failing_pair;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (used[i])
            out.family.push_back(states[i]);
    return out;
}

auto strongly_order_determining(const StructureTable & s) -> SodResult
{
    require_omp(s, "strongly_order_determining");
    auto evidence = two_valued_states(s);
    auto base = state_system(s);
    SodResult out;
    for (Element a = 0; a < s.size(); ++a)
        for (Element b = 0; b < s.size(); ++b) {
            if (s.leq(a, b))
                continue;
            bool witnessed = false;
            for (auto & st : evidence)
                if (st.values[a] == 1 && st.values[b] < 1) {
                    witnessed = true;
                    break;
                }
            if (witnessed)
                continue;
            Vector objective(s.size(), 0);
            objective[b] = 1;
            auto r = solve_over_states(s, base, {{a, Relation::eq, Rational(1)}}, objective);
            if (r.status != LpStatus::optimal || r.value >= 1) {
                out.failing_pair = std::make_pair(a, b);
                out.failing_pair_infeasible = r.status != LpStatus::optimal;
                return out;
            }
            evidence.push_back(to_state(s, r.x));
        }
    out.holds = true;
    return out;
}

auto pure_states(const StructureTable & s, int cap) -> std::vector<State>
{
    if (s.size() > cap)
        throw ResourceError("pure_states: " + std::to_string(s.size()) + " elements exceeds the cap of " + std::to_string(cap));
    require_omp(s, "pure_states");
    const int n = s.size();
    auto base = state_system(s);
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(n, false);
    for (auto & row : base.rows) {
        int p = 0;
        while (p < n && row[p] == 0)
            ++p;
        if (p == n)
            return {}; // 0 = nonzero: no states
        pivot_of_row.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<int> free;
    for (int j = 0; j < n; ++j)
        if (! is_pivot[j])
            free.push_back(j);
    const int d = static_cast<int>(free.size());
    const int dims = d + 1;

    // Homogenised inequalities over (y_free, t): y >= 0, t >= 0, t*rhs_r - row_r(y) >= 0.
    std::vector<Vector> ineq;
    for (int i = 0; i < dims; ++i) {
        Vector a(dims, 0);
        a[i] = 1;
        ineq.push_back(std::move(a));
    }
    for (std::size_t r = 0; r < base.rows.size(); ++r) {
        Vector a(dims, 0);
        for (int i = 0; i < d; ++i)
            a[i] = -base.rows[r][free[i]];
        a[d] = base.rhs[r];
        ineq.push_back(std::move(a));
    }
    const int m = static_cast<int>(ineq.size());

    struct Ray
    {
        Vector v;
        ElementSet tight;
    };
    std::vector<Ray> rays;
    for (int i = 0; i < dims; ++i) {
        Ray r{Vector(dims, 0), ElementSet(m)};
        r.v[i] = 1;
        for (int j = 0; j < dims; ++j)
            if (j != i)
                r.tight.set(j);
        rays.push_back(std::move(r));
    }
    for (int k = dims; k < m; ++k) {
        std::vector<Rational> val(rays.size());
        std::vector<int> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(ineq[k], rays[i].v);
            if (val[i] > 0)
                pos.push_back(static_cast<int>(i));
            else if (val[i] < 0)
                neg.push_back(static_cast<int>(i));
        }
        for (auto p : pos) {
            for (auto q : neg) {
                auto common = rays[p].tight & rays[q].tight;
                if (common.count() < dims - 2)
                    continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (static_cast<int>(o) != p && static_cast<int>(o) != q && common.subset_of(rays[o].tight))
                        adjacent = false;
                if (! adjacent)
                    continue;
                Ray r{Vector(dims), common};
                for (int i = 0; i < dims; ++i)
                    r.v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
                Rational scale;
                for (auto & x : r.v)
                    if (x != 0) {
                        scale = abs(x);
                        break;
                    }
                for (auto & x : r.v)
                    x /= scale;
                r.tight.set(k);
                next.push_back(std::move(r));
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0)
                continue;
            if (val[i] == 0)
                rays[i].tight.set(k);
            next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
    }

    std::vector<State> out;
    for (auto & r : rays) {
        if (r.v[d] <= 0)
            continue;
        State st;
        st.values.assign(n, 0);
        for (int i = 0; i < d; ++i)
            st.values[free[i]] = r.v[i] / r.v[d];
        for (std::size_t row = 0; row < base.rows.size(); ++row) {
            Rational x = base.rhs[row];
            for (int i = 0; i < d; ++i)
                x -= base.rows[row][free[i]] * st.values[free[i]];
            st.values[pivot_of_row[row]] = x;
        }
        out.push_back(std::move(st));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto guz_conditions(const StructureTable & s, int cap) -> GuzResult
{
    GuzResult g;
    g.pure = pure_states(s, cap);
    const auto & pure = g.pure;
    g.condition1 = true;
    for (Element x = 1; x < s.size() && g.condition1; ++x) {
        bool certain = false;
        for (auto & st : pure)
            certain = certain || st.values[x] == 1;
        if (! certain) {
            g.condition1 = false;
            g.condition1_failure = x;
        }
    }
    g.condition2 = true;
    for (Element x = 0; x < s.size() && g.condition2; ++x)
        for (Element y = 0; y < s.size() && g.condition2; ++y) {
            if (s.leq(x, y))
                continue;
            bool sep = false;
            for (auto & st : pure)
                sep = sep || (st.values[x] == 1 && st.values[y] != 1);
            if (! sep) {
                g.condition2 = false;
                g.condition2_failure = std::make_pair(x, y);
            }
        }
    g.condition3 = true;
    g.tests.assign(pure.size(), -1);
    for (std::size_t i = 0; i < pure.size(); ++i) {
        for (Element x = 0; x < s.size() && g.tests[i] < 0; ++x) {
            if (pure[i].values[x] != 1)
                continue;
            bool private_event = true;
            for (std::size_t j = 0; j < pure.size() && private_event; ++j)
                if (j != i && pure[j].values[x] == 1)
                    private_event = false;
            if (private_event)
                g.tests[i] = x;
        }
        if (g.tests[i] < 0 && g.condition3) {
            g.condition3 = false;
            g.condition3_failure = static_cast<int>(i);
        }
    }
    return g;
}

auto format_state(const StructureTable & s, const State & state) -> std::string
{
    std::string out;
    for (Element e = 0; e < s.size(); ++e)
        out += (e ? " " : "") + s.label(e) + "=" + format_rational(state.values[e]);
    return out;
}

}
