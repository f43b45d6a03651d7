#include "qlwb/embedding.hpp"
#include "qlwb/axioms.hpp"
#include "qlwb/error.hpp"

#include <algorithm>

namespace qlwb {

namespace {
    struct SearchSpec
    {
        bool use_ortho = false;
        bool bijective = false;
        bool reflect_order = false;
        bool all_meets_joins = false;
        bool orthogonal_joins = false;
    };

    class Searcher
    {
    public:
        Searcher(const StructureTable & small, const StructureTable & big, SearchSpec spec, SearchBudget budget) :
            _small(small),
            _big(big),
            _spec(spec),
            _budget(budget),
            _map(small.size(), -1),
            _used(big.size(), false)
        {
            const int n = small.size();
            _meet_pre.resize(n);
            _join_pre.resize(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (_spec.all_meets_joins) {
                        if (auto m = small.meet(u, v))
                            _meet_pre[*m].emplace_back(u, v);
                        if (auto j = small.join(u, v))
                            _join_pre[*j].emplace_back(u, v);
                    }
                    else if (_spec.orthogonal_joins && small.orthogonal(u, v)) {
                        if (auto j = small.join(u, v))
                            _join_pre[*j].emplace_back(u, v);
                    }
                }

            // Assign bounds first, then by height, ortho partner right after each element.
            std::vector<Element> by_height;
            for (int x = 1; x < small.top(); ++x)
                by_height.push_back(x);
            std::stable_sort(by_height.begin(), by_height.end(),
                [&](Element x, Element y) { return small.height(x) < small.height(y); });
            std::vector<bool> placed(n, false);
            for (auto x : by_height) {
                if (placed[x])
                    continue;
                placed[x] = true;
                _order.push_back(x);
                if (_spec.use_ortho && ! placed[small.ortho(x)]) {
                    placed[small.ortho(x)] = true;
                    _order.push_back(small.ortho(x));
                }
            }

            for (int x = 0; x < n; ++x) {
                _small_down.push_back(small.down(x).count());
                _small_up.push_back(small.up(x).count());
                _small_lower_covers.push_back(0);
            }
            for (int x = 0; x < big.size(); ++x) {
                _big_down.push_back(big.down(x).count());
                _big_up.push_back(big.up(x).count());
                _big_lower_covers.push_back(0);
            }
            for (int x = 0; x < n; ++x)
                for (auto y : small.upper_covers(x))
                    ++_small_lower_covers[y];
            for (int x = 0; x < big.size(); ++x)
                for (auto y : big.upper_covers(x))
                    ++_big_lower_covers[y];
        }

        auto run() -> std::optional<Embedding>
        {
            if (_spec.bijective && _small.size() != _big.size())
                return std::nullopt;
            if (_small.size() > _big.size())
                return std::nullopt;
            if (! assign(_small.bottom(), _big.bottom()))
                return std::nullopt;
            if (_small.size() > 1) {
                if (_big.size() < 2 || ! assign(_small.top(), _big.top()))
                    return std::nullopt;
            }
            if (search(0))
                return _map;
            return std::nullopt;
        }

    private:
        auto compatible_invariants(Element x, Element y) const -> bool
        {
            if (_spec.bijective)
                return _small_down[x] == _big_down[y] && _small_up[x] == _big_up[y]
                    && _small.height(x) == _big.height(y) && _small_lower_covers[x] == _big_lower_covers[y];
            return _small_down[x] <= _big_down[y] && _small_up[x] <= _big_up[y];
        }

        auto check_order(Element x, Element y) const -> bool
        {
            for (int u = 0; u < _small.size(); ++u) {
                auto fu = _map[u];
                if (fu < 0 || u == x)
                    continue;
                if (_small.leq(u, x) && ! _big.leq(fu, y))
                    return false;
                if (_small.leq(x, u) && ! _big.leq(y, fu))
                    return false;
                if (_spec.reflect_order) {
                    if (_big.leq(fu, y) && ! _small.leq(u, x))
                        return false;
                    if (_big.leq(y, fu) && ! _small.leq(x, u))
                        return false;
                }
            }
            return true;
        }

        // Every (u, v, result) triple is checked once its last member is assigned.
        auto check_operations(Element x) const -> bool
        {
            if (! _spec.all_meets_joins && ! _spec.orthogonal_joins)
                return true;
            auto fx = _map[x];
            for (int u = 0; u < _small.size(); ++u) {
                if (_map[u] < 0)
                    continue;
                if (_spec.all_meets_joins) {
                    if (auto m = _small.meet(u, x); m && _map[*m] >= 0 && _big.meet(_map[u], fx) != _map[*m])
                        return false;
                    if (auto j = _small.join(u, x); j && _map[*j] >= 0 && _big.join(_map[u], fx) != _map[*j])
                        return false;
                }
                else if (_small.orthogonal(u, x)) {
                    if (auto j = _small.join(u, x); j && _map[*j] >= 0 && _big.join(_map[u], fx) != _map[*j])
                        return false;
                }
            }
            for (auto [u, v] : _meet_pre[x])
                if (_map[u] >= 0 && _map[v] >= 0 && _big.meet(_map[u], _map[v]) != fx)
                    return false;
            for (auto [u, v] : _join_pre[x])
                if (_map[u] >= 0 && _map[v] >= 0 && _big.join(_map[u], _map[v]) != fx)
                    return false;
            return true;
        }

        auto assign(Element x, Element y) -> bool
        {
            if (_used[y] || ! compatible_invariants(x, y) || ! check_order(x, y))
                return false;
            _map[x] = y;
            _used[y] = true;
            if (! check_operations(x)) {
                unassign(x);
                return false;
            }
            return true;
        }

        void unassign(Element x)
        {
            _used[_map[x]] = false;
            _map[x] = -1;
        }

        auto search(std::size_t depth) -> bool
        {
            if (++_nodes > _budget.max_nodes)
                throw ResourceError("embedding search exceeded its node budget");
            if (depth == _order.size())
                return true;
            auto x = _order[depth];
            if (_map[x] >= 0)
                return search(depth + 1);
            for (int y = 1; y < _big.top(); ++y) {
                if (_used[y])
                    continue;
                if (_spec.use_ortho) {
                    auto xo = _small.ortho(x), yo = _big.ortho(y);
                    if (yo == y || _used[yo])
                        continue;
                    if (! assign(x, y))
                        continue;
                    if (assign(xo, yo)) {
                        if (search(depth + 1))
                            return true;
                        unassign(xo);
                    }
                    unassign(x);
                }
                else {
                    if (! assign(x, y))
                        continue;
                    if (search(depth + 1))
                        return true;
                    unassign(x);
                }
            }
            return false;
        }

        const StructureTable & _small;
        const StructureTable & _big;
        SearchSpec _spec;
        SearchBudget _budget;
        std::uint64_t _nodes = 0;
        Embedding _map;
        std::vector<bool> _used;
        std::vector<Element> _order;
        std::vector<std::vector<std::pair<Element, Element>>> _meet_pre, _join_pre;
        std::vector<int> _small_down, _small_up, _big_down, _big_up, _small_lower_covers, _big_lower_covers;
    };
}

auto embed_search(const StructureTable & small, const StructureTable & big, EmbedMode mode, SearchBudget budget)
    -> std::optional<Embedding>
{
    SearchSpec spec;
    spec.use_ortho = true;
    if (mode == EmbedMode::omp) {
        if (! is_omp(small) || ! is_omp(big))
            throw PreconditionError("omp embedding search requires both structures to be OMPs");
        spec.orthogonal_joins = true;
    }
    else {
        if (! small.has_ortho() || ! big.has_ortho() || ! is_lattice(small) || ! is_lattice(big))
            throw PreconditionError("ol embedding search requires ortholattices");
        spec.all_meets_joins = true;
    }
    return Searcher(small, big, spec, budget).run();
}

auto verify_embedding(const StructureTable & small, const StructureTable & big, EmbedMode mode, const Embedding & map)
    -> bool
{
    if (static_cast<int>(map.size()) != small.size())
        return false;
    std::vector<bool> hit(big.size(), false);
    for (auto y : map) {
        if (y < 0 || y >= big.size() || hit[y])
            return false;
        hit[y] = true;
    }
    for (int x = 0; x < small.size(); ++x)
        if (map[small.ortho(x)] != big.ortho(map[x]))
            return false;
    for (int u = 0; u < small.size(); ++u)
        for (int v = 0; v < small.size(); ++v) {
            if (mode == EmbedMode::ol) {
                auto m = small.meet(u, v);
                auto j = small.join(u, v);
                if (! m || ! j || big.meet(map[u], map[v]) != map[*m] || big.join(map[u], map[v]) != map[*j])
                    return false;
            }
            else if (small.orthogonal(u, v)) {
                auto j = small.join(u, v);
                if (! j || big.join(map[u], map[v]) != map[*j])
                    return false;
            }
        }
    return true;
}

auto find_isomorphism(const StructureTable & a, const StructureTable & b, SearchBudget budget)
    -> std::optional<Embedding>
{
    if (a.size() != b.size() || a.has_ortho() != b.has_ortho())
        return std::nullopt;
    SearchSpec spec;
    spec.use_ortho = a.has_ortho();
    spec.bijective = true;
    spec.reflect_order = true;
    return Searcher(a, b, spec, budget).run();
}

auto isomorphic(const StructureTable & a, const StructureTable & b) -> bool
{
    return find_isomorphism(a, b).has_value();
}

auto verify_isomorphism(const StructureTable & a, const StructureTable & b, const Embedding & map) -> bool
{
    if (a.size() != b.size() || static_cast<int>(map.size()) != a.size())
        return false;
    std::vector<bool> hit(b.size(), false);
    for (auto y : map) {
        if (y < 0 || y >= b.size() || hit[y])
            return false;
        hit[y] = true;
    }
    for (int u = 0; u < a.size(); ++u) {
        if (a.has_ortho() && map[a.ortho(u)] != b.ortho(map[u]))
            return false;
        for (int v = 0; v < a.size(); ++v)
            if (a.leq(u, v) != b.leq(map[u], map[v]))
                return false;
    }
    return true;
}

}
