#include "qlwb/model_search.hpp"
#include "qlwb/axioms.hpp"
#include "qlwb/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace qlwb {

namespace {
    enum : signed char
    {
        undecided = -1,
        no = 0,
        yes = 1,
    };

    class Enumerator
    {
    public:
        Enumerator(Theory theory, int n, ModelBudget budget) :
            _theory(theory),
            _budget(budget),
            _k((n - 2) / 2),
            _m(2 * _k),
            _rel(_m * _m, undecided)
        {
            for (int x = 0; x < _m; ++x) {
                set(x, x, no);
                set(x, x ^ 1, no);
            }
            for (int x = 0; x < _m; ++x)
                for (int y = 0; y < _m; ++y)
                    if (x != y && y != (x ^ 1) && std::make_pair(x, y) <= std::make_pair(y ^ 1, x ^ 1))
                        _orbits.emplace_back(x, y);
            build_relabelings();
        }

        auto run() -> std::vector<StructureTable>
        {
            search(0);
            return std::move(_found);
        }

    private:
        auto get(int a, int b) const -> signed char { return _rel[a * _m + b]; }
        void set(int a, int b, signed char v) { _rel[a * _m + b] = v; }

        auto consistent(int a, int b) const -> bool
        {
            auto ab = get(a, b);
            if (ab == yes && get(b, a) == yes)
                return false;
            for (int z = 0; z < _m; ++z) {
                if (z == a || z == b)
                    continue;
                auto bz = get(b, z), az = get(a, z), za = get(z, a), zb = get(z, b);
                if (ab == yes && bz == yes && az == no)
                    return false;
                if (za == yes && ab == yes && zb == no)
                    return false;
                if (ab == no && az == yes && zb == yes)
                    return false;
            }
            return true;
        }

        void search(std::size_t i)
        {
            if (++_nodes > _budget.max_nodes)
                throw ResourceError("model search: node budget exhausted");
            if ((_nodes & 0xfff) == 0 && _budget.deadline && std::chrono::steady_clock::now() >= *_budget.deadline)
                throw ResourceError("model search: time budget exhausted");
            if (i == _orbits.size()) {
                leaf();
                return;
            }
            auto [x, y] = _orbits[i];
            for (signed char v : {no, yes}) {
                set(x, y, v);
                set(y ^ 1, x ^ 1, v);
                if (consistent(x, y) && consistent(y ^ 1, x ^ 1))
                    search(i + 1);
            }
            set(x, y, undecided);
            set(y ^ 1, x ^ 1, undecided);
        }

        void build_relabelings()
        {
            std::vector<int> perm(_k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                for (int flips = 0; flips < (1 << _k); ++flips) {
                    std::vector<int> map(_m);
                    for (int i = 0; i < _k; ++i)
                        for (int b = 0; b < 2; ++b)
                            map[2 * i + b] = 2 * perm[i] + (b ^ ((flips >> i) & 1));
                    _relabelings.push_back(std::move(map));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        auto canonical() const -> std::vector<bool>
        {
            std::vector<bool> best;
            std::vector<bool> code(_m * _m);
            for (auto & map : _relabelings) {
                for (int a = 0; a < _m; ++a)
                    for (int b = 0; b < _m; ++b)
                        code[map[a] * _m + map[b]] = get(a, b) == yes;
                if (best.empty() || code < best)
                    best = code;
            }
            return best;
        }

        void leaf()
        {
            if (! _seen.insert(canonical()).second)
                return;
            const int n = _m + 2;
            std::vector<std::string> labels{"0"};
            for (int i = 0; i < _k; ++i) {
                std::string base(1, static_cast<char>('a' + i));
                labels.push_back(base);
                labels.push_back(base + "'");
            }
            labels.push_back("1");
            std::vector<ElementSet> down(n, ElementSet(n));
            for (int b = 0; b < n; ++b) {
                down[b].set(0);
                down[b].set(b);
            }
            for (int a = 0; a < n; ++a)
                down[n - 1].set(a);
            for (int a = 0; a < _m; ++a)
                for (int b = 0; b < _m; ++b)
                    if (get(a, b) == yes)
                        down[b + 1].set(a + 1);
            std::vector<Element> ortho(n);
            ortho[0] = n - 1;
            ortho[n - 1] = 0;
            for (int x = 0; x < _m; ++x)
                ortho[x + 1] = (x ^ 1) + 1;
            auto s = StructureTable::from_down_sets(labels, down, ortho);
            auto report = check_axioms(s);
            if (_theory == Theory::ol ? report.is_ol() : report.is_oml())
                _found.push_back(std::move(s));
        }

        Theory _theory;
        ModelBudget _budget;
        int _k;
        int _m;
        std::vector<signed char> _rel;
        std::vector<std::pair<int, int>> _orbits;
        std::vector<std::vector<int>> _relabelings;
        std::set<std::vector<bool>> _seen;
        std::vector<StructureTable> _found;
        long _nodes = 0;
    };
}

auto enumerate_models(Theory theory, int n, ModelBudget budget) -> std::vector<StructureTable>
{
    if (n < 2 || n % 2 != 0)
        return {};
    if (n == 2)
        return {StructureTable::from_relation({"0", "1"}, {{0, 1}}, std::vector<Element>{1, 0})};
    return Enumerator(theory, n, budget).run();
}

auto models_of_size(Theory theory, int n) -> const std::vector<StructureTable> &
{
    static std::mutex mutex;
    static std::map<std::pair<Theory, int>, std::vector<StructureTable>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(theory, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, enumerate_models(theory, n)).first;
    return it->second;
}

}
