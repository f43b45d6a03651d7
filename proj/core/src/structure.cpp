#include "qlwb/structure.hpp"
#include "qlwb/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qlwb {

ParseError::ParseError(const std::string & message, int line, int column) :
    InputError(line > 0 ? "line " + std::to_string(line) + (column > 0 ? ":" + std::to_string(column) : "") + ": " + message
                        : message),
    _line(line),
    _column(column)
{
}

namespace {
    constexpr int dense_table_limit = 256;
}

auto StructureTable::from_relation(std::vector<std::string> labels,
    const std::vector<std::pair<Element, Element>> & less_than,
    std::optional<std::vector<Element>> ortho) -> StructureTable
{
    const int n = static_cast<int>(labels.size());
    // up-closure stored as rows: reach[a] = { b : a <= b }
    std::vector<ElementSet> reach(n, ElementSet(n));
    for (int a = 0; a < n; ++a)
        reach[a].set(a);
    for (auto [a, b] : less_than) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InputError("order pair refers to an element index out of range");
        reach[a].set(b);
    }
    // Warshall on bit rows.
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (reach[a].test(k))
                reach[a] |= reach[k];

    std::vector<ElementSet> down(n, ElementSet(n));
    for (int a = 0; a < n; ++a)
        for (int b = reach[a].first(); b != -1; b = reach[a].next(b))
            down[b].set(a);
    return from_down_sets(std::move(labels), std::move(down), std::move(ortho));
}

auto StructureTable::from_down_sets(std::vector<std::string> labels, std::vector<ElementSet> down,
    std::optional<std::vector<Element>> ortho) -> StructureTable
{
    const int n = static_cast<int>(labels.size());
    if (n == 0)
        throw InputError("a structure needs at least one element");
    if (static_cast<int>(down.size()) != n)
        throw InputError("order table size does not match label count");
    {
        std::set<std::string> seen;
        for (auto & l : labels) {
            if (l.empty())
                throw InputError("empty element label");
            if (! seen.insert(l).second)
                throw InputError("duplicate element label '" + l + "'");
        }
    }
    for (int a = 0; a < n; ++a) {
        if (down[a].capacity() != n)
            throw InputError("order table row has wrong width");
        if (! down[a].test(a))
            throw InputError("order is not reflexive at '" + labels[a] + "'");
    }
    for (int a = 0; a < n; ++a)
        for (int b = down[a].first(); b != -1; b = down[a].next(b)) {
            if (b != a && down[b].test(a))
                throw InputError("order is not antisymmetric: '" + labels[a] + "' and '" + labels[b] + "'");
            if (! down[b].subset_of(down[a]))
                throw InputError("order is not transitive below '" + labels[a] + "'");
        }

    // Linear extension: down-set size strictly increases along <.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> dc(n);
    for (int a = 0; a < n; ++a)
        dc[a] = down[a].count();
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return dc[x] < dc[y]; });
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i)
        inverse[perm[i]] = i;

    StructureTable s;
    s._labels.resize(n);
    s._down.assign(n, ElementSet(n));
    for (int i = 0; i < n; ++i) {
        s._labels[i] = std::move(labels[perm[i]]);
        for (int b = down[perm[i]].first(); b != -1; b = down[perm[i]].next(b))
            s._down[i].set(inverse[b]);
    }
    if (s._down[n - 1].count() != n)
        throw InputError("structure has no top element");
    for (int a = 0; a < n; ++a)
        if (! s._down[a].test(0))
            throw InputError("structure has no bottom element");

    if (ortho) {
        if (static_cast<int>(ortho->size()) != n)
            throw InputError("orthocomplement table size does not match label count");
        std::vector<Element> o(n);
        for (int i = 0; i < n; ++i) {
            auto v = (*ortho)[perm[i]];
            if (v < 0 || v >= n)
                throw InputError("orthocomplement index out of range");
            o[i] = inverse[v];
        }
        for (int a = 0; a < n; ++a)
            if (o[o[a]] != a)
                throw InputError("orthocomplementation is not an involution at '" + s._labels[a] + "'");
        for (int b = 0; b < n; ++b)
            for (int a = s._down[b].first(); a != -1; a = s._down[b].next(a))
                if (! s._down[o[a]].test(o[b]))
                    throw InputError("orthocomplementation is not order-reversing on '" + s._labels[a] + "' <= '"
                        + s._labels[b] + "'");
        s._ortho = std::move(o);
    }
    s.build_derived();
    return s;
}

void StructureTable::build_derived()
{
    const int n = size();
    _up.assign(n, ElementSet(n));
    _down_count.resize(n);
    for (int b = 0; b < n; ++b) {
        _down_count[b] = _down[b].count();
        for (int a = _down[b].first(); a != -1; a = _down[b].next(a))
            _up[a].set(b);
    }
    _atoms.clear();
    for (int a = 1; a < n; ++a)
        if (_down_count[a] == 2)
            _atoms.push_back(a);
    _height.assign(n, 0);
    for (int b = 0; b < n; ++b)
        for (int a = _down[b].first(); a != -1; a = _down[b].next(a))
            if (a != b)
                _height[b] = std::max(_height[b], _height[a] + 1);

    _meet_table.clear();
    _join_table.clear();
    if (n <= dense_table_limit) {
        _meet_table.assign(static_cast<std::size_t>(n) * n, -1);
        _join_table.assign(static_cast<std::size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                auto m = greatest(_down[a] & _down[b]);
                auto j = least(_up[a] & _up[b]);
                _meet_table[a * n + b] = _meet_table[b * n + a] = m.value_or(-1);
                _join_table[a * n + b] = _join_table[b * n + a] = j.value_or(-1);
            }
    }
}

auto StructureTable::ortho(Element a) const -> Element
{
    if (! _ortho)
        throw PreconditionError("structure has no orthocomplementation");
    return (*_ortho)[a];
}

auto StructureTable::ortho_map() const -> const std::vector<Element> &
{
    if (! _ortho)
        throw PreconditionError("structure has no orthocomplementation");
    return *_ortho;
}

auto StructureTable::index_of(std::string_view name) const -> std::optional<Element>
{
    for (int i = 0; i < size(); ++i)
        if (_labels[i] == name)
            return i;
    return std::nullopt;
}

auto StructureTable::element(std::string_view name) const -> Element
{
    auto i = index_of(name);
    if (! i)
        throw InputError("unknown element '" + std::string(name) + "'");
    return *i;
}

auto StructureTable::greatest(const ElementSet & s) const -> std::optional<Element>
{
    // A greatest element, if one exists, has the largest down-set among members.
    int best = -1;
    for (int a = s.first(); a != -1; a = s.next(a))
        if (best == -1 || _down_count[a] > _down_count[best])
            best = a;
    if (best == -1 || ! s.subset_of(_down[best]))
        return std::nullopt;
    return best;
}

auto StructureTable::least(const ElementSet & s) const -> std::optional<Element>
{
    int best = -1;
    for (int a = s.first(); a != -1; a = s.next(a))
        if (best == -1 || _down_count[a] < _down_count[best])
            best = a;
    if (best == -1 || ! s.subset_of(_up[best]))
        return std::nullopt;
    return best;
}

auto StructureTable::meet(Element a, Element b) const -> std::optional<Element>
{
    if (a < 0 || a >= size() || b < 0 || b >= size())
        throw InputError("element index out of range");
    if (! _meet_table.empty()) {
        auto m = _meet_table[static_cast<std::size_t>(a) * size() + b];
        return m < 0 ? std::nullopt : std::optional<Element>(m);
    }
    return greatest(_down[a] & _down[b]);
}

auto StructureTable::join(Element a, Element b) const -> std::optional<Element>
{
    if (a < 0 || a >= size() || b < 0 || b >= size())
        throw InputError("element index out of range");
    if (! _join_table.empty()) {
        auto j = _join_table[static_cast<std::size_t>(a) * size() + b];
        return j < 0 ? std::nullopt : std::optional<Element>(j);
    }
    return least(_up[a] & _up[b]);
}

auto StructureTable::meet_of(const ElementSet & s) const -> std::optional<Element>
{
    auto lower = all_elements();
    for (int a = s.first(); a != -1; a = s.next(a))
        lower &= _down[a];
    return greatest(lower);
}

auto StructureTable::join_of(const ElementSet & s) const -> std::optional<Element>
{
    auto upper = all_elements();
    for (int a = s.first(); a != -1; a = s.next(a))
        upper &= _up[a];
    return least(upper);
}

auto StructureTable::upper_covers(Element a) const -> std::vector<Element>
{
    std::vector<Element> result;
    for (int b = _up[a].first(); b != -1; b = _up[a].next(b)) {
        if (b == a)
            continue;
        // b covers a iff the open interval (a, b) is empty.
        auto between = _up[a] & _down[b];
        if (between.count() == 2)
            result.push_back(b);
    }
    return result;
}

auto StructureTable::is_atom(Element a) const -> bool
{
    return a != 0 && _down_count[a] == 2;
}

auto StructureTable::operator==(const StructureTable & other) const -> bool
{
    return _labels == other._labels && _down == other._down && _ortho == other._ortho;
}

auto substructure(const StructureTable & s, const ElementSet & subset) -> Substructure
{
    auto members = subset.members();
    const int m = static_cast<int>(members.size());
    std::vector<int> local(s.size(), -1);
    for (int i = 0; i < m; ++i)
        local[members[i]] = i;

    std::vector<std::string> labels;
    std::vector<ElementSet> down(m, ElementSet(m));
    for (int i = 0; i < m; ++i) {
        labels.push_back(s.label(members[i]));
        for (int j = 0; j < m; ++j)
            if (s.leq(members[j], members[i]))
                down[i].set(j);
    }
    std::optional<std::vector<Element>> ortho;
    if (s.has_ortho()) {
        std::vector<Element> o(m);
        bool closed = true;
        for (int i = 0; i < m && closed; ++i) {
            o[i] = local[s.ortho(members[i])];
            closed = o[i] >= 0;
        }
        if (closed)
            ortho = std::move(o);
    }
    Substructure result{StructureTable::from_down_sets(std::move(labels), std::move(down), std::move(ortho)), {}};
    for (int i = 0; i < m; ++i)
        result.to_parent.push_back(s.element(result.table.label(i)));
    return result;
}

}
