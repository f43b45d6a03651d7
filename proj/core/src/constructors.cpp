#include "qlwb/constructors.hpp"
#include "qlwb/error.hpp"

#include <set>

namespace qlwb {

namespace {
    auto letter_name(int i) -> std::string
    {
        if (i < 26)
            return std::string(1, static_cast<char>('a' + i));
        return "p" + std::to_string(i);
    }
}

auto boolean_algebra(int n) -> StructureTable
{
    if (n < 0 || n > 12)
        throw InputError("boolean_algebra: n must lie in [0, 12]");
    const int size = 1 << n;
    std::vector<std::string> labels(size);
    std::vector<ElementSet> down(size, ElementSet(size));
    std::vector<Element> ortho(size);
    for (int m = 0; m < size; ++m) {
        if (m == 0)
            labels[m] = "0";
        else if (m == size - 1)
            labels[m] = "1";
        else {
            std::string l;
            bool letters = n <= 26;
            for (int i = 0; i < n; ++i)
                if (m & (1 << i))
                    l += letters ? letter_name(i) : "_" + std::to_string(i);
            labels[m] = l;
        }
        for (int k = 0; k < size; ++k)
            if ((k & m) == k)
                down[m].set(k);
        ortho[m] = (size - 1) ^ m;
    }
    return StructureTable::from_down_sets(std::move(labels), std::move(down), std::move(ortho));
}

auto chain_poset(int n) -> StructureTable
{
    if (n < 1)
        throw InputError("chain_poset: n must be positive");
    std::vector<std::string> labels;
    std::vector<std::pair<Element, Element>> lt;
    for (int i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "0" : i == n - 1 ? "1" : "c" + std::to_string(i));
        if (i > 0)
            lt.emplace_back(i - 1, i);
    }
    return StructureTable::from_relation(std::move(labels), lt);
}

auto mo(int k) -> StructureTable
{
    if (k < 0)
        throw InputError("mo: k must be nonnegative");
    std::vector<std::string> labels{"0"};
    std::vector<std::pair<Element, Element>> lt;
    std::vector<Element> ortho{2 * k + 1};
    for (int i = 0; i < k; ++i) {
        auto name = letter_name(i);
        labels.push_back(name);
        labels.push_back(name + "'");
        ortho.push_back(2 * i + 2);
        ortho.push_back(2 * i + 1);
    }
    labels.push_back("1");
    ortho.push_back(0);
    const int top = 2 * k + 1;
    for (int i = 1; i < top; ++i) {
        lt.emplace_back(0, i);
        lt.emplace_back(i, top);
    }
    if (k == 0)
        lt.emplace_back(0, 1);
    return StructureTable::from_relation(std::move(labels), lt, std::move(ortho));
}

auto benzene() -> StructureTable
{
    // 0 a b b' a' 1
    std::vector<std::string> labels{"0", "a", "b", "b'", "a'", "1"};
    std::vector<std::pair<Element, Element>> lt{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
    std::vector<Element> ortho{5, 4, 3, 2, 1, 0};
    return StructureTable::from_relation(std::move(labels), lt, std::move(ortho));
}

auto horizontal_sum(std::span<const StructureTable> parts) -> StructureTable
{
    bool all_ortho = true;
    for (auto & p : parts) {
        if (p.size() < 2)
            throw InputError("horizontal_sum: every part needs at least two elements");
        all_ortho = all_ortho && p.has_ortho();
    }
    // Label policy: keep middle labels if they are unique across parts and avoid "0"/"1".
    bool unique = true;
    {
        std::set<std::string> seen{"0", "1"};
        for (auto & p : parts)
            for (int a = 1; a < p.top(); ++a)
                unique = unique && seen.insert(p.label(a)).second;
    }
    std::vector<std::string> labels{"0"};
    std::vector<std::pair<Element, Element>> lt;
    std::vector<Element> ortho{-1};
    std::vector<std::vector<Element>> index_of_part;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        auto & p = parts[pi];
        std::vector<Element> local(p.size(), -1);
        local[p.bottom()] = 0;
        for (int a = 1; a < p.top(); ++a) {
            local[a] = static_cast<Element>(labels.size());
            labels.push_back(unique ? p.label(a) : p.label(a) + "_" + std::to_string(pi + 1));
            ortho.push_back(-1);
        }
        index_of_part.push_back(std::move(local));
    }
    const Element top = static_cast<Element>(labels.size());
    labels.push_back("1");
    ortho.push_back(0);
    ortho[0] = top;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        auto & p = parts[pi];
        auto local = index_of_part[pi];
        local[p.top()] = top;
        for (int a = 0; a < p.size(); ++a) {
            for (auto b : p.upper_covers(a))
                lt.emplace_back(local[a], local[b]);
            if (all_ortho)
                ortho[local[a]] = local[p.ortho(a)];
        }
    }
    return StructureTable::from_relation(std::move(labels), lt,
        all_ortho ? std::optional<std::vector<Element>>(std::move(ortho)) : std::nullopt);
}

auto product(const StructureTable & a, const StructureTable & b) -> StructureTable
{
    if (a.size() < 2 || b.size() < 2)
        throw InputError("product: factors must be bounded with 0 != 1");
    const int n = a.size() * b.size();
    auto id = [&](int i, int j) { return i * b.size() + j; };
    std::vector<std::string> labels(n);
    std::vector<ElementSet> down(n, ElementSet(n));
    std::vector<Element> ortho(n);
    bool with_ortho = a.has_ortho() && b.has_ortho();
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            labels[id(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
            for (int k = a.down(i).first(); k != -1; k = a.down(i).next(k))
                for (int l = b.down(j).first(); l != -1; l = b.down(j).next(l))
                    down[id(i, j)].set(id(k, l));
            if (with_ortho)
                ortho[id(i, j)] = id(a.ortho(i), b.ortho(j));
        }
    return StructureTable::from_down_sets(std::move(labels), std::move(down),
        with_ortho ? std::optional<std::vector<Element>>(std::move(ortho)) : std::nullopt);
}

auto underlying_poset(const StructureTable & s) -> StructureTable
{
    std::vector<ElementSet> down;
    for (int a = 0; a < s.size(); ++a)
        down.push_back(s.down(a));
    return StructureTable::from_down_sets(s.labels(), std::move(down));
}

}
