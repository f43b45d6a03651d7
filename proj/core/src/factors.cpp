#include "qlwb/factors.hpp"
#include "qlwb/error.hpp"

#include <array>
#include <map>

namespace qlwb {

namespace {
    auto point_char(int i) -> char
    {
        return i < 9 ? static_cast<char>('1' + i) : static_cast<char>('a' + (i - 9));
    }

    auto point_index(char c) -> int
    {
        if (c >= '1' && c <= '9')
            return c - '1';
        if (c >= 'a' && c <= 'z')
            return 9 + (c - 'a');
        return -1;
    }

    auto same_ground(const Partition & p, const Partition & q)
    {
        if (p.size() != q.size())
            throw InputError("partitions are over different ground sets");
    }
}

auto Partition::block_count() const -> int
{
    int m = 0;
    for (auto b : block_of)
        m = std::max(m, b + 1);
    return m;
}

auto Partition::blocks() const -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out(block_count());
    for (int i = 0; i < size(); ++i)
        out[block_of[i]].push_back(i);
    return out;
}

auto discrete_partition(int n) -> Partition
{
    Partition p;
    for (int i = 0; i < n; ++i)
        p.block_of.push_back(i);
    return p;
}

auto indiscrete_partition(int n) -> Partition
{
    return Partition{std::vector<int>(n, 0)};
}

auto make_partition(std::vector<int> labels) -> Partition
{
    std::map<int, int> renumber;
    Partition p;
    for (auto l : labels) {
        auto [it, fresh] = renumber.emplace(l, static_cast<int>(renumber.size()));
        p.block_of.push_back(it->second);
    }
    return p;
}

auto all_partitions(int n) -> std::vector<Partition>
{
    std::vector<Partition> out;
    if (n <= 0)
        return out;
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto && self, int i, int max_block) -> void {
        if (i == n) {
            out.push_back(Partition{rgs});
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(max_block, b));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
}

auto format_partition(const Partition & p) -> std::string
{
    std::string out;
    auto bl = p.blocks();
    for (std::size_t b = 0; b < bl.size(); ++b) {
        if (b)
            out += '|';
        for (auto x : bl[b])
            out += point_char(x);
    }
    return out;
}

auto parse_partition(std::string_view text) -> Partition
{
    std::map<int, int> block;
    int current = 0;
    int max_point = -1;
    for (char c : text) {
        if (c == '|') {
            ++current;
            continue;
        }
        int x = point_index(c);
        if (x < 0)
            throw InputError("invalid partition point '" + std::string(1, c) + "'");
        if (! block.emplace(x, current).second)
            throw InputError("point listed twice in partition '" + std::string(text) + "'");
        max_point = std::max(max_point, x);
    }
    if (max_point + 1 != static_cast<int>(block.size()))
        throw InputError("partition '" + std::string(text) + "' does not cover 1..n");
    std::vector<int> labels;
    for (auto & [x, b] : block)
        labels.push_back(b);
    return make_partition(labels);
}

auto relation(const Partition & p) -> std::vector<std::uint64_t>
{
    if (p.size() > 64)
        throw ResourceError("partition ground set above 64 points");
    std::vector<std::uint64_t> rows(p.size(), 0);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.block_of[x] == p.block_of[y])
                rows[x] |= std::uint64_t{1} << y;
    return rows;
}

auto compose(const Partition & p, const Partition & q) -> std::vector<std::uint64_t>
{
    same_ground(p, q);
    auto rp = relation(p), rq = relation(q);
    std::vector<std::uint64_t> out(p.size(), 0);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if ((rp[x] >> y) & 1)
                out[x] |= rq[y];
    return out;
}

auto permutes(const Partition & p, const Partition & q) -> bool
{
    return compose(p, q) == compose(q, p);
}

auto refines(const Partition & p, const Partition & q) -> bool
{
    same_ground(p, q);
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y)
            if (p.block_of[x] == p.block_of[y] && q.block_of[x] != q.block_of[y])
                return false;
    return true;
}

auto is_factor_pair(const Partition & a, const Partition & b) -> bool
{
    same_ground(a, b);
    auto ra = relation(a), rb = relation(b);
    for (int x = 0; x < a.size(); ++x)
        if ((ra[x] & rb[x]) != (std::uint64_t{1} << x))
            return false;
    std::uint64_t all = a.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.size()) - 1;
    for (auto row : compose(a, b))
        if (row != all)
            return false;
    return true;
}

auto factor_pairs(int n) -> std::vector<FactorPair>
{
    // Only partitions into equal-size blocks can occur in a factor pair.
    std::vector<Partition> uniform;
    for (auto & p : all_partitions(n)) {
        auto bl = p.blocks();
        bool equal = true;
        for (auto & b : bl)
            equal = equal && b.size() == bl[0].size();
        if (equal)
            uniform.push_back(p);
    }
    std::vector<FactorPair> out;
    for (auto & a : uniform)
        for (auto & b : uniform)
            if (a.block_count() * b.block_count() == n && is_factor_pair(a, b))
                out.push_back({a, b});
    return out;
}

auto fact_leq(const FactorPair & x, const FactorPair & y) -> bool
{
    if (! refines(x.alpha, y.alpha) || ! refines(y.alpha_prime, x.alpha_prime))
        return false;
    const Partition * rel[4] = {&x.alpha, &x.alpha_prime, &y.alpha, &y.alpha_prime};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (! permutes(*rel[i], *rel[j]))
                return false;
    return true;
}

auto format_factor_pair(const FactorPair & p) -> std::string
{
    return format_partition(p.alpha) + "/" + format_partition(p.alpha_prime);
}

auto enumerate_fact(int n, int cap) -> StructureTable
{
    if (n < 1)
        throw InputError("fact: n must be at least 1");
    if (n > cap)
        throw ResourceError("fact: n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    auto pairs = factor_pairs(n);
    const int m = static_cast<int>(pairs.size());
    std::vector<std::string> labels;
    for (auto & p : pairs)
        labels.push_back(format_factor_pair(p));
    // fact_leq over lookup tables on the distinct partitions involved.
    std::map<Partition, int> part_index;
    std::vector<const Partition *> parts;
    for (auto & p : pairs)
        for (auto * q : {&p.alpha, &p.alpha_prime})
            if (part_index.emplace(*q, static_cast<int>(parts.size())).second)
                parts.push_back(q);
    const int k = static_cast<int>(parts.size());
    std::vector<std::vector<bool>> perm(k, std::vector<bool>(k)), ref(k, std::vector<bool>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            perm[i][j] = i == j || permutes(*parts[i], *parts[j]);
            ref[i][j] = refines(*parts[i], *parts[j]);
        }
    std::vector<std::array<int, 2>> ids;
    for (auto & p : pairs)
        ids.push_back({part_index.at(p.alpha), part_index.at(p.alpha_prime)});
    std::vector<ElementSet> down(m, ElementSet(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto [x, xp] = ids[a];
            auto [y, yp] = ids[b];
            if (ref[x][y] && ref[yp][xp] && perm[x][xp] && perm[x][y] && perm[x][yp] && perm[xp][y] && perm[xp][yp]
                && perm[y][yp])
                down[b].set(a);
        }
    std::map<std::string, int> index;
    for (int i = 0; i < m; ++i)
        index.emplace(labels[i], i);
    std::vector<Element> ortho(m);
    for (int i = 0; i < m; ++i)
        ortho[i] = index.at(format_factor_pair({pairs[i].alpha_prime, pairs[i].alpha}));
    return StructureTable::from_down_sets(labels, down, ortho);
}

}
