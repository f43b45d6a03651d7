#include "qlwb/completion.hpp"
#include "qlwb/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qlwb {

auto lower_bounds(const StructureTable & p, const ElementSet & s) -> ElementSet
{
    auto out = p.all_elements();
    for (int x = s.first(); x != -1; x = s.next(x))
        out &= p.down(x);
    return out;
}

auto upper_bounds(const StructureTable & p, const ElementSet & s) -> ElementSet
{
    auto out = p.all_elements();
    for (int x = s.first(); x != -1; x = s.next(x))
        out &= p.up(x);
    return out;
}

auto is_cut(const StructureTable & p, const ElementSet & lower) -> bool
{
    return lower_bounds(p, upper_bounds(p, lower)) == lower;
}

namespace {
    auto cut_label(const StructureTable & p, const ElementSet & lower) -> std::string
    {
        std::string out = "{";
        bool first = true;
        for (int x = lower.first(); x != -1; x = lower.next(x)) {
            bool maximal = true;
            for (int y = lower.first(); y != -1 && maximal; y = lower.next(y))
                maximal = ! p.less(x, y);
            if (maximal) {
                out += (first ? "" : ",") + p.label(x);
                first = false;
            }
        }
        return out + "}";
    }

    auto complete(const StructureTable & p, bool with_ortho) -> Completion
    {
        const int n = p.size();
        std::set<ElementSet> found;
        std::deque<ElementSet> work;
        for (int x = 0; x < n; ++x)
            if (found.insert(p.down(x)).second)
                work.push_back(p.down(x));
        while (! work.empty()) {
            auto c = std::move(work.front());
            work.pop_front();
            for (int x = 0; x < n; ++x) {
                auto d = c & p.down(x);
                if (found.insert(d).second)
                    work.push_back(std::move(d));
            }
        }
        std::vector<ElementSet> cuts(found.begin(), found.end());
        const int m = static_cast<int>(cuts.size());
        std::map<ElementSet, int> index;
        for (int i = 0; i < m; ++i)
            index.emplace(cuts[i], i);

        std::vector<std::string> labels(m);
        std::vector<int> principal_of(m, -1);
        std::set<std::string> taken(p.labels().begin(), p.labels().end());
        for (int x = 0; x < n; ++x)
            principal_of[index.at(p.down(x))] = x;
        for (int i = 0; i < m; ++i) {
            if (principal_of[i] >= 0) {
                labels[i] = p.label(principal_of[i]);
                continue;
            }
            auto base = cut_label(p, cuts[i]);
            auto label = base;
            for (int k = 2; taken.count(label); ++k)
                label = base + "_" + std::to_string(k);
            taken.insert(label);
            labels[i] = label;
        }

        std::vector<ElementSet> down(m, ElementSet(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (cuts[a].subset_of(cuts[b]))
                    down[b].set(a);

        std::optional<std::vector<Element>> ortho;
        if (with_ortho) {
            ortho.emplace(m);
            for (int i = 0; i < m; ++i) {
                auto image = p.element_set();
                for (int u = cuts[i].first(); u != -1; u = cuts[i].next(u))
                    image.set(p.ortho(u));
                (*ortho)[i] = index.at(lower_bounds(p, image));
            }
        }

        auto lattice = StructureTable::from_down_sets(labels, down, ortho);
        Completion out;
        out.lower.assign(m, ElementSet(n));
        for (int i = 0; i < m; ++i)
            out.lower[lattice.element(labels[i])] = cuts[i];
        out.embedding.resize(n);
        for (int x = 0; x < n; ++x)
            out.embedding[x] = lattice.element(labels[index.at(p.down(x))]);
        out.lattice = std::move(lattice);
        return out;
    }
}

auto macneille(const StructureTable & p) -> Completion
{
    return complete(p, false);
}

auto macneille_ortho(const StructureTable & p) -> Completion
{
    if (! p.has_ortho())
        throw PreconditionError("macneille_ortho: structure has no orthocomplement");
    return complete(p, true);
}

auto cut_ortho_via_upper(const StructureTable & p, const Completion & c) -> std::vector<Element>
{
    const int m = c.lattice.size();
    std::map<ElementSet, int> index;
    for (int i = 0; i < m; ++i)
        index.emplace(c.lower[i], i);
    std::vector<Element> out(m);
    for (int i = 0; i < m; ++i) {
        auto ub = upper_bounds(p, c.lower[i]);
        auto image = p.element_set();
        for (int u = ub.first(); u != -1; u = ub.next(u))
            image.set(p.ortho(u));
        auto it = index.find(image);
        if (it == index.end())
            throw Error("cut_ortho_via_upper: complement image is not a cut");
        out[i] = it->second;
    }
    return out;
}

auto kalmbach(const StructureTable & p, int max_chains) -> StructureTable
{
    const int n = p.size();
    if (n < 2)
        throw InputError("kalmbach: poset must have 0 != 1");
    std::vector<std::vector<Element>> chains;
    std::vector<Element> current;
    // Elements are indexed along a linear extension, so strict chains are increasing.
    auto extend = [&](auto && self) -> void {
        if (current.size() % 2 == 0) {
            if (static_cast<int>(chains.size()) >= max_chains)
                throw ResourceError("kalmbach: more than " + std::to_string(max_chains) + " chains");
            chains.push_back(current);
        }
        int start = current.empty() ? 0 : current.back() + 1;
        for (int x = start; x < n; ++x) {
            if (! current.empty() && ! p.less(current.back(), x))
                continue;
            current.push_back(x);
            self(self);
            current.pop_back();
        }
    };
    extend(extend);

    const int m = static_cast<int>(chains.size());
    std::map<std::vector<Element>, int> index;
    for (int i = 0; i < m; ++i)
        index.emplace(chains[i], i);

    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        const auto & c = chains[i];
        if (c.empty())
            labels[i] = "0";
        else if (c.size() == 2 && c[0] == p.bottom() && c[1] == p.top())
            labels[i] = "1";
        else {
            std::string s = "(";
            for (std::size_t k = 0; k < c.size(); ++k)
                s += (k ? "," : "") + p.label(c[k]);
            labels[i] = s + ")";
        }
    }

    auto inside = [&](const std::vector<Element> & c, const std::vector<Element> & d) {
        for (std::size_t i = 0; i < c.size(); i += 2) {
            bool covered = false;
            for (std::size_t j = 0; j < d.size() && ! covered; j += 2)
                covered = p.leq(d[j], c[i]) && p.leq(c[i + 1], d[j + 1]);
            if (! covered)
                return false;
        }
        return true;
    };

    std::vector<ElementSet> down(m, ElementSet(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (inside(chains[a], chains[b]))
                down[b].set(a);

    std::vector<Element> ortho(m);
    for (int i = 0; i < m; ++i) {
        auto c = chains[i];
        if (! c.empty() && c.front() == p.bottom())
            c.erase(c.begin());
        else
            c.insert(c.begin(), p.bottom());
        if (! c.empty() && c.back() == p.top())
            c.pop_back();
        else
            c.push_back(p.top());
        ortho[i] = index.at(c);
    }
    return StructureTable::from_down_sets(labels, down, ortho);
}

}
