#include "qlwb/diagrams.hpp"
#include "qlwb/analysis.hpp"
#include "qlwb/axioms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qlwb {

PastingError::PastingError(const std::string & message, std::vector<int> blocks) :
    InputError(message),
    _blocks(std::move(blocks))
{
}

auto Hypergraph::vertex(std::string_view name) const -> int
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name)
            return static_cast<int>(i);
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

namespace {
    auto valid_name(const std::string & s) -> bool
    {
        if (s.empty())
            return false;
        for (char c : s)
            if (! (std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                return false;
        return true;
    }

    auto edge_names(const std::vector<std::string> & names, const std::vector<int> & edge) -> std::set<std::string>
    {
        std::set<std::string> out;
        for (auto v : edge)
            out.insert(names[v]);
        return out;
    }

    void check_edges(const std::vector<std::string> & names, const std::vector<std::vector<int>> & edges,
        const std::vector<int> & line_of_edge)
    {
        auto where = [&](std::size_t e) { return line_of_edge.empty() ? 0 : line_of_edge[e]; };
        if (names.empty() || edges.empty())
            throw ParseError("empty diagram", 0);
        std::vector<bool> covered(names.size(), false);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].empty())
                throw ParseError("empty edge", where(e));
            std::set<int> seen;
            for (auto v : edges[e]) {
                if (v < 0 || v >= static_cast<int>(names.size()))
                    throw ParseError("edge refers to an unknown vertex", where(e));
                if (! seen.insert(v).second)
                    throw ParseError("vertex '" + names[v] + "' repeated in one edge", where(e));
                covered[v] = true;
            }
        }
        for (std::size_t v = 0; v < names.size(); ++v)
            if (! covered[v])
                throw InputError("vertex '" + names[v] + "' lies in no edge");
        std::set<std::string> unique;
        for (auto & n : names)
            if (! unique.insert(n).second)
                throw InputError("duplicate vertex name '" + n + "'");
    }

    void check_greechie(const GreechieDiagram & d, const std::vector<int> & line_of_block)
    {
        check_edges(d.atoms, d.blocks, line_of_block);
        auto where = [&](std::size_t e) { return line_of_block.empty() ? 0 : line_of_block[e]; };
        for (std::size_t b = 0; b < d.blocks.size(); ++b)
            if (d.blocks[b].size() < 3)
                throw ParseError("block has fewer than three atoms", where(b));
        for (std::size_t b = 0; b < d.blocks.size(); ++b) {
            std::set<int> mine(d.blocks[b].begin(), d.blocks[b].end());
            for (std::size_t c = b + 1; c < d.blocks.size(); ++c) {
                int shared = 0;
                for (auto v : d.blocks[c])
                    shared += mine.count(v);
                if (shared >= 2)
                    throw ParseError("blocks share " + std::to_string(shared) + " atoms (at most one allowed), with block on line "
                            + std::to_string(where(b)),
                        where(c));
            }
        }
    }

    struct RawEdges
    {
        std::vector<std::string> names;
        std::vector<std::vector<int>> edges;
        std::vector<int> lines;
    };

    auto read_edges(std::string_view text) -> RawEdges
    {
        RawEdges r;
        std::map<std::string, int> index;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            ++line_no;
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            std::istringstream in{std::string(line)};
            std::string tok;
            std::vector<int> edge;
            std::set<int> seen;
            while (in >> tok) {
                if (! valid_name(tok))
                    throw ParseError("invalid vertex name '" + tok + "'", line_no);
                auto [it, fresh] = index.emplace(tok, static_cast<int>(r.names.size()));
                if (fresh)
                    r.names.push_back(tok);
                if (! seen.insert(it->second).second)
                    throw ParseError("vertex '" + tok + "' repeated in one edge", line_no);
                edge.push_back(it->second);
            }
            if (! edge.empty()) {
                r.edges.push_back(std::move(edge));
                r.lines.push_back(line_no);
            }
        }
        if (r.edges.empty())
            throw ParseError("empty diagram", 1);
        return r;
    }

    auto atom_name(int i) -> std::string
    {
        if (i < 26)
            return std::string(1, static_cast<char>('a' + i));
        return "a" + std::to_string(i);
    }

    auto write_edges(const std::vector<std::string> & names, const std::vector<std::vector<int>> & edges) -> std::string
    {
        std::ostringstream out;
        for (auto & e : edges) {
            for (std::size_t i = 0; i < e.size(); ++i)
                out << (i ? " " : "") << names[e[i]];
            out << '\n';
        }
        return out.str();
    }

    auto dot_escape(const std::string & s) -> std::string
    {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out;
    }
}

void validate(const Hypergraph & h)
{
    check_edges(h.vertices, h.edges, {});
}

void validate(const GreechieDiagram & d)
{
    check_greechie(d, {});
}

auto parse_hypergraph(std::string_view text) -> Hypergraph
{
    auto raw = read_edges(text);
    Hypergraph h{std::move(raw.names), std::move(raw.edges)};
    check_edges(h.vertices, h.edges, raw.lines);
    return h;
}

auto parse_greechie(std::string_view text) -> GreechieDiagram
{
    auto raw = read_edges(text);
    GreechieDiagram d{std::move(raw.names), std::move(raw.edges)};
    check_greechie(d, raw.lines);
    return d;
}

auto write_gd(const Hypergraph & h) -> std::string
{
    return write_edges(h.vertices, h.edges);
}

auto write_gd(const GreechieDiagram & d) -> std::string
{
    return write_edges(d.atoms, d.blocks);
}

auto chain_diagram(int n) -> GreechieDiagram
{
    if (n < 1)
        throw InputError("chain: n must be at least 1");
    GreechieDiagram d;
    for (int i = 0; i < 2 * n + 1; ++i)
        d.atoms.push_back(atom_name(i));
    for (int b = 0; b < n; ++b)
        d.blocks.push_back({2 * b, 2 * b + 1, 2 * b + 2});
    return d;
}

auto loop_diagram(int n) -> GreechieDiagram
{
    if (n < 3)
        throw InputError("loop: n must be at least 3");
    GreechieDiagram d;
    for (int i = 0; i < 2 * n; ++i)
        d.atoms.push_back(atom_name(i));
    for (int b = 0; b < n; ++b)
        d.blocks.push_back({2 * b, 2 * b + 1, (2 * b + 2) % (2 * n)});
    return d;
}

auto to_hypergraph(const GreechieDiagram & d) -> Hypergraph
{
    validate(d);
    return Hypergraph{d.atoms, d.blocks};
}

auto paste_to_omp(const GreechieDiagram & d) -> StructureTable
{
    validate(d);
    // Enumerate (block, subset) pairs; subsets are bitmasks over the block's atom list.
    struct Piece
    {
        int block;
        std::uint32_t mask;
    };
    std::vector<Piece> pieces;
    std::vector<std::vector<int>> piece_id(d.blocks.size());
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        auto k = d.blocks[b].size();
        if (k > 20)
            throw ResourceError("block too large to paste");
        piece_id[b].resize(std::size_t{1} << k);
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
            piece_id[b][m] = static_cast<int>(pieces.size());
            pieces.push_back({static_cast<int>(b), m});
        }
    }
    auto atoms_of = [&](int b, std::uint32_t m) {
        std::vector<int> out;
        for (std::size_t i = 0; i < d.blocks[b].size(); ++i)
            if (m & (1u << i))
                out.push_back(d.blocks[b][i]);
        std::sort(out.begin(), out.end());
        return out;
    };

    std::vector<int> parent(pieces.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    std::map<std::vector<int>, int> by_atoms, by_complement;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        auto [b, m] = pieces[p];
        auto full = (1u << d.blocks[b].size()) - 1;
        auto s = atoms_of(b, m);
        auto c = atoms_of(b, full & ~m);
        if (auto [it, fresh] = by_atoms.emplace(s, static_cast<int>(p)); ! fresh)
            unite(static_cast<int>(p), it->second);
        if (auto [it, fresh] = by_complement.emplace(c, static_cast<int>(p)); ! fresh)
            unite(static_cast<int>(p), it->second);
    }

    // Number classes; order of first appearance keeps output deterministic.
    std::map<int, int> class_of_root;
    std::vector<int> class_of(pieces.size());
    std::vector<std::string> labels;
    std::vector<std::set<int>> class_blocks;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        auto root = find(static_cast<int>(p));
        auto [it, fresh] = class_of_root.emplace(root, static_cast<int>(labels.size()));
        if (fresh) {
            auto [b, m] = pieces[p];
            auto k = d.blocks[b].size();
            auto s = atoms_of(b, m);
            std::string label;
            if (s.empty())
                label = "0";
            else if (s.size() == k)
                label = "1";
            else if (s.size() == 1)
                label = d.atoms[s[0]];
            else if (s.size() + 1 == k) {
                auto c = atoms_of(b, ((1u << k) - 1) & ~m);
                label = d.atoms[c[0]] + "'";
            }
            else {
                for (std::size_t i = 0; i < s.size(); ++i)
                    label += (i ? "+" : "") + d.atoms[s[i]];
            }
            labels.push_back(label);
            class_blocks.emplace_back();
        }
        class_of[p] = it->second;
        class_blocks[it->second].insert(pieces[p].block);
    }

    const int n = static_cast<int>(labels.size());
    std::vector<std::pair<Element, Element>> lt;
    std::vector<Element> ortho(n, -1);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        auto full = (1u << d.blocks[b].size()) - 1;
        for (std::uint32_t m = 0; m <= full; ++m) {
            auto cm = class_of[piece_id[b][m]];
            auto co = class_of[piece_id[b][full & ~m]];
            if (ortho[cm] != -1 && ortho[cm] != co)
                throw PastingError("orthocomplement is not well defined after gluing", {static_cast<int>(b)});
            ortho[cm] = co;
            // covering steps within a block generate its order
            for (std::size_t i = 0; i < d.blocks[b].size(); ++i)
                if (! (m & (1u << i)))
                    lt.emplace_back(cm, class_of[piece_id[b][m | (1u << i)]]);
        }
    }

    auto blocks_of = [&](std::initializer_list<int> elems) {
        std::set<int> out;
        for (auto e : elems)
            if (e != 0 && e != n - 1 && labels[e] != "0" && labels[e] != "1")
                out.insert(class_blocks[e].begin(), class_blocks[e].end());
        return std::vector<int>(out.begin(), out.end());
    };

    StructureTable s;
    try {
        s = StructureTable::from_relation(labels, lt, ortho);
    }
    catch (const InputError & e) {
        // Locate a pair of classes the closure makes equal.
        std::vector<ElementSet> reach(n, ElementSet(n));
        for (int a = 0; a < n; ++a)
            reach[a].set(a);
        for (auto [a, b] : lt)
            reach[a].set(b);
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                if (reach[a].test(k))
                    reach[a] |= reach[k];
        for (int a = 0; a < n; ++a)
            for (int b = reach[a].first(); b != -1; b = reach[a].next(b))
                if (b != a && reach[b].test(a))
                    throw PastingError("pasting collapses '" + labels[a] + "' and '" + labels[b] + "' (order inconsistency)",
                        blocks_of({a, b}));
        throw PastingError(std::string("pasting failed: ") + e.what(), {});
    }

    auto report = check_axioms(s);
    if (! report.is_omp()) {
        const auto & w = *report.omp.witness;
        std::vector<int> names;
        std::set<int> bl;
        for (auto e : w.elements) {
            auto original = static_cast<int>(std::find(labels.begin(), labels.end(), s.label(e)) - labels.begin());
            for (auto b : blocks_of({original}))
                bl.insert(b);
        }
        std::ostringstream msg;
        msg << "pasting is not an orthomodular poset: " << describe(s, w) << " (blocks";
        for (auto b : bl)
            msg << ' ' << b + 1;
        msg << ')';
        throw PastingError(msg.str(), std::vector<int>(bl.begin(), bl.end()));
    }
    if (! same_diagram(extract_greechie(s), d))
        throw PastingError("pasting produced extra orthogonality; its blocks differ from the diagram", {});
    return s;
}

auto extract_greechie(const StructureTable & s) -> GreechieDiagram
{
    GreechieDiagram d;
    std::map<int, int> atom_index;
    for (auto a : s.atoms()) {
        atom_index[a] = static_cast<int>(d.atoms.size());
        d.atoms.push_back(s.label(a));
    }
    for (auto & set : maximal_orthogonal_atom_sets(s)) {
        std::vector<int> block;
        for (auto a : set)
            block.push_back(atom_index.at(a));
        d.blocks.push_back(std::move(block));
    }
    return d;
}

auto same_edges(const Hypergraph & a, const Hypergraph & b) -> bool
{
    if (std::set<std::string>(a.vertices.begin(), a.vertices.end())
        != std::set<std::string>(b.vertices.begin(), b.vertices.end()))
        return false;
    std::set<std::set<std::string>> ea, eb;
    for (auto & e : a.edges)
        ea.insert(edge_names(a.vertices, e));
    for (auto & e : b.edges)
        eb.insert(edge_names(b.vertices, e));
    return ea == eb && a.edges.size() == b.edges.size();
}

auto same_diagram(const GreechieDiagram & a, const GreechieDiagram & b) -> bool
{
    return same_edges(Hypergraph{a.atoms, a.blocks}, Hypergraph{b.atoms, b.blocks});
}

auto export_dot(const StructureTable & s) -> std::string
{
    std::ostringstream out;
    out << "graph hasse {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
    for (int a = 0; a < s.size(); ++a)
        out << "  n" << a << " [label=\"" << dot_escape(s.label(a)) << "\"];\n";
    for (int a = 0; a < s.size(); ++a)
        for (auto b : s.upper_covers(a))
            out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

auto export_dot(const Hypergraph & h) -> std::string
{
    validate(h);
    std::ostringstream out;
    out << "graph greechie {\n  node [shape=circle, fontsize=10];\n";
    for (std::size_t v = 0; v < h.vertices.size(); ++v)
        out << "  v" << v << " [label=\"" << dot_escape(h.vertices[v]) << "\"];\n";
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        out << "  e" << e << " [shape=point, label=\"\"];\n";
        for (auto v : h.edges[e])
            out << "  e" << e << " -- v" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

auto export_dot(const GreechieDiagram & d) -> std::string
{
    validate(d);
    return export_dot(Hypergraph{d.atoms, d.blocks});
}

}
