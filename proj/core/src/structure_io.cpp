#include "qlwb/structure_io.hpp"
#include "qlwb/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace qlwb {

namespace {
    auto split_ws(std::string_view line) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in{std::string(line)};
        std::string tok;
        while (in >> tok)
            out.push_back(tok);
        return out;
    }

    auto strip_comment(std::string_view line) -> std::string_view
    {
        auto p = line.find('#');
        return p == std::string_view::npos ? line : line.substr(0, p);
    }

    auto valid_label(const std::string & s) -> bool
    {
        return ! s.empty() && s.find('<') == std::string::npos && s.find(':') == std::string::npos;
    }
}

auto parse_struct(std::string_view text) -> StructureTable
{
    struct Line
    {
        int number;
        std::string keyword;
        std::vector<std::string> tokens;
    };
    std::vector<Line> lines;
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            ++number;
            auto raw = strip_comment(text.substr(pos, end - pos));
            pos = end + 1;
            auto tokens = split_ws(raw);
            if (tokens.empty())
                continue;
            auto & head = tokens.front();
            auto colon = head.find(':');
            if (colon == std::string::npos || colon + 1 != head.size()) {
                // allow "keyword:token" with no space after the colon
                if (colon == std::string::npos)
                    throw ParseError("expected 'elements:', 'order:' or 'ortho:'", number, 1);
                auto kw = head.substr(0, colon + 1);
                auto rest = head.substr(colon + 1);
                tokens.front() = rest;
                lines.push_back({number, kw, tokens});
            }
            else {
                auto kw = head;
                tokens.erase(tokens.begin());
                lines.push_back({number, kw, tokens});
            }
        }
    }
    if (lines.empty())
        throw ParseError("empty structure file", 1);
    if (lines.front().keyword != "elements:")
        throw ParseError("first line must be 'elements:'", lines.front().number, 1);

    std::vector<std::string> labels = lines.front().tokens;
    std::map<std::string, int> index;
    for (auto & l : labels) {
        if (! valid_label(l))
            throw ParseError("invalid element name '" + l + "'", lines.front().number);
        if (! index.emplace(l, static_cast<int>(index.size())).second)
            throw ParseError("duplicate element name '" + l + "'", lines.front().number);
    }
    if (labels.empty())
        throw ParseError("no elements declared", lines.front().number);

    auto lookup = [&](const std::string & name, int line) {
        auto it = index.find(name);
        if (it == index.end())
            throw ParseError("unknown element '" + name + "'", line);
        return it->second;
    };

    std::vector<std::pair<Element, Element>> less_than;
    std::map<std::pair<int, int>, int> seen_order;
    std::optional<int> ortho_line;
    std::vector<std::pair<int, int>> ortho_pairs;
    int first_order_line = lines.front().number;
    bool order_seen = false;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto & line = lines[li];
        if (line.keyword == "order:") {
            if (ortho_line)
                throw ParseError("'order:' after 'ortho:'; ortho must be last", line.number);
            if (! order_seen)
                first_order_line = line.number;
            order_seen = true;
            for (auto & tok : line.tokens) {
                auto lt = tok.find('<');
                if (lt == std::string::npos || tok.find('<', lt + 1) != std::string::npos)
                    throw ParseError("malformed order pair '" + tok + "', expected a<b", line.number);
                auto a = lookup(tok.substr(0, lt), line.number);
                auto b = lookup(tok.substr(lt + 1), line.number);
                if (a == b)
                    throw ParseError("reflexive pair '" + tok + "' is not a strict order pair", line.number);
                if (! seen_order.emplace(std::pair{a, b}, line.number).second)
                    throw ParseError("duplicate order pair '" + tok + "'", line.number);
                less_than.emplace_back(a, b);
            }
        }
        else if (line.keyword == "ortho:") {
            if (ortho_line)
                throw ParseError("second 'ortho:' line", line.number);
            ortho_line = line.number;
            for (auto & tok : line.tokens) {
                auto c = tok.find(':');
                if (c == std::string::npos || tok.find(':', c + 1) != std::string::npos)
                    throw ParseError("malformed ortho pair '" + tok + "', expected a:b", line.number);
                auto a = lookup(tok.substr(0, c), line.number);
                auto b = lookup(tok.substr(c + 1), line.number);
                if (a == b)
                    throw ParseError("element '" + labels[a] + "' paired with itself", line.number);
                ortho_pairs.emplace_back(a, b);
            }
        }
        else if (line.keyword == "elements:")
            throw ParseError("second 'elements:' line", line.number);
        else
            throw ParseError("unknown keyword '" + line.keyword + "'", line.number);
    }

    std::optional<std::vector<Element>> ortho;
    if (ortho_line) {
        std::vector<Element> o(labels.size(), -1);
        for (auto [a, b] : ortho_pairs) {
            if (o[a] != -1 || o[b] != -1) {
                auto dup = o[a] != -1 ? a : b;
                throw ParseError("element '" + labels[dup] + "' paired twice (ortho must be an involution)", *ortho_line);
            }
            o[a] = b;
            o[b] = a;
        }
        ortho = std::move(o);
    }

    // Close the order first so that the implied 0:1 pair can be found.
    StructureTable poset;
    try {
        poset = StructureTable::from_relation(labels, less_than);
    }
    catch (const InputError & e) {
        throw ParseError(e.what(), first_order_line);
    }
    if (ortho) {
        auto bottom = index.at(poset.label(poset.bottom()));
        auto top = index.at(poset.label(poset.top()));
        auto & o = *ortho;
        if (o[bottom] == -1 && o[top] == -1) {
            o[bottom] = top;
            o[top] = bottom;
        }
        for (std::size_t a = 0; a < o.size(); ++a)
            if (o[a] == -1)
                throw ParseError("element '" + labels[a] + "' has no orthocomplement", *ortho_line);
        try {
            return StructureTable::from_relation(std::move(labels), less_than, std::move(ortho));
        }
        catch (const InputError & e) {
            throw ParseError(e.what(), *ortho_line);
        }
    }
    return poset;
}

auto write_struct(const StructureTable & s) -> std::string
{
    std::ostringstream out;
    out << "elements:";
    for (int a = 0; a < s.size(); ++a)
        out << ' ' << s.label(a);
    out << '\n';

    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < s.size(); ++a)
        for (auto b : s.upper_covers(a))
            covers.emplace_back(a, b);
    constexpr std::size_t per_line = 12;
    if (covers.empty())
        out << "order:\n";
    for (std::size_t i = 0; i < covers.size(); i += per_line) {
        out << "order:";
        for (std::size_t j = i; j < std::min(covers.size(), i + per_line); ++j)
            out << ' ' << s.label(covers[j].first) << '<' << s.label(covers[j].second);
        out << '\n';
    }
    if (s.has_ortho()) {
        out << "ortho:";
        for (int a = 0; a < s.size(); ++a)
            if (a < s.ortho(a))
                out << ' ' << s.label(a) << ':' << s.label(s.ortho(a));
        out << '\n';
    }
    return out.str();
}

auto read_text_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string & path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InputError("cannot write '" + path + "'");
    out << content;
}

auto load_struct_file(const std::string & path) -> StructureTable
{
    return parse_struct(read_text_file(path));
}

}
