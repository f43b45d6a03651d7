#include "qlwb/corpus.hpp"
#include "qlwb/error.hpp"
#include "qlwb/structure_io.hpp"

#include <json.hpp>

#include <algorithm>

namespace qlwb {

auto corpus_kind_name(CorpusKind k) -> std::string
{
    switch (k) {
    case CorpusKind::structure:
        return "struct";
    case CorpusKind::diagram:
        return "gd";
    case CorpusKind::terms:
        return "term-suite";
    case CorpusKind::system:
        return "system";
    case CorpusKind::json:
        return "json";
    case CorpusKind::vectors:
        return "vectors";
    }
    return "unknown";
}

auto corpus() -> const std::vector<CorpusEntry> &
{
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        for (auto & raw : detail::raw_corpus_files()) {
            CorpusEntry e;
            e.file_name = raw.name;
            e.text = raw.content;
            auto dot = e.file_name.rfind('.');
            e.name = e.file_name.substr(0, dot);
            auto ext = e.file_name.substr(dot + 1);
            if (ext == "struct")
                e.kind = CorpusKind::structure;
            else if (ext == "gd")
                e.kind = CorpusKind::diagram;
            else if (ext == "terms")
                e.kind = CorpusKind::terms;
            else if (ext == "sys")
                e.kind = CorpusKind::system;
            else if (ext == "json")
                e.kind = CorpusKind::json;
            else
                e.kind = CorpusKind::vectors;
            const std::string tag = "provenance:";
            if (e.kind == CorpusKind::json)
                e.provenance = nlohmann::json::parse(e.text).value("provenance", "");
            else if (auto p = e.text.find(tag); p != std::string::npos) {
                auto end = e.text.find('\n', p);
                e.provenance = e.text.substr(p + tag.size(), end - p - tag.size());
                e.provenance.erase(0, e.provenance.find_first_not_of(' '));
            }
            out.push_back(std::move(e));
        }
        std::sort(out.begin(), out.end(), [](auto & a, auto & b) { return a.name < b.name; });
        return out;
    }();
    return entries;
}

auto corpus_entry(std::string_view name) -> const CorpusEntry &
{
    for (auto & e : corpus())
        if (e.name == name || e.file_name == name)
            return e;
    throw InputError("no corpus entry named '" + std::string(name) + "' (try `qlwb corpus list`)");
}

auto corpus_structure(std::string_view name) -> StructureTable
{
    const auto & e = corpus_entry(name);
    if (e.kind == CorpusKind::structure)
        return parse_struct(e.text);
    if (e.kind == CorpusKind::diagram)
        return paste_to_omp(parse_greechie(e.text));
    throw InputError("corpus entry '" + e.name + "' is not a structure");
}

auto corpus_diagram(std::string_view name) -> GreechieDiagram
{
    const auto & e = corpus_entry(name);
    if (e.kind != CorpusKind::diagram)
        throw InputError("corpus entry '" + e.name + "' is not a diagram");
    return parse_greechie(e.text);
}

auto corpus_structures() -> std::vector<std::pair<std::string, StructureTable>>
{
    std::vector<std::pair<std::string, StructureTable>> out;
    for (auto & e : corpus())
        if (e.kind == CorpusKind::structure || e.kind == CorpusKind::diagram)
            out.emplace_back(e.name, corpus_structure(e.name));
    return out;
}

auto is_corpus_uri(std::string_view location) -> bool
{
    return location.rfind("corpus:", 0) == 0;
}

auto resolve_text(std::string_view location) -> std::string
{
    if (is_corpus_uri(location))
        return corpus_entry(location.substr(7)).text;
    return read_text_file(std::string(location));
}

}
