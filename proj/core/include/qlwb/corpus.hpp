#pragma once

#include <qlwb/diagrams.hpp>
#include <qlwb/structure.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlwb {

namespace detail {
    struct RawCorpusFile
    {
        const char * name;
        const char * content;
    };

    auto raw_corpus_files() -> const std::vector<RawCorpusFile> &;
}

enum class CorpusKind
{
    structure,      // .struct
    diagram,        // .gd
    terms,          // .terms: one equation per line
    system,         // .sys: linear system over GF(2)
    json,           // .json: operators or representation
    vectors,        // .vec: candidate vectors
};

auto corpus_kind_name(CorpusKind k) -> std::string;

struct CorpusEntry
{
    std::string name;
    std::string file_name;
    CorpusKind kind;
    /// The "# provenance:" header line of the file.
    std::string provenance;
    std::string text;
};

/// Bundled files, sorted by name.
auto corpus() -> const std::vector<CorpusEntry> &;
/// Entry by name (file stem) or file name; throws InputError.
auto corpus_entry(std::string_view name) -> const CorpusEntry &;

/// Structure for a .struct entry, or the pasted OMP of a .gd entry.
auto corpus_structure(std::string_view name) -> StructureTable;
auto corpus_diagram(std::string_view name) -> GreechieDiagram;

/// Every structure-valued entry (.struct and .gd), in corpus order.
auto corpus_structures() -> std::vector<std::pair<std::string, StructureTable>>;

/// "corpus:<name>" resolves to the bundled text; anything else is read as a file.
auto resolve_text(std::string_view location) -> std::string;
auto is_corpus_uri(std::string_view location) -> bool;

}
