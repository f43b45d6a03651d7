#pragma once

#include <qlwb/error.hpp>
#include <qlwb/structure.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qlwb {

/// Vertices and edges (vertex index lists). Every vertex lies in some edge;
/// edges are nonempty and free of repeated vertices.
struct Hypergraph
{
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> edges;

    auto vertex(std::string_view name) const -> int;
    auto operator==(const Hypergraph &) const -> bool = default;
};

/// Atoms and blocks of a Greechie diagram. Blocks have at least three atoms and
/// two blocks share at most one atom.
struct GreechieDiagram
{
    std::vector<std::string> atoms;
    std::vector<std::vector<int>> blocks;

    auto operator==(const GreechieDiagram &) const -> bool = default;
};

/// Thrown when pasting does not produce an OMP; names the blocks involved.
class PastingError : public InputError
{
public:
    PastingError(const std::string & message, std::vector<int> blocks);

    auto blocks() const -> const std::vector<int> & { return _blocks; }

private:
    std::vector<int> _blocks;
};

/// Validates hypergraph invariants; throws InputError.
void validate(const Hypergraph & h);
/// Validates Greechie invariants; throws InputError.
void validate(const GreechieDiagram & d);

/// .gd text: one edge per line, names [A-Za-z0-9_]+ separated by whitespace,
/// `#` comments. Vertices are numbered in order of first appearance.
auto parse_hypergraph(std::string_view text) -> Hypergraph;
/// As parse_hypergraph, plus the Greechie invariants (errors carry line numbers).
auto parse_greechie(std::string_view text) -> GreechieDiagram;

auto write_gd(const Hypergraph & h) -> std::string;
auto write_gd(const GreechieDiagram & d) -> std::string;

/// n three-atom blocks, consecutive blocks sharing one atom (n >= 1).
auto chain_diagram(int n) -> GreechieDiagram;
/// As chain_diagram, with the last block also sharing an atom with the first (n >= 3).
auto loop_diagram(int n) -> GreechieDiagram;

auto to_hypergraph(const GreechieDiagram & d) -> Hypergraph;

/// Pastes the diagram's Boolean blocks into one structure. Elements are classes
/// of (block, atom subset) pairs under shared atoms, block complements and the
/// common bounds. Throws PastingError unless the result is an OMP whose atoms
/// and blocks reproduce the diagram.
auto paste_to_omp(const GreechieDiagram & d) -> StructureTable;

/// Atoms of a finite OMP with its maximal orthogonal atom sets as blocks.
auto extract_greechie(const StructureTable & s) -> GreechieDiagram;

/// Same atom names and the same set of blocks, ignoring order.
auto same_diagram(const GreechieDiagram & a, const GreechieDiagram & b) -> bool;
auto same_edges(const Hypergraph & a, const Hypergraph & b) -> bool;

/// Hasse diagram in DOT, bottom to top.
auto export_dot(const StructureTable & s) -> std::string;
/// Greechie diagram in DOT: atom nodes joined through one point node per block.
auto export_dot(const GreechieDiagram & d) -> std::string;
auto export_dot(const Hypergraph & h) -> std::string;

}
