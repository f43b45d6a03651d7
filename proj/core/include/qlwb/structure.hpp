#pragma once

#include <qlwb/element_set.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlwb {

using Element = int;

/// A finite bounded poset, optionally carrying an orthocomplementation.
///
/// This is the carrier for every OL/OMP/OML/MOL check in the library. Values are
/// immutable after construction. Construction normalises the element order to a
/// linear extension of the partial order (sorted by down-set size, ties kept in
/// input order), so the bottom is always index 0 and the top is the last index.
///
/// Meets and joins are partial: `meet` and `join` return an empty optional when
/// the greatest lower (least upper) bound does not exist.
class StructureTable
{
public:
    /// Builds a structure from a relation that is closed reflexively and
    /// transitively here. `ortho`, when present, must be an order-reversing
    /// involution. Throws InputError on any violated invariant.
    static auto from_relation(std::vector<std::string> labels,
        const std::vector<std::pair<Element, Element>> & less_than,
        std::optional<std::vector<Element>> ortho = std::nullopt) -> StructureTable;

    /// As from_relation, from a full order matrix given as down-sets: `down[b]`
    /// holds every a with a <= b. The relation must already be a partial order.
    static auto from_down_sets(std::vector<std::string> labels, std::vector<ElementSet> down,
        std::optional<std::vector<Element>> ortho = std::nullopt) -> StructureTable;

    StructureTable() = default;

    auto size() const -> int { return static_cast<int>(_labels.size()); }
    auto bottom() const -> Element { return 0; }
    auto top() const -> Element { return size() - 1; }

    auto leq(Element a, Element b) const -> bool { return _down[b].test(a); }
    auto less(Element a, Element b) const -> bool { return a != b && leq(a, b); }
    auto comparable(Element a, Element b) const -> bool { return leq(a, b) || leq(b, a); }
    auto down(Element a) const -> const ElementSet & { return _down[a]; }
    auto up(Element a) const -> const ElementSet & { return _up[a]; }

    auto has_ortho() const -> bool { return _ortho.has_value(); }
    /// Orthocomplement; throws PreconditionError if the structure has none.
    auto ortho(Element a) const -> Element;
    auto ortho_map() const -> const std::vector<Element> &;
    /// a is orthogonal to b iff a <= b'.
    auto orthogonal(Element a, Element b) const -> bool { return leq(a, ortho(b)); }

    auto label(Element a) const -> const std::string & { return _labels[a]; }
    auto labels() const -> const std::vector<std::string> & { return _labels; }
    auto index_of(std::string_view name) const -> std::optional<Element>;
    /// index_of that throws InputError naming the structure context.
    auto element(std::string_view name) const -> Element;

    auto meet(Element a, Element b) const -> std::optional<Element>;
    auto join(Element a, Element b) const -> std::optional<Element>;
    /// Greatest element of the set, if any.
    auto greatest(const ElementSet & s) const -> std::optional<Element>;
    auto least(const ElementSet & s) const -> std::optional<Element>;
    /// Greatest lower bound of an arbitrary subset (the empty set has meet top).
    auto meet_of(const ElementSet & s) const -> std::optional<Element>;
    auto join_of(const ElementSet & s) const -> std::optional<Element>;

    /// Minimal non-bottom elements.
    auto atoms() const -> const std::vector<Element> & { return _atoms; }
    auto upper_covers(Element a) const -> std::vector<Element>;
    /// Length of the longest chain from bottom to a.
    auto height(Element a) const -> int { return _height[a]; }

    auto is_atom(Element a) const -> bool;

    auto element_set() const -> ElementSet { return ElementSet(size()); }
    auto all_elements() const -> ElementSet { return ElementSet::full(size()); }

    auto operator==(const StructureTable & other) const -> bool;

private:
    void build_derived();

    std::vector<std::string> _labels;
    std::vector<ElementSet> _down;
    std::vector<ElementSet> _up;
    std::optional<std::vector<Element>> _ortho;
    std::vector<Element> _atoms;
    std::vector<int> _height;
    std::vector<int> _down_count;
    // Dense meet/join tables for small structures; -1 marks an absent bound.
    std::vector<Element> _meet_table;
    std::vector<Element> _join_table;
};

struct Substructure
{
    StructureTable table;
    /// to_parent[i] is the parent index of element i of `table`.
    std::vector<Element> to_parent;
};

/// Induced sub-structure on `subset`; ortho is restricted when the subset is
/// closed under it and dropped otherwise. The subset must contain a least and a
/// greatest element.
auto substructure(const StructureTable & s, const ElementSet & subset) -> Substructure;

}
