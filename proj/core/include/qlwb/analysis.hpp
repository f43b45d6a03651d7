#pragma once

#include <qlwb/structure.hpp>

#include <optional>
#include <vector>

namespace qlwb {

/// a commutes with b iff a = (a ^ b) v (a ^ b'). Empty when one of those bounds
/// does not exist in s (inapplicable, distinct from false).
auto commutes(const StructureTable & s, Element a, Element b) -> std::optional<bool>;

/// Maximal pairwise-orthogonal sets of atoms (each has join 1 in an OMP), sorted.
/// Requires an OMP; throws PreconditionError otherwise.
auto maximal_orthogonal_atom_sets(const StructureTable & s) -> std::vector<std::vector<Element>>;

/// Blocks (maximal Boolean subalgebras) of a finite OMP. Each block is the set of
/// joins of subsets of one maximal orthogonal set of atoms. Requires an OMP.
auto blocks(const StructureTable & s) -> std::vector<ElementSet>;

/// Closes `generators` under binary meet and join (not ortho).
/// Requires a lattice.
auto generated_sublattice(const StructureTable & s, const ElementSet & generators) -> ElementSet;

/// Distributivity of the lattice formed by `subset` with meets and joins taken in s.
/// Returns a violating (x, y, z) or nothing.
auto distributivity_violation(const StructureTable & s, const ElementSet & subset)
    -> std::optional<std::vector<Element>>;

enum class FoulisHollandOutcome
{
    distributive,
    non_distributive,
    hypothesis_not_met
};

struct FoulisHollandResult
{
    FoulisHollandOutcome outcome;
    /// Sublattice generated by the input (empty when the hypothesis fails).
    ElementSet generated;
    /// Hypothesis failure: the triple none of whose members commutes with the other two.
    /// Non-distributive: (x, y, z) with x ^ (y v z) != (x ^ y) v (x ^ z).
    std::vector<Element> witness;
};

/// Checks the generalized Foulis-Holland hypothesis on `subset` (every 3-element
/// subset has a member commuting with the other two) and, when it holds, whether
/// the generated sublattice is distributive. Requires an OML.
auto foulis_holland_check(const StructureTable & s, const ElementSet & subset) -> FoulisHollandResult;

/// True iff every 3-element subset of `subset` has a member commuting with the other two.
/// Fills `failing` with a violating triple when false.
auto foulis_holland_hypothesis(const StructureTable & s, const ElementSet & subset,
    std::vector<Element> * failing = nullptr) -> bool;

}
