#pragma once

#include <qlwb/structure.hpp>

#include <vector>

namespace qlwb {

/// A cut lattice together with the principal-cut embedding of the source poset.
struct Completion
{
    StructureTable lattice;
    /// embedding[x] is the principal cut of source element x.
    std::vector<Element> embedding;
    /// lower[c] is the lower set of cut c, over source elements.
    std::vector<ElementSet> lower;
};

auto lower_bounds(const StructureTable & p, const ElementSet & s) -> ElementSet;
auto upper_bounds(const StructureTable & p, const ElementSet & s) -> ElementSet;
auto is_cut(const StructureTable & p, const ElementSet & lower) -> bool;

/// Normal ideals ordered by inclusion; any ortho on `p` is ignored. Cuts that are
/// not principal get labels listing the maximal elements of their lower set.
auto macneille(const StructureTable & p) -> Completion;

/// As macneille, extending the orthocomplement by L ↦ LB({u' : u ∈ L}).
/// Throws PreconditionError if `p` has no ortho.
auto macneille_ortho(const StructureTable & p) -> Completion;

/// The orthocomplement of the cut lattice computed through upper sets: the
/// lower set of L' is {u' : u ∈ UB(L)}. Agrees with macneille_ortho.
auto cut_ortho_via_upper(const StructureTable & p, const Completion & c) -> std::vector<Element>;

/// Kalmbach's OMP on the even-length strict chains of `p`. A chain
/// a1<a2<...<a2n stands for the union of the intervals [a1,a2),...,[a(2n-1),a2n);
/// c <= d iff every interval of c lies inside one interval of d, and ortho is the
/// symmetric difference with {0,1}. Throws InputError for a one-element poset and
/// ResourceError past `max_chains` chains.
auto kalmbach(const StructureTable & p, int max_chains = 20000) -> StructureTable;

}
