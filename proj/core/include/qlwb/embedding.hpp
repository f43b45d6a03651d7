#pragma once

#include <qlwb/structure.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace qlwb {

enum class EmbedMode
{
    /// One-one, preserves ortho and joins of orthogonal pairs (OMP embedding).
    omp,
    /// One-one, preserves ortho and all binary meets and joins (OL embedding).
    ol
};

struct SearchBudget
{
    /// Backtracking nodes before ResourceError is thrown.
    std::uint64_t max_nodes = 20'000'000;
};

/// map[x] is the image in the larger structure of element x of the smaller one.
using Embedding = std::vector<Element>;

/// Exhaustive backtracking search for an embedding of `small` into `big`.
/// Mode omp requires both structures to be OMPs, mode ol requires lattices with
/// orthocomplementation (PreconditionError otherwise). Returns the first
/// embedding in search order, or nothing when none exists.
auto embed_search(const StructureTable & small, const StructureTable & big, EmbedMode mode,
    SearchBudget budget = {}) -> std::optional<Embedding>;

/// Pointwise re-check of every property the mode promises.
auto verify_embedding(const StructureTable & small, const StructureTable & big, EmbedMode mode,
    const Embedding & map) -> bool;

/// Order isomorphism (also preserving ortho when both sides carry one).
auto find_isomorphism(const StructureTable & a, const StructureTable & b, SearchBudget budget = {})
    -> std::optional<Embedding>;

auto isomorphic(const StructureTable & a, const StructureTable & b) -> bool;

auto verify_isomorphism(const StructureTable & a, const StructureTable & b, const Embedding & map) -> bool;

}
