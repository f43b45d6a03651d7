#pragma once

#include <qlwb/proof.hpp>
#include <qlwb/structure.hpp>

#include <chrono>
#include <optional>
#include <vector>

namespace qlwb {

struct ModelBudget
{
    long max_nodes = 200000000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Every ortholattice (theory ol) or orthomodular lattice (theory oml) with
/// exactly n elements, one per isomorphism class. Odd n gives none. Elements are
/// labelled 0, a, a', b, b', ..., 1. Throws ResourceError past the budget.
auto enumerate_models(Theory theory, int n, ModelBudget budget = {}) -> std::vector<StructureTable>;

/// Cached enumerate_models with the default budget; safe to call concurrently.
auto models_of_size(Theory theory, int n) -> const std::vector<StructureTable> &;

}
