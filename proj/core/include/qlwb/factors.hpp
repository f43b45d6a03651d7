#pragma once

#include <qlwb/structure.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qlwb {

/// Partition of {0,...,n-1} as a restricted growth string: block_of[0] = 0 and
/// blocks are numbered by least element.
struct Partition
{
    std::vector<int> block_of;

    auto size() const -> int { return static_cast<int>(block_of.size()); }
    auto block_count() const -> int;
    auto blocks() const -> std::vector<std::vector<int>>;
    auto operator==(const Partition &) const -> bool = default;
    auto operator<(const Partition & o) const -> bool { return block_of < o.block_of; }
};

auto discrete_partition(int n) -> Partition;
auto indiscrete_partition(int n) -> Partition;
/// Canonicalises any block labelling.
auto make_partition(std::vector<int> labels) -> Partition;
/// All partitions of an n-set in restricted-growth order.
auto all_partitions(int n) -> std::vector<Partition>;

/// "12|34": points written 1-9 then a-z, blocks separated by '|'.
auto format_partition(const Partition & p) -> std::string;
auto parse_partition(std::string_view text) -> Partition;

/// The relation as row bitmasks: bit y of rows[x] iff x ~ y.
auto relation(const Partition & p) -> std::vector<std::uint64_t>;
/// Relational product p o q: x (p o q) z iff x p y and y q z for some y.
auto compose(const Partition & p, const Partition & q) -> std::vector<std::uint64_t>;
/// p o q = q o p. Throws InputError on different ground sets.
auto permutes(const Partition & p, const Partition & q) -> bool;
/// Relation inclusion p ⊆ q.
auto refines(const Partition & p, const Partition & q) -> bool;

struct FactorPair
{
    Partition alpha;
    Partition alpha_prime;

    auto operator==(const FactorPair &) const -> bool = default;
};

/// alpha ∩ alpha' = Δ and alpha ∘ alpha' = ∇.
auto is_factor_pair(const Partition & a, const Partition & b) -> bool;
auto factor_pairs(int n) -> std::vector<FactorPair>;
/// alpha ⊆ beta, beta' ⊆ alpha', and alpha, alpha', beta, beta' pairwise permute.
auto fact_leq(const FactorPair & x, const FactorPair & y) -> bool;
auto format_factor_pair(const FactorPair & p) -> std::string;

/// Fact(X) for |X| = n, ortho swapping the pair. Throws ResourceError above cap.
auto enumerate_fact(int n, int cap = 8) -> StructureTable;

}
