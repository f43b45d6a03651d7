#pragma once

#include <qlwb/structure.hpp>

#include <span>

namespace qlwb {

/// The Boolean algebra 2^n. Atoms are a, b, c, ...; joins are written as the
/// concatenation of their atoms; bottom and top are 0 and 1.
auto boolean_algebra(int n) -> StructureTable;

/// The n-element chain 0 < c1 < ... < 1 as a plain bounded poset (no ortho).
auto chain_poset(int n) -> StructureTable;

/// MO_k: bottom, top and k incomparable orthocomplementary pairs (height 2).
auto mo(int k) -> StructureTable;

/// The benzene ring O6: 0 < a < b < 1, 0 < b' < a' < 1.
auto benzene() -> StructureTable;

/// Horizontal sum: disjoint union with bottoms and tops identified. Labels are
/// kept when they are globally unique, otherwise suffixed with the 1-based part index.
auto horizontal_sum(std::span<const StructureTable> parts) -> StructureTable;

/// Direct product with componentwise order and ortho; labels are "(x,y)".
/// Both factors must have at least two elements.
auto product(const StructureTable & a, const StructureTable & b) -> StructureTable;

/// Drops the orthocomplementation, keeping the bounded poset.
auto underlying_poset(const StructureTable & s) -> StructureTable;

}
