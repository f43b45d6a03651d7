#pragma once

#include <qlwb/structure.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qlwb {

/// The law a witness violates, and how its element tuple reads.
enum class Law
{
    meet_exists,        // (a, b): a and b have no meet
    join_exists,        // (a, b): a and b have no join
    no_ortho,           // (): structure carries no orthocomplementation
    complement,         // (a, c): c is a nonzero lower bound of a and a'
    orthogonal_join,    // (a, b): a is orthogonal to b and a, b have no join
    orthomodular_poset, // (x, y): x <= y but y != x v (x v y')'
    orthomodular,       // (x, y): x <= y but y != x v (x' ^ y)
    modular,            // (x, y, z): x <= z but x v (y ^ z) != (x v y) ^ z
    distributive        // (x, y, z): x ^ (y v z) != (x ^ y) v (x ^ z)
};

auto law_name(Law law) -> std::string;

struct Witness
{
    Law law;
    std::vector<Element> elements;

    auto operator==(const Witness &) const -> bool = default;
};

/// Outcome for one axiom family: holds, or fails with an attached witness.
struct LawCheck
{
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
};

struct AxiomReport
{
    LawCheck lattice;
    LawCheck ol;
    LawCheck omp;
    LawCheck oml;
    LawCheck mol;
    LawCheck boolean;

    auto is_lattice() const -> bool { return lattice.holds; }
    auto is_ol() const -> bool { return ol.holds; }
    auto is_omp() const -> bool { return omp.holds; }
    auto is_oml() const -> bool { return oml.holds; }
    auto is_mol() const -> bool { return mol.holds; }
    auto is_boolean() const -> bool { return boolean.holds; }
};

/// Exhaustive axiom check. Each failing family carries the first violation
/// found in index order; families that depend on another (OML needs OL) inherit
/// that family's witness when the dependency fails.
auto check_axioms(const StructureTable & s) -> AxiomReport;

/// Re-evaluates a witness from scratch: true iff the violation is genuine.
auto replay(const StructureTable & s, const Witness & w) -> bool;

auto describe(const StructureTable & s, const Witness & w) -> std::string;

/// Cheaper single-question helpers used by other modules.
auto is_lattice(const StructureTable & s) -> bool;
auto is_omp(const StructureTable & s) -> bool;
auto is_oml(const StructureTable & s) -> bool;

}
