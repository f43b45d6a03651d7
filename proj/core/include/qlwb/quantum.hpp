#pragma once

#include <qlwb/diagrams.hpp>
#include <qlwb/linalg.hpp>
#include <qlwb/term.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qlwb {

/// Subspace of Q^dim held as a reduced row echelon basis, so equal subspaces
/// have equal row lists.
class Subspace
{
public:
    Subspace() = default;
    static auto span(int dim, std::vector<Vector> vectors) -> Subspace;
    static auto zero(int dim) -> Subspace;
    static auto whole(int dim) -> Subspace;

    auto ambient() const -> int { return _dim; }
    auto dimension() const -> int { return static_cast<int>(_rows.size()); }
    auto basis() const -> const std::vector<Vector> & { return _rows; }
    auto contains(const Vector & v) const -> bool;

    auto operator==(const Subspace &) const -> bool = default;

private:
    int _dim = 0;
    std::vector<Vector> _rows;
};

/// Intersection (Zassenhaus), sum and orthogonal complement under the standard
/// inner product. Throw InputError on mismatched ambient dimensions.
auto sub_meet(const Subspace & a, const Subspace & b) -> Subspace;
auto sub_join(const Subspace & a, const Subspace & b) -> Subspace;
auto sub_ortho(const Subspace & a) -> Subspace;
auto sub_leq(const Subspace & a, const Subspace & b) -> bool;
auto format_subspace(const Subspace & s) -> std::string;

using SubspaceAssignment = std::map<std::string, Subspace>;

/// Evaluates t over the subspace lattice of Q^dim.
auto eval_subspace(const Term & t, int dim, const SubspaceAssignment & a) -> Subspace;

struct SubspaceCounterexample
{
    int sample = 0;
    SubspaceAssignment assignment;
    Subspace lhs;
    Subspace rhs;
};

/// Seeded random subspaces. Each variable gets a subspace whose requested
/// dimension is uniform in [0, dim], spanned by vectors with entries in [-3, 3].
class SubspaceSampler
{
public:
    SubspaceSampler(int dim, std::uint64_t seed);
    auto next() -> Subspace;

private:
    auto below(std::uint64_t n) -> std::uint64_t;
    int _dim;
    std::mt19937_64 _gen;
};

/// First violating sample, replay-checked. Finding none says nothing about validity.
auto sample_refute(const Equation & eq, int dim, int samples, std::uint64_t seed)
    -> std::optional<SubspaceCounterexample>;

/// x ∧ (y0 ∨ … ∨ yn) = ⋁_i (x ∧ ⋁_{j≠i} y_j).
auto n_distributive_term(int n) -> Equation;

/// rep[v] is the projection assigned to vertex v of the hypergraph.
using Representation = std::vector<ExactMatrix>;

struct HrepVerdict
{
    bool valid = false;
    std::string reason;
    std::optional<int> vertex;
    std::optional<int> edge;
};

auto verify_hrep(const Hypergraph & h, const Representation & rep) -> HrepVerdict;

/// Backtracking over projections onto spans of subsets of `candidates` (0 and
/// identity always included), pruning partial edges by rank and orthogonality.
auto search_hrep(const Hypergraph & h, int dim, const std::vector<Vector> & candidates, long max_nodes = 5000000)
    -> std::optional<Representation>;

/// Linear system over the two-element field; equations list variable indices.
struct Gf2System
{
    int variables = 0;
    std::vector<std::vector<int>> equations;
    std::vector<int> rhs;
};

/// Gaussian elimination over GF(2); a solution or nothing when unsatisfiable.
auto gf2_solve(const Gf2System & system) -> std::optional<std::vector<int>>;
auto gf2_check(const Gf2System & system, const std::vector<int> & x) -> bool;

struct QsolVerdict
{
    bool valid = false;
    std::string reason;
    std::optional<int> variable;
    std::optional<std::pair<int, int>> pair;
    std::optional<int> equation;
};

/// Each operator self-adjoint with square 1, operators sharing an equation
/// commute, and each equation's product (in listed order) is (-1)^b.
auto verify_qsolution(const Gf2System & system, const std::vector<ExactMatrix> & ops) -> QsolVerdict;

/// Dimension-1 operators (-1)^x_i.
auto lift_classical(const std::vector<int> & x) -> std::vector<ExactMatrix>;

}
