#pragma once

#include <qlwb/linalg.hpp>
#include <qlwb/structure.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlwb {

/// values[e] is the probability assigned to element e.
struct State
{
    std::vector<Rational> values;

    auto operator==(const State &) const -> bool = default;
    auto operator<(const State & other) const -> bool { return values < other.values; }
};

/// Orthogonal pairs {a, b} (a <= b') whose join exists; additivity is imposed on these.
auto additive_pairs(const StructureTable & s) -> std::vector<std::pair<Element, Element>>;

/// Bounds, range [0,1] and additivity over every pair of additive_pairs.
auto is_state(const StructureTable & s, const State & state) -> bool;

/// Every {0,1}-valued state, sorted. Requires an OMP.
auto two_valued_states(const StructureTable & s) -> std::vector<State>;

enum class Relation
{
    eq,
    le,
    ge,
};

struct StateConstraint
{
    Element element;
    Relation relation;
    Rational value;
};

/// One constraint per line: "<element> (=|<=|>=) <rational>", `#` comments.
auto parse_state_constraints(std::string_view text, const StructureTable & s) -> std::vector<StateConstraint>;

/// A state satisfying the constraints (a vertex of the feasible region), or
/// nothing when none exists. Requires an OMP.
auto state_lp(const StructureTable & s, const std::vector<StateConstraint> & constraints) -> std::optional<State>;

struct ConcreteResult
{
    bool concrete = false;
    /// For each separable pair, the first separating 2-valued state; deduplicated.
    std::vector<State> family;
    /// A pair a not<= b with no 2-valued state s(a)=1, s(b)=0.
    std::optional<std::pair<Element, Element>> failing_pair;
};

/// For every a not<= b some 2-valued state has s(a)=1 and s(b)=0.
auto is_concrete(const StructureTable & s) -> ConcreteResult;

struct SodResult
{
    bool holds = false;
    std::optional<std::pair<Element, Element>> failing_pair;
    /// For the failing pair: no state has s(a) = 1 at all.
    bool failing_pair_infeasible = false;
};

/// For every a not<= b, max(1 - s(b)) over states with s(a) = 1 is positive.
auto strongly_order_determining(const StructureTable & s) -> SodResult;

/// Vertices of the state polytope, sorted. Throws ResourceError above `cap` elements.
auto pure_states(const StructureTable & s, int cap = 24) -> std::vector<State>;

struct GuzResult
{
    bool condition1 = false;
    bool condition2 = false;
    bool condition3 = false;
    /// Nonzero x certain in no pure state.
    std::optional<Element> condition1_failure;
    /// x not<= y with s(y) = 1 whenever s(x) = 1.
    std::optional<std::pair<Element, Element>> condition2_failure;
    /// Index into `pure` of a state with no private certain event.
    std::optional<int> condition3_failure;
    /// For each pure state, an element certain only in it (-1 if none).
    std::vector<Element> tests;
    std::vector<State> pure;
};

/// The three conditions with the pure states as the state set.
auto guz_conditions(const StructureTable & s, int cap = 24) -> GuzResult;

auto format_state(const StructureTable & s, const State & state) -> std::string;

}
