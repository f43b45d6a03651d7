#pragma once

#include <qlwb/model_search.hpp>
#include <qlwb/proof.hpp>
#include <qlwb/term.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qlwb {

enum class VerdictKind
{
    valid,
    invalid,
    unknown,
};

auto verdict_name(VerdictKind k) -> std::string;

struct Counterexample
{
    std::string model_name;
    StructureTable model;
    Assignment assignment;
};

struct Verdict
{
    VerdictKind kind = VerdictKind::unknown;
    /// Present for valid verdicts backed by a rewriting proof.
    std::optional<Proof> proof;
    /// Present for invalid verdicts.
    std::optional<Counterexample> counterexample;
    /// How the verdict was reached, or what was exhausted for unknown.
    std::string method;
};

/// Both sides evaluate, to different elements, under the counterexample.
auto replay(const Equation & eq, const Counterexample & c) -> bool;
/// Every premise holds and the conclusion fails under the counterexample.
auto replay(const QuasiEquation & q, const Counterexample & c) -> bool;

/// Truth tables over the two-element Boolean algebra; never unknown.
auto decide_ba(const Equation & eq) -> Verdict;

/// The 96-element algebra MO2 x 2^4.
auto free_oml2_model() -> const StructureTable &;

/// Sweep over all assignments into MO2 x 2^4. Witnesses are taken from MO2 when
/// possible, then from 2. Throws InputError for more than two variables.
auto decide_oml2(const Equation & eq) -> Verdict;

struct FepBudget
{
    int max_model_size = 8;
    long max_proof_steps = 20000;
    double timeout_seconds = 10.0;
};

/// Alternates slices of rewriting proof search with exhaustive model search by
/// increasing size; a proof found in the same slice as a model wins.
auto fep_decide(Theory theory, const Equation & eq, FepBudget budget = {}) -> Verdict;

/// First assignment, over the catalog in order, where every defined premise
/// holds and the conclusion evaluates to different elements.
auto quasi_counterexample(const QuasiEquation & q, const std::vector<std::pair<std::string, StructureTable>> & catalog)
    -> std::optional<Counterexample>;

/// Fixed-variable-order sweep of every assignment into `model`; first failure found.
auto find_counterexample(const Equation & eq, const StructureTable & model, const std::string & name)
    -> std::optional<Counterexample>;

/// Readable rendering of a verdict, certificate included.
auto format_verdict(const Equation & eq, const Verdict & v) -> std::string;

}
