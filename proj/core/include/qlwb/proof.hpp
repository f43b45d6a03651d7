#pragma once

#include <qlwb/term.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlwb {

enum class Theory
{
    ol,
    oml,
};

auto theory_name(Theory t) -> std::string;

struct Axiom
{
    std::string name;
    Equation equation;
};

/// Bundled finite axiomatization: lattice identities, involution, De Morgan,
/// complement and bound laws; oml adds x | (x' & (x | y)) = x | y.
auto axioms(Theory t) -> const std::vector<Axiom> &;

/// One rewrite: the instance of one side of an axiom at `position` is replaced by
/// the instance of the other side. `substitution` covers every axiom variable.
struct ProofStep
{
    int axiom;
    bool left_to_right;
    std::vector<int> position;
    std::map<std::string, Term> substitution;
};

/// terms.front() = lhs, terms.back() = rhs, steps[i] rewrites terms[i] to terms[i+1].
struct Proof
{
    Theory theory;
    std::vector<Term> terms;
    std::vector<ProofStep> steps;
};

struct ProofBudget
{
    /// Terms expanded, over both search directions.
    long max_steps = 200000;
    /// Rewritten terms larger than this are discarded; 0 means lhs/rhs size + 6.
    int max_term_size = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Bidirectional breadth-first rewriting between the two sides. Resumable: each
/// call to advance expands at least one more layer on the smaller frontier.
class ProofSearch
{
public:
    ProofSearch(Theory theory, const Equation & goal, ProofBudget budget = {});
    ~ProofSearch();
    ProofSearch(ProofSearch &&) noexcept;
    auto operator=(ProofSearch &&) noexcept -> ProofSearch &;

    /// Expands up to `steps` more terms. Returns a proof once one is found.
    auto advance(long steps) -> std::optional<Proof>;
    auto expanded() const -> long;
    /// True once both frontiers are empty or the budget is spent.
    auto exhausted() const -> bool;

private:
    struct Impl;
    std::unique_ptr<Impl> _impl;
};

auto prove(Theory theory, const Equation & goal, ProofBudget budget = {}) -> std::optional<Proof>;

/// Independent replay of every step; does not share code with the search.
auto check_proof(const Proof & proof, const Equation & goal) -> bool;

/// Replayable text: one "= term  [axiom dir @position; x := ...]" line per step.
auto format_proof(const Proof & proof) -> std::string;

}
