#pragma once

#include <qlwb/structure.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlwb {

enum class TermKind
{
    variable,
    zero,
    one,
    complement,
    meet,
    join,
};

/// Immutable term tree; copies share nodes.
class Term
{
public:
    static auto variable(std::string name) -> Term;
    static auto zero() -> Term;
    static auto one() -> Term;
    static auto complement(Term child) -> Term;
    static auto meet(Term left, Term right) -> Term;
    static auto join(Term left, Term right) -> Term;

    auto kind() const -> TermKind { return _node->kind; }
    /// Variable name; empty for other kinds.
    auto name() const -> const std::string & { return _node->name; }
    /// Child of a complement, or left operand of a binary node.
    auto left() const -> const Term &;
    auto right() const -> const Term &;
    auto arity() const -> int;
    auto child(int i) const -> const Term & { return i == 0 ? left() : right(); }

    /// Number of nodes.
    auto size() const -> int { return _node->size; }
    auto depth() const -> int { return _node->depth; }
    /// Compact unambiguous prefix encoding; equal keys iff equal trees.
    auto key() const -> const std::string & { return _node->key; }

    auto operator==(const Term & other) const -> bool
    {
        return _node == other._node || _node->key == other._node->key;
    }
    auto operator<(const Term & other) const -> bool { return key() < other.key(); }

private:
    struct Node
    {
        TermKind kind;
        std::string name;
        std::vector<Term> children;
        int size = 1;
        int depth = 1;
        std::string key;
    };

    explicit Term(std::shared_ptr<const Node> node) : _node(std::move(node)) {}
    static auto make(TermKind kind, std::string name, std::vector<Term> children) -> Term;

    std::shared_ptr<const Node> _node;
};

struct Equation
{
    Term lhs;
    Term rhs;
};

struct QuasiEquation
{
    std::vector<Equation> premises;
    Equation conclusion;
};

/// Grammar: postfix ' binds tightest, then & (meet), then | (join); both binary
/// operators associate to the left. Constants 0 and 1; identifiers
/// [A-Za-z_][A-Za-z0-9_]*. Errors are ParseError with line 1 and a column.
auto parse_term(std::string_view text) -> Term;
/// "lhs = rhs".
auto parse_equation(std::string_view text) -> Equation;
/// "s1 = t1, s2 = t2 => s = t"; a bare equation has no premises.
auto parse_quasi_equation(std::string_view text) -> QuasiEquation;

/// Minimal parenthesization that parses back to the same tree.
auto to_string(const Term & t) -> std::string;
auto to_string(const Equation & e) -> std::string;
auto to_string(const QuasiEquation & q) -> std::string;

/// Distinct variable names in order of first occurrence (left to right).
auto variables(const Term & t) -> std::vector<std::string>;
auto variables(const Equation & e) -> std::vector<std::string>;
auto variables(const QuasiEquation & q) -> std::vector<std::string>;

using Assignment = std::map<std::string, Element>;

/// Evaluates t in s. Empty when a needed meet or join does not exist; throws
/// InputError for unassigned variables and PreconditionError for ' without ortho.
auto eval(const Term & t, const StructureTable & s, const Assignment & a) -> std::optional<Element>;

/// Term compiled against a fixed variable order for repeated evaluation.
class CompiledTerm
{
public:
    CompiledTerm(const Term & t, const std::vector<std::string> & vars);

    auto eval(const StructureTable & s, const std::vector<Element> & values) const -> std::optional<Element>;

private:
    struct Op
    {
        TermKind kind;
        int var;
    };
    std::vector<Op> _ops;
};

/// Subterm at a path of child indices.
auto subterm(const Term & t, const std::vector<int> & path) -> const Term &;
auto replace_at(const Term & t, const std::vector<int> & path, const Term & replacement) -> Term;
/// Replaces variables by terms; unmapped variables stay.
auto substitute(const Term & t, const std::map<std::string, Term> & sigma) -> Term;

}
