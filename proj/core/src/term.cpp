#include "qlwb/term.hpp"
#include "qlwb/error.hpp"

#include <cctype>
#include <set>

namespace qlwb {

auto Term::make(TermKind kind, std::string name, std::vector<Term> children) -> Term
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->children = std::move(children);
    switch (kind) {
    case TermKind::variable:
        node->key = "v" + node->name + ";";
        break;
    case TermKind::zero:
        node->key = "0";
        break;
    case TermKind::one:
        node->key = "1";
        break;
    case TermKind::complement:
        node->key = "'" + node->children[0].key();
        break;
    case TermKind::meet:
        node->key = "&" + node->children[0].key() + node->children[1].key();
        break;
    case TermKind::join:
        node->key = "|" + node->children[0].key() + node->children[1].key();
        break;
    }
    for (auto & c : node->children) {
        node->size += c.size();
        node->depth = std::max(node->depth, c.depth() + 1);
    }
    return Term(std::move(node));
}

auto Term::variable(std::string name) -> Term
{
    return make(TermKind::variable, std::move(name), {});
}

auto Term::zero() -> Term
{
    static const Term t = make(TermKind::zero, "", {});
    return t;
}

auto Term::one() -> Term
{
    static const Term t = make(TermKind::one, "", {});
    return t;
}

auto Term::complement(Term child) -> Term
{
    return make(TermKind::complement, "", {std::move(child)});
}

auto Term::meet(Term left, Term right) -> Term
{
    return make(TermKind::meet, "", {std::move(left), std::move(right)});
}

auto Term::join(Term left, Term right) -> Term
{
    return make(TermKind::join, "", {std::move(left), std::move(right)});
}

auto Term::left() const -> const Term &
{
    if (_node->children.empty())
        throw PreconditionError("term has no children");
    return _node->children[0];
}

auto Term::right() const -> const Term &
{
    if (_node->children.size() < 2)
        throw PreconditionError("term has no right operand");
    return _node->children[1];
}

auto Term::arity() const -> int
{
    return static_cast<int>(_node->children.size());
}

namespace {
    class Parser
    {
    public:
        explicit Parser(std::string_view text) : _text(text) {}

        auto term_to_end() -> Term
        {
            auto t = join();
            skip();
            if (_pos != _text.size())
                fail("unexpected '" + std::string(1, _text[_pos]) + "'");
            return t;
        }

        auto join() -> Term
        {
            auto t = meet();
            while (peek() == '|') {
                ++_pos;
                t = Term::join(t, meet());
            }
            return t;
        }

        auto meet() -> Term
        {
            auto t = postfix();
            while (peek() == '&') {
                ++_pos;
                t = Term::meet(t, postfix());
            }
            return t;
        }

        auto postfix() -> Term
        {
            auto t = atom();
            while (peek() == '\'') {
                ++_pos;
                t = Term::complement(t);
            }
            return t;
        }

        auto atom() -> Term
        {
            char c = peek();
            if (c == '(') {
                ++_pos;
                auto t = join();
                if (peek() != ')')
                    fail("expected ')'");
                ++_pos;
                return t;
            }
            if (c == '0' || c == '1') {
                ++_pos;
                if (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
                    fail("identifiers must not start with a digit");
                return c == '0' ? Term::zero() : Term::one();
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                auto start = _pos;
                while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
                    ++_pos;
                return Term::variable(std::string(_text.substr(start, _pos - start)));
            }
            if (c == '\0')
                fail("unexpected end of term");
            fail("unexpected '" + std::string(1, c) + "'");
        }

        auto peek() -> char
        {
            skip();
            return _pos < _text.size() ? _text[_pos] : '\0';
        }

        [[noreturn]] void fail(const std::string & message) const
        {
            throw ParseError(message, 1, static_cast<int>(_pos) + 1);
        }

    private:
        void skip()
        {
            while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
        }

        std::string_view _text;
        std::size_t _pos = 0;
    };

    auto parse_equation_at(std::string_view text, std::size_t offset) -> Equation
    {
        auto eq = text.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected '=' in equation", 1, static_cast<int>(offset + text.size()) + 1);
        auto rebase = [&](const ParseError & e, std::size_t base) {
            return ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), 1,
                e.column() + static_cast<int>(base));
        };
        Term lhs = Term::zero(), rhs = Term::zero();
        try {
            lhs = Parser(text.substr(0, eq)).term_to_end();
        }
        catch (const ParseError & e) {
            throw rebase(e, offset);
        }
        try {
            rhs = Parser(text.substr(eq + 1)).term_to_end();
        }
        catch (const ParseError & e) {
            throw rebase(e, offset + eq + 1);
        }
        return {lhs, rhs};
    }

    enum Precedence
    {
        p_join = 0,
        p_meet = 1,
        p_postfix = 2,
    };

    void print(const Term & t, std::string & out, int context)
    {
        switch (t.kind()) {
        case TermKind::variable:
            out += t.name();
            return;
        case TermKind::zero:
            out += '0';
            return;
        case TermKind::one:
            out += '1';
            return;
        case TermKind::complement:
            print(t.left(), out, p_postfix);
            out += '\'';
            return;
        case TermKind::meet:
        case TermKind::join: {
            int own = t.kind() == TermKind::meet ? p_meet : p_join;
            bool paren = own < context;
            if (paren)
                out += '(';
            print(t.left(), out, own);
            out += t.kind() == TermKind::meet ? " & " : " | ";
            print(t.right(), out, own + 1);
            if (paren)
                out += ')';
            return;
        }
        }
    }

    void collect(const Term & t, std::vector<std::string> & out, std::set<std::string> & seen)
    {
        if (t.kind() == TermKind::variable) {
            if (seen.insert(t.name()).second)
                out.push_back(t.name());
            return;
        }
        for (int i = 0; i < t.arity(); ++i)
            collect(t.child(i), out, seen);
    }

    void compile(const Term & t, const std::map<std::string, int> & index, auto & ops)
    {
        for (int i = 0; i < t.arity(); ++i)
            compile(t.child(i), index, ops);
        int var = -1;
        if (t.kind() == TermKind::variable) {
            auto it = index.find(t.name());
            if (it == index.end())
                throw InputError("variable '" + t.name() + "' is not assigned");
            var = it->second;
        }
        ops.push_back({t.kind(), var});
    }
}

auto parse_term(std::string_view text) -> Term
{
    return Parser(text).term_to_end();
}

auto parse_equation(std::string_view text) -> Equation
{
    if (text.find('=') != text.rfind('='))
        throw ParseError("equation has more than one '='", 1, static_cast<int>(text.rfind('=')) + 1);
    return parse_equation_at(text, 0);
}

auto parse_quasi_equation(std::string_view text) -> QuasiEquation
{
    QuasiEquation q{{}, {Term::zero(), Term::zero()}};
    auto arrow = text.find("=>");
    std::size_t concl_start = 0;
    if (arrow != std::string_view::npos) {
        std::size_t start = 0;
        auto premises = text.substr(0, arrow);
        bool any_text = premises.find_first_not_of(" \t\r\n") != std::string_view::npos;
        while (any_text) {
            auto comma = premises.find(',', start);
            auto piece = premises.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (piece.find('=') != piece.rfind('='))
                throw ParseError("premise has more than one '='", 1, static_cast<int>(start + piece.rfind('=')) + 1);
            q.premises.push_back(parse_equation_at(piece, start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        concl_start = arrow + 2;
    }
    auto concl = text.substr(concl_start);
    if (concl.find('=') != concl.rfind('='))
        throw ParseError("conclusion has more than one '='", 1, static_cast<int>(concl_start + concl.rfind('=')) + 1);
    q.conclusion = parse_equation_at(concl, concl_start);
    return q;
}

auto to_string(const Term & t) -> std::string
{
    std::string out;
    print(t, out, p_join);
    return out;
}

auto to_string(const Equation & e) -> std::string
{
    return to_string(e.lhs) + " = " + to_string(e.rhs);
}

auto to_string(const QuasiEquation & q) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < q.premises.size(); ++i)
        out += (i ? ", " : "") + to_string(q.premises[i]);
    if (! q.premises.empty())
        out += " ";
    return out + "=> " + to_string(q.conclusion);
}

auto variables(const Term & t) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect(t, out, seen);
    return out;
}

auto variables(const Equation & e) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect(e.lhs, out, seen);
    collect(e.rhs, out, seen);
    return out;
}

auto variables(const QuasiEquation & q) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto & p : q.premises) {
        collect(p.lhs, out, seen);
        collect(p.rhs, out, seen);
    }
    collect(q.conclusion.lhs, out, seen);
    collect(q.conclusion.rhs, out, seen);
    return out;
}

auto eval(const Term & t, const StructureTable & s, const Assignment & a) -> std::optional<Element>
{
    switch (t.kind()) {
    case TermKind::variable: {
        auto it = a.find(t.name());
        if (it == a.end())
            throw InputError("variable '" + t.name() + "' is not assigned");
        if (it->second < 0 || it->second >= s.size())
            throw InputError("variable '" + t.name() + "' assigned out of range");
        return it->second;
    }
    case TermKind::zero:
        return s.bottom();
    case TermKind::one:
        return s.top();
    case TermKind::complement: {
        auto x = eval(t.left(), s, a);
        if (! x)
            return std::nullopt;
        return s.ortho(*x);
    }
    case TermKind::meet:
    case TermKind::join: {
        auto x = eval(t.left(), s, a);
        if (! x)
            return std::nullopt;
        auto y = eval(t.right(), s, a);
        if (! y)
            return std::nullopt;
        return t.kind() == TermKind::meet ? s.meet(*x, *y) : s.join(*x, *y);
    }
    }
    return std::nullopt;
}

CompiledTerm::CompiledTerm(const Term & t, const std::vector<std::string> & vars)
{
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vars.size(); ++i)
        index.emplace(vars[i], static_cast<int>(i));
    compile(t, index, _ops);
}

auto CompiledTerm::eval(const StructureTable & s, const std::vector<Element> & values) const -> std::optional<Element>
{
    Element stack[256];
    std::vector<Element> big;
    Element * st = stack;
    if (_ops.size() > 256) {
        big.resize(_ops.size());
        st = big.data();
    }
    int top = 0;
    for (auto & op : _ops) {
        switch (op.kind) {
        case TermKind::variable:
            st[top++] = values[op.var];
            break;
        case TermKind::zero:
            st[top++] = s.bottom();
            break;
        case TermKind::one:
            st[top++] = s.top();
            break;
        case TermKind::complement:
            st[top - 1] = s.ortho(st[top - 1]);
            break;
        case TermKind::meet:
        case TermKind::join: {
            auto r = op.kind == TermKind::meet ? s.meet(st[top - 2], st[top - 1]) : s.join(st[top - 2], st[top - 1]);
            if (! r)
                return std::nullopt;
            st[top - 2] = *r;
            --top;
            break;
        }
        }
    }
    return st[0];
}

auto subterm(const Term & t, const std::vector<int> & path) -> const Term &
{
    const Term * cur = &t;
    for (auto i : path) {
        if (i < 0 || i >= cur->arity())
            throw InputError("invalid term position");
        cur = &cur->child(i);
    }
    return *cur;
}

namespace {
    auto replace_from(const Term & t, const std::vector<int> & path, std::size_t depth, const Term & r) -> Term
    {
        if (depth == path.size())
            return r;
        auto i = path[depth];
        if (i < 0 || i >= t.arity())
            throw InputError("invalid term position");
        switch (t.kind()) {
        case TermKind::complement:
            return Term::complement(replace_from(t.left(), path, depth + 1, r));
        case TermKind::meet:
            return i == 0 ? Term::meet(replace_from(t.left(), path, depth + 1, r), t.right())
                          : Term::meet(t.left(), replace_from(t.right(), path, depth + 1, r));
        case TermKind::join:
            return i == 0 ? Term::join(replace_from(t.left(), path, depth + 1, r), t.right())
                          : Term::join(t.left(), replace_from(t.right(), path, depth + 1, r));
        default:
            throw InputError("invalid term position");
        }
    }
}

auto replace_at(const Term & t, const std::vector<int> & path, const Term & replacement) -> Term
{
    return replace_from(t, path, 0, replacement);
}

auto substitute(const Term & t, const std::map<std::string, Term> & sigma) -> Term
{
    switch (t.kind()) {
    case TermKind::variable: {
        auto it = sigma.find(t.name());
        return it == sigma.end() ? t : it->second;
    }
    case TermKind::zero:
    case TermKind::one:
        return t;
    case TermKind::complement:
        return Term::complement(substitute(t.left(), sigma));
    case TermKind::meet:
        return Term::meet(substitute(t.left(), sigma), substitute(t.right(), sigma));
    case TermKind::join:
        return Term::join(substitute(t.left(), sigma), substitute(t.right(), sigma));
    }
    return t;
}

}
