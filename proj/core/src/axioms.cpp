#include "qlwb/axioms.hpp"

#include <sstream>

namespace qlwb {

auto law_name(Law law) -> std::string
{
    switch (law) {
    case Law::meet_exists: return "meet_exists";
    case Law::join_exists: return "join_exists";
    case Law::no_ortho: return "no_ortho";
    case Law::complement: return "complement";
    case Law::orthogonal_join: return "orthogonal_join";
    case Law::orthomodular_poset: return "orthomodular_poset";
    case Law::orthomodular: return "orthomodular";
    case Law::modular: return "modular";
    case Law::distributive: return "distributive";
    }
    return "unknown";
}

namespace {
    auto find_lattice_violation(const StructureTable & s) -> std::optional<Witness>
    {
        for (int a = 0; a < s.size(); ++a)
            for (int b = a + 1; b < s.size(); ++b) {
                if (! s.meet(a, b))
                    return Witness{Law::meet_exists, {a, b}};
                if (! s.join(a, b))
                    return Witness{Law::join_exists, {a, b}};
            }
        return std::nullopt;
    }

    auto find_complement_violation(const StructureTable & s) -> std::optional<Witness>
    {
        for (int a = 0; a < s.size(); ++a) {
            auto common = s.down(a) & s.down(s.ortho(a));
            common.reset(s.bottom());
            if (! common.empty())
                return Witness{Law::complement, {a, common.first()}};
        }
        return std::nullopt;
    }

    auto find_orthogonal_join_violation(const StructureTable & s) -> std::optional<Witness>
    {
        for (int a = 0; a < s.size(); ++a)
            for (int b = a + 1; b < s.size(); ++b)
                if (s.orthogonal(a, b) && ! s.join(a, b))
                    return Witness{Law::orthogonal_join, {a, b}};
        return std::nullopt;
    }

    // Only called after orthogonal joins are known to exist.
    auto find_omp_law_violation(const StructureTable & s) -> std::optional<Witness>
    {
        for (int x = 0; x < s.size(); ++x)
            for (int y = s.up(x).first(); y != -1; y = s.up(x).next(y)) {
                auto inner = s.join(x, s.ortho(y));
                if (! inner)
                    return Witness{Law::orthogonal_join, {std::min(x, s.ortho(y)), std::max(x, s.ortho(y))}};
                auto outer = s.join(x, s.ortho(*inner));
                if (! outer)
                    return Witness{Law::orthogonal_join, {std::min(x, s.ortho(*inner)), std::max(x, s.ortho(*inner))}};
                if (*outer != y)
                    return Witness{Law::orthomodular_poset, {x, y}};
            }
        return std::nullopt;
    }

    // Lattice-only checks below.
    auto find_oml_violation(const StructureTable & s) -> std::optional<Witness>
    {
        for (int x = 0; x < s.size(); ++x)
            for (int y = s.up(x).first(); y != -1; y = s.up(x).next(y))
                if (*s.join(x, *s.meet(s.ortho(x), y)) != y)
                    return Witness{Law::orthomodular, {x, y}};
        return std::nullopt;
    }

    auto find_modular_violation(const StructureTable & s) -> std::optional<Witness>
    {
        for (int x = 0; x < s.size(); ++x)
            for (int z = s.up(x).first(); z != -1; z = s.up(x).next(z))
                for (int y = 0; y < s.size(); ++y)
                    if (*s.join(x, *s.meet(y, z)) != *s.meet(*s.join(x, y), z))
                        return Witness{Law::modular, {x, y, z}};
        return std::nullopt;
    }

    auto find_distributive_violation(const StructureTable & s) -> std::optional<Witness>
    {
        for (int x = 0; x < s.size(); ++x)
            for (int y = 0; y < s.size(); ++y)
                for (int z = 0; z < s.size(); ++z)
                    if (*s.meet(x, *s.join(y, z)) != *s.join(*s.meet(x, y), *s.meet(x, z)))
                        return Witness{Law::distributive, {x, y, z}};
        return std::nullopt;
    }

    auto failed(Witness w) -> LawCheck { return LawCheck{false, std::move(w)}; }
}

auto check_axioms(const StructureTable & s) -> AxiomReport
{
    AxiomReport r;
    if (auto w = find_lattice_violation(s))
        r.lattice = failed(*w);

    if (! s.has_ortho()) {
        Witness w{Law::no_ortho, {}};
        r.omp = failed(w);
        r.ol = r.lattice.holds ? failed(w) : r.lattice;
        r.oml = r.mol = r.boolean = r.ol;
        return r;
    }

    auto complement = find_complement_violation(s);

    // OMP: orthoposet, orthogonal joins, orthomodular law in join form.
    if (complement)
        r.omp = failed(*complement);
    else if (auto w = find_orthogonal_join_violation(s))
        r.omp = failed(*w);
    else if (auto w = find_omp_law_violation(s))
        r.omp = failed(*w);

    if (! r.lattice.holds)
        r.ol = r.lattice;
    else if (complement)
        r.ol = failed(*complement);

    if (! r.ol.holds) {
        r.oml = r.mol = r.boolean = r.ol;
        return r;
    }
    if (auto w = find_oml_violation(s))
        r.oml = failed(*w);
    if (auto w = find_modular_violation(s))
        r.mol = failed(*w);
    if (auto w = find_distributive_violation(s))
        r.boolean = failed(*w);
    return r;
}

auto replay(const StructureTable & s, const Witness & w) -> bool
{
    auto & e = w.elements;
    auto in_range = [&](std::size_t count) {
        if (e.size() != count)
            return false;
        for (auto x : e)
            if (x < 0 || x >= s.size())
                return false;
        return true;
    };
    switch (w.law) {
    case Law::meet_exists:
        return in_range(2) && ! s.meet(e[0], e[1]);
    case Law::join_exists:
        return in_range(2) && ! s.join(e[0], e[1]);
    case Law::no_ortho:
        return e.empty() && ! s.has_ortho();
    case Law::complement:
        return in_range(2) && s.has_ortho() && e[1] != s.bottom() && s.leq(e[1], e[0]) && s.leq(e[1], s.ortho(e[0]));
    case Law::orthogonal_join:
        return in_range(2) && s.has_ortho() && s.orthogonal(e[0], e[1]) && ! s.join(e[0], e[1]);
    case Law::orthomodular_poset: {
        if (! in_range(2) || ! s.has_ortho() || ! s.leq(e[0], e[1]))
            return false;
        auto inner = s.join(e[0], s.ortho(e[1]));
        if (! inner)
            return false;
        auto outer = s.join(e[0], s.ortho(*inner));
        return outer && *outer != e[1];
    }
    case Law::orthomodular: {
        if (! in_range(2) || ! s.has_ortho() || ! s.leq(e[0], e[1]))
            return false;
        auto m = s.meet(s.ortho(e[0]), e[1]);
        if (! m)
            return false;
        auto j = s.join(e[0], *m);
        return j && *j != e[1];
    }
    case Law::modular: {
        if (! in_range(3) || ! s.leq(e[0], e[2]))
            return false;
        auto yz = s.meet(e[1], e[2]);
        auto xy = s.join(e[0], e[1]);
        if (! yz || ! xy)
            return false;
        auto lhs = s.join(e[0], *yz);
        auto rhs = s.meet(*xy, e[2]);
        return lhs && rhs && *lhs != *rhs;
    }
    case Law::distributive: {
        if (! in_range(3))
            return false;
        auto yz = s.join(e[1], e[2]);
        auto xy = s.meet(e[0], e[1]);
        auto xz = s.meet(e[0], e[2]);
        if (! yz || ! xy || ! xz)
            return false;
        auto lhs = s.meet(e[0], *yz);
        auto rhs = s.join(*xy, *xz);
        return lhs && rhs && *lhs != *rhs;
    }
    }
    return false;
}

auto describe(const StructureTable & s, const Witness & w) -> std::string
{
    std::ostringstream out;
    out << law_name(w.law) << '(';
    for (std::size_t i = 0; i < w.elements.size(); ++i)
        out << (i ? ", " : "") << s.label(w.elements[i]);
    out << ')';
    return out.str();
}

auto is_lattice(const StructureTable & s) -> bool
{
    return ! find_lattice_violation(s);
}

auto is_omp(const StructureTable & s) -> bool
{
    return s.has_ortho() && ! find_complement_violation(s) && ! find_orthogonal_join_violation(s)
        && ! find_omp_law_violation(s);
}

auto is_oml(const StructureTable & s) -> bool
{
    return s.has_ortho() && is_lattice(s) && ! find_complement_violation(s) && ! find_oml_violation(s);
}

}
