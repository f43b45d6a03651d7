#include "qlwb/deciders.hpp"
#include "qlwb/constructors.hpp"
#include "qlwb/error.hpp"

#include <chrono>
#include <sstream>

namespace qlwb {

auto verdict_name(VerdictKind k) -> std::string
{
    switch (k) {
    case VerdictKind::valid:
        return "valid";
    case VerdictKind::invalid:
        return "invalid";
    case VerdictKind::unknown:
        return "unknown";
    }
    return "unknown";
}

namespace {
    /// Calls f(values) for every assignment in lexicographic order until it returns true.
    template <typename F>
    auto sweep(int vars, int size, F && f) -> bool
    {
        std::vector<Element> values(vars, 0);
        while (true) {
            if (f(values))
                return true;
            int k = vars - 1;
            while (k >= 0 && ++values[k] == size)
                values[k--] = 0;
            if (k < 0)
                return false;
        }
    }

    auto to_assignment(const std::vector<std::string> & vars, const std::vector<Element> & values) -> Assignment
    {
        Assignment a;
        for (std::size_t i = 0; i < vars.size(); ++i)
            a[vars[i]] = values[i];
        return a;
    }
}

auto replay(const Equation & eq, const Counterexample & c) -> bool
{
    auto l = eval(eq.lhs, c.model, c.assignment);
    auto r = eval(eq.rhs, c.model, c.assignment);
    return l && r && *l != *r;
}

auto replay(const QuasiEquation & q, const Counterexample & c) -> bool
{
    for (auto & p : q.premises) {
        auto l = eval(p.lhs, c.model, c.assignment);
        auto r = eval(p.rhs, c.model, c.assignment);
        if (! l || ! r || *l != *r)
            return false;
    }
    return replay(q.conclusion, c);
}

auto find_counterexample(const Equation & eq, const StructureTable & model, const std::string & name)
    -> std::optional<Counterexample>
{
    auto vars = variables(eq);
    CompiledTerm lhs(eq.lhs, vars), rhs(eq.rhs, vars);
    std::optional<Counterexample> out;
    sweep(static_cast<int>(vars.size()), model.size(), [&](const std::vector<Element> & v) {
        auto l = lhs.eval(model, v);
        auto r = rhs.eval(model, v);
        if (l && r && *l != *r) {
            out = Counterexample{name, model, to_assignment(vars, v)};
            return true;
        }
        return false;
    });
    return out;
}

auto decide_ba(const Equation & eq) -> Verdict
{
    static const StructureTable two = boolean_algebra(1);
    Verdict v;
    v.method = "truth table over 2";
    if (auto c = find_counterexample(eq, two, "2")) {
        v.kind = VerdictKind::invalid;
        v.counterexample = std::move(c);
    }
    else
        v.kind = VerdictKind::valid;
    return v;
}

auto free_oml2_model() -> const StructureTable &
{
    static const StructureTable model = product(mo(2), boolean_algebra(4));
    return model;
}

auto decide_oml2(const Equation & eq) -> Verdict
{
    if (variables(eq).size() > 2)
        throw InputError("decide_oml2: equation has more than two variables; use the ol or oml theory (fep_decide)");
    Verdict v;
    v.method = "all assignments into MO2 x 2^4";
    auto broad = find_counterexample(eq, free_oml2_model(), "MO2x2^4");
    if (! broad) {
        v.kind = VerdictKind::valid;
        return v;
    }
    v.kind = VerdictKind::invalid;
    static const StructureTable mo2 = mo(2);
    static const StructureTable two = boolean_algebra(1);
    if (auto c = find_counterexample(eq, mo2, "MO2"))
        v.counterexample = std::move(c);
    else if (auto c2 = find_counterexample(eq, two, "2"))
        v.counterexample = std::move(c2);
    else
        v.counterexample = std::move(broad);
    return v;
}

auto fep_decide(Theory theory, const Equation & eq, FepBudget budget) -> Verdict
{
    using clock = std::chrono::steady_clock;
    auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(budget.timeout_seconds));
    ProofBudget pb;
    pb.max_steps = budget.max_proof_steps;
    pb.deadline = deadline;
    ProofSearch search(theory, eq, pb);

    Verdict v;
    int size = 2;
    long slice = 1;
    bool models_done = false;
    std::string model_note;
    while (true) {
        auto proof = search.advance(slice);
        if (proof) {
            v.kind = VerdictKind::valid;
            v.proof = std::move(proof);
            v.method = "rewriting proof (" + std::to_string(search.expanded()) + " terms expanded)";
            return v;
        }
        if (! models_done) {
            if (size > budget.max_model_size)
                models_done = true;
            else {
                try {
                    std::vector<StructureTable> fresh;
                    const std::vector<StructureTable> * models = nullptr;
                    if (size <= 8)
                        models = &models_of_size(theory, size);
                    else {
                        ModelBudget mb;
                        mb.deadline = deadline;
                        fresh = enumerate_models(theory, size, mb);
                        models = &fresh;
                    }
                    for (std::size_t i = 0; i < models->size(); ++i) {
                        auto name = theory_name(theory) + "-" + std::to_string(size) + "#" + std::to_string(i + 1);
                        if (auto c = find_counterexample(eq, (*models)[i], name)) {
                            v.kind = VerdictKind::invalid;
                            v.counterexample = std::move(c);
                            v.method = "finite model search (size " + std::to_string(size) + ")";
                            return v;
                        }
                    }
                }
                catch (const ResourceError & e) {
                    models_done = true;
                    model_note = std::string("; ") + e.what();
                }
                size += 2;
            }
        }
        bool proofs_done = search.exhausted();
        if ((proofs_done && models_done) || clock::now() >= deadline) {
            v.kind = VerdictKind::unknown;
            v.method = "budget exhausted: " + std::to_string(search.expanded()) + " terms expanded, models up to size "
                + std::to_string(std::min(size - 2, budget.max_model_size)) + " searched" + model_note;
            return v;
        }
        slice *= 2;
    }
}

auto quasi_counterexample(const QuasiEquation & q, const std::vector<std::pair<std::string, StructureTable>> & catalog)
    -> std::optional<Counterexample>
{
    auto vars = variables(q);
    std::vector<std::pair<CompiledTerm, CompiledTerm>> premises;
    for (auto & p : q.premises)
        premises.emplace_back(CompiledTerm(p.lhs, vars), CompiledTerm(p.rhs, vars));
    CompiledTerm lhs(q.conclusion.lhs, vars), rhs(q.conclusion.rhs, vars);
    for (auto & [name, model] : catalog) {
        std::optional<Counterexample> out;
        sweep(static_cast<int>(vars.size()), model.size(), [&](const std::vector<Element> & v) {
            for (auto & [pl, pr] : premises) {
                auto l = pl.eval(model, v);
                auto r = pr.eval(model, v);
                if (! l || ! r || *l != *r)
                    return false;
            }
            auto l = lhs.eval(model, v);
            auto r = rhs.eval(model, v);
            if (l && r && *l != *r) {
                out = Counterexample{name, model, to_assignment(vars, v)};
                return true;
            }
            return false;
        });
        if (out)
            return out;
    }
    return std::nullopt;
}

auto format_verdict(const Equation & eq, const Verdict & v) -> std::string
{
    std::ostringstream out;
    out << verdict_name(v.kind) << ": " << to_string(eq) << '\n';
    out << "method: " << v.method << '\n';
    if (v.proof)
        out << "proof:\n" << format_proof(*v.proof);
    if (v.counterexample) {
        const auto & c = *v.counterexample;
        out << "model: " << c.model_name << " (" << c.model.size() << " elements)\n";
        out << "assignment:";
        for (auto & [name, e] : c.assignment)
            out << ' ' << name << '=' << c.model.label(e);
        out << '\n';
        auto l = eval(eq.lhs, c.model, c.assignment);
        auto r = eval(eq.rhs, c.model, c.assignment);
        if (l && r)
            out << "lhs = " << c.model.label(*l) << ", rhs = " << c.model.label(*r) << '\n';
    }
    return out.str();
}

}
