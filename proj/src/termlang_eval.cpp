#include "tadic/termlang.hpp"

#include "tadic/error.hpp"

#include <algorithm>

namespace tadic {

namespace {

LaurentElem apply_series(const std::string& name, const std::vector<LaurentElem>& args,
                         const SeriesRegistry& registry, Precision cap)
{
    const RestrictedSeries* f = registry.find(name);
    if (f == nullptr)
        throw ContractViolation("unknown series '" + name + "'");
    // f(y) := 0 outside R^n.
    for (const auto& y : args)
        if (!in_R(y))
            return LaurentElem(cap);
    long m = f->precision().levels();
    for (const auto& y : args)
        m = std::min(m, y.abs_precision());
    if (m <= 0)
        return LaurentElem::zero_at(cap, 0);
    const int mm = static_cast<int>(m);
    std::vector<AdicCoeff> points;
    points.reserve(args.size());
    for (const auto& y : args)
        points.push_back(y.to_coeff(mm));
    const RestrictedSeries g = mm == f->precision().levels() ? *f : f->with_precision(mm);
    return LaurentElem::from_coeff(cap, evaluate(g, points));
}

LaurentElem flagged(const FlaggedValue& v, const char* what)
{
    if (v.inexact_zero)
        throw PrecisionExhausted(std::string(what) + " of a zero known only at precision");
    return v.value;
}

// Three-valued evaluation: nullopt when the value is undecidable at
// precision.  The first precision message is kept for the final error.
std::optional<bool> eval3(const Formula& f, const Environment& env, const SeriesRegistry& reg, std::string& why)
{
    auto guarded = [&](auto&& fn) -> std::optional<bool> {
        try {
            return fn();
        } catch (const PrecisionExhausted& e) {
            if (why.empty())
                why = e.what();
            return std::nullopt;
        } catch (const DivisionByZeroAtPrecision& e) {
            if (why.empty())
                why = e.what();
            return std::nullopt;
        }
    };
    switch (f.kind) {
    case Formula::Kind::preceq:
        return guarded([&] { return preceq(eval_term(*f.terms[0], env, reg), eval_term(*f.terms[1], env, reg)); });
    case Formula::Kind::equals:
        return guarded([&] { return equals(eval_term(*f.terms[0], env, reg), eval_term(*f.terms[1], env, reg)); });
    case Formula::Kind::in_C:
        return guarded([&] { return in_C(eval_term(*f.terms[0], env, reg)); });
    case Formula::Kind::in_G:
        return guarded([&] { return in_G(eval_term(*f.terms[0], env, reg)); });
    case Formula::Kind::neg: {
        auto v = eval3(*f.subs[0], env, reg, why);
        if (!v)
            return std::nullopt;
        return !*v;
    }
    case Formula::Kind::conj: {
        auto a = eval3(*f.subs[0], env, reg, why);
        if (a && !*a)
            return false;
        auto b = eval3(*f.subs[1], env, reg, why);
        if (b && !*b)
            return false;
        if (a && b)
            return true;
        return std::nullopt;
    }
    case Formula::Kind::disj: {
        auto a = eval3(*f.subs[0], env, reg, why);
        if (a && *a)
            return true;
        auto b = eval3(*f.subs[1], env, reg, why);
        if (b && *b)
            return true;
        if (a && b)
            return false;
        return std::nullopt;
    }
    }
    return std::nullopt;
}

} // namespace

LaurentElem eval_term(const Term& t, const Environment& env, const SeriesRegistry& registry)
{
    const Precision cap = registry.precision();
    switch (t.kind) {
    case Term::Kind::constant:
        return *t.value;
    case Term::Kind::variable: {
        auto it = env.find(t.name);
        if (it == env.end())
            throw UnboundVariable("unbound variable '" + t.name + "'");
        return it->second;
    }
    case Term::Kind::neg:
        return -eval_term(*t.args[0], env, registry);
    case Term::Kind::add:
        return eval_term(*t.args[0], env, registry) + eval_term(*t.args[1], env, registry);
    case Term::Kind::sub:
        return eval_term(*t.args[0], env, registry) - eval_term(*t.args[1], env, registry);
    case Term::Kind::mul:
        return eval_term(*t.args[0], env, registry) * eval_term(*t.args[1], env, registry);
    case Term::Kind::dcall:
        return restricted_div(eval_term(*t.args[0], env, registry), eval_term(*t.args[1], env, registry));
    case Term::Kind::co:
        return flagged(co(eval_term(*t.args[0], env, registry)), "co");
    case Term::Kind::abs:
        return flagged(abs_g(eval_term(*t.args[0], env, registry)), "abs");
    case Term::Kind::apply: {
        std::vector<LaurentElem> args;
        args.reserve(t.args.size());
        for (const auto& a : t.args)
            args.push_back(eval_term(*a, env, registry));
        return apply_series(t.name, args, registry, cap);
    }
    }
    throw Error("unknown term kind");
}

bool eval_formula(const Formula& f, const Environment& env, const SeriesRegistry& registry)
{
    std::string why;
    std::optional<bool> v = eval3(f, env, registry, why);
    if (!v)
        throw PrecisionExhausted(why);
    return *v;
}

RestrictedSeries compose_series(const Term& t, const std::vector<std::string>& vars, const SeriesRegistry& registry)
{
    const Precision prec = registry.precision();
    const std::size_t n = vars.size();
    auto rec = [&](auto&& self, const Term& u) -> RestrictedSeries {
        switch (u.kind) {
        case Term::Kind::constant: {
            const LaurentElem& v = *u.value;
            if (!in_R(v))
                throw ContractViolation("constant outside R has no series form");
            return RestrictedSeries::constant(n, v.to_coeff(prec.levels()));
        }
        case Term::Kind::variable: {
            auto it = std::find(vars.begin(), vars.end(), u.name);
            if (it == vars.end())
                throw UnboundVariable("unbound variable '" + u.name + "'");
            return RestrictedSeries::variable(n, static_cast<std::size_t>(it - vars.begin()), prec);
        }
        case Term::Kind::neg:
            return -self(self, *u.args[0]);
        case Term::Kind::add:
            return self(self, *u.args[0]) + self(self, *u.args[1]);
        case Term::Kind::sub:
            return self(self, *u.args[0]) - self(self, *u.args[1]);
        case Term::Kind::mul:
            return self(self, *u.args[0]) * self(self, *u.args[1]);
        case Term::Kind::apply: {
            const RestrictedSeries& f = *registry.find(u.name);
            if (u.args.empty())
                return RestrictedSeries::constant(n, f.coefficient(Monomial(0)));
            std::vector<RestrictedSeries> inner;
            for (const auto& a : u.args)
                inner.push_back(self(self, *a));
            return substitute(f, inner);
        }
        default:
            throw ContractViolation("only ring operations and series applications compose into a series");
        }
    };
    return rec(rec, t);
}

} // namespace tadic
