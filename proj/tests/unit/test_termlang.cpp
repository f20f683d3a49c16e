#include "tadic/error.hpp"
#include "tadic/termlang.hpp"

#include "support/random.hpp"

#include <doctest.h>

using namespace tadic;
using namespace tadic::testing;

namespace {

const Precision cap(4);

SeriesRegistry registry()
{
    return parse_registry("# geometric series and a binary product\n"
                          "geo := 1 + t*Y1 + t^2*Y1^2 + t^3*Y1^3\n"
                          "mul := Y1*Y2 + t\n",
                          cap);
}

Environment env()
{
    return parse_environment("z := t\nw := t^-1\none := 1\n", cap);
}

LaurentElem k(const char* text)
{
    return parse_laurent(text, cap);
}

LaurentElem eval(const char* text)
{
    const SeriesRegistry reg = registry();
    return eval_term(*parse_term(text, reg, cap), env(), reg);
}

bool holds(const char* text)
{
    const SeriesRegistry reg = registry();
    return eval_formula(*parse_formula(text, reg, cap), env(), reg);
}

ParseError parse_error(const char* text)
{
    try {
        parse_formula(text, registry(), cap);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for " << text);
    return ParseError("", 0, 0);
}

} // namespace

TEST_CASE("parsing builds the expected trees")
{
    const SeriesRegistry reg = registry();
    TermPtr d = parse_term("D(t^2, t)", reg, cap);
    REQUIRE(d->kind == Term::Kind::dcall);
    REQUIRE(d->args.size() == 2);
    CHECK(d->args[0]->kind == Term::Kind::constant);
    CHECK(same_repr(*d->args[0]->value, k("t^2")));
    CHECK(same_repr(*d->args[1]->value, k("t")));

    TermPtr s = parse_term("geo(z) + co(z)", reg, cap);
    REQUIRE(s->kind == Term::Kind::add);
    CHECK(s->args[0]->kind == Term::Kind::apply);
    CHECK(s->args[0]->name == "geo");
    CHECK(s->args[0]->args[0]->kind == Term::Kind::variable);
    CHECK(s->args[1]->kind == Term::Kind::co);

    TermPtr p = parse_term("-z*z + 3", reg, cap);
    CHECK(p->kind == Term::Kind::add);
    REQUIRE(p->args[0]->kind == Term::Kind::mul);
    CHECK(p->args[0]->args[0]->kind == Term::Kind::neg);
}

TEST_CASE("parse errors")
{
    const SeriesRegistry reg = registry();
    CHECK_THROWS_AS(parse_term("geo(z, z)", reg, cap), ParseError);
    CHECK_THROWS_AS(parse_term("nope(z)", reg, cap), ParseError);
    CHECK_THROWS_AS(parse_term("z +", reg, cap), ParseError);
    CHECK_THROWS_AS(parse_term("z^-1", reg, cap), ParseError);

    ParseError q = parse_error("t <<= 1 & forall x (x = x)");
    CHECK(q.column() == 11);
    CHECK(q.message().find("quantifier") != std::string::npos);
    CHECK(parse_error("∃ x (x = x)").column() == 1);

    ParseError pos = parse_error("t <<= 1 &\n  (z = )");
    CHECK(pos.line() == 2);
    CHECK(pos.column() == 8);
    CHECK_THROWS_AS(parse_formula("z $ 1", reg, cap), ParseError);
}

TEST_CASE("printing round-trips")
{
    const SeriesRegistry reg = registry();
    for (const char* text :
         {"D(t^2, t)", "geo(z) + co(z)", "-(z - 1)*abs(w)", "mul(z, geo(z*z)) - 1/2", "z - (one - z)", "t^-3*z"}) {
        TermPtr a = parse_term(text, reg, cap);
        TermPtr b = parse_term(to_string(*a), reg, cap);
        CHECK(same_term(*a, *b));
        CHECK(to_string(*b) == to_string(*a));
    }
    for (const char* text : {"t <<= 1 & !(1 <<= t)", "C(3) | G(t) & z = w", "!(z = 1 | (C(z) & G(z)))",
                             "(z <<= w) | z = t"}) {
        FormulaPtr a = parse_formula(text, reg, cap);
        FormulaPtr b = parse_formula(to_string(*a), reg, cap);
        CHECK(same_formula(*a, *b));
    }
    CHECK(to_string(*parse_formula("t ≼ 1 ∧ ¬(1 ≼ t) ∨ C(1)", reg, cap)) == "t <<= 1 & !(1 <<= t) | C(1)");
}

TEST_CASE("evaluation")
{
    CHECK(same_repr(eval("D(z^2, z)"), k("t")));
    CHECK(same_repr(eval("geo(one)"), k("1 + t + t^2 + t^3")));
    CHECK(eval("geo(w)").is_exact_zero());
    CHECK(same_repr(eval("co(3*t^-2 + 5*t^-1)"), k("3")));
    CHECK(same_repr(eval("abs(3*t^-2 + 5*t^-1)"), k("t^-2")));
    // Applications are known modulo t^N in absolute terms.
    CHECK(same_repr(eval("mul(z, z)"), k("t + t^2 (mod t^3)")));
    CHECK_THROWS_AS(eval("nobody + 1"), UnboundVariable);
}

TEST_CASE("formulas")
{
    CHECK(holds("t <<= 1"));
    CHECK_FALSE(holds("1 <<= t"));
    CHECK(holds("C(3) & !C(t)"));
    CHECK(holds("G(t^2) & !G(2*t)"));
    CHECK(holds("z*w = 1"));
    CHECK_THROWS_AS(holds("z + t^2 - z*(1 + t) = 0"), PrecisionExhausted);
    // The undecided atom does not matter once the other side decides.
    CHECK(holds("t <<= 1 | z + t^2 - z*(1 + t) = 0"));
}

TEST_CASE("registry and environment files")
{
    CHECK(registry().entries().size() == 2);
    CHECK_THROWS_AS(parse_registry("geo := Y1\ngeo := Y1\n", cap), ContractViolation);
    try {
        parse_registry("a := Y1\nb := Y1 +\n", cap);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK(parse_registry("x := Y1 (mod t^3)\n", std::nullopt).precision() == Precision(3));
    CHECK(parse_environment("# nothing\n", cap).empty());
}

TEST_CASE("terms agree with their composed series")
{
    Rng rng(71);
    const SeriesRegistry reg = registry();
    const std::vector<std::string> vars{"z", "one"};
    const char* samples[] = {"geo(z) * mul(z, one) - 3", "geo(geo(z)) + z*one", "mul(z + 1, one*z) * (1 - z)",
                             "-geo(z*z*z) + 1/2"};
    for (const char* text : samples) {
        TermPtr t = parse_term(text, reg, cap);
        const RestrictedSeries f = compose_series(*t, vars, reg);
        for (int i = 0; i < 5; ++i) {
            const std::vector<AdicCoeff> y{random_coeff(rng, cap), random_coeff(rng, cap)};
            Environment e{{"z", LaurentElem::from_coeff(cap, y[0])}, {"one", LaurentElem::from_coeff(cap, y[1])}};
            const LaurentElem expect = LaurentElem::from_coeff(cap, evaluate(f, y));
            const LaurentElem got = eval_term(*t, e, reg);
            CHECK(to_string(got) == to_string(expect));
        }
    }
}
