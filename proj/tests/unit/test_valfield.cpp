#include "tadic/error.hpp"
#include "tadic/valfield.hpp"

#include "support/random.hpp"

#include <doctest.h>

using namespace tadic;
using namespace tadic::testing;

namespace {

const Precision cap(6);

LaurentElem k(const char* text)
{
    return parse_laurent(text, cap);
}

bool same(const LaurentElem& a, const LaurentElem& b)
{
    return same_repr(a, b);
}

} // namespace

TEST_CASE("field operations")
{
    CHECK(same(k("t^2") * k("t^-1"), k("t")));
    // Cancelling the constant digit costs one level of relative precision.
    CHECK(same(k("1 + t") - k("1"), k("t (mod t^5)")));
    const LaurentElem z = k("t + t^2") - k("t") * k("1 + t");
    CHECK(z.is_inexact_zero());
    CHECK(z.zero_bound() == 7);
    CHECK(same(inverse(k("1 - t")), k("1 + t + t^2 + t^3 + t^4 + t^5")));
    CHECK_THROWS_AS(inverse(z), DivisionByZeroAtPrecision);
    CHECK_THROWS_AS(k("1") + parse_laurent("1", Precision(3)), ContractViolation);
}

TEST_CASE("relative precision after cancellation")
{
    const LaurentElem d = k("1 + t + 2*t^5") - k("1");
    REQUIRE(d.is_nonzero());
    CHECK(d.valuation() == 1);
    CHECK(d.rel() == 5);
    CHECK_FALSE(d.is_full());
    CHECK(to_string(d) == "t*(1 + 2*t^4) (mod t^5)");
}

TEST_CASE("dominance")
{
    CHECK(dominance(k("t"), k("t^2")) == Dominance::succeeds);
    CHECK(preceq(k("t^2"), k("t")));
    CHECK(dominance(k("2*t"), k("3*t")) == Dominance::asymp_not_sim);
    CHECK(dominance(k("t + t^3"), k("t")) == Dominance::asymp_sim);
    CHECK(preceq(k("0"), k("t")));
    CHECK_FALSE(preceq(k("t"), k("0")));
    CHECK(preceq(k("0"), k("0")));
    CHECK_THROWS_AS(preceq(k("O(t^3)"), k("t^5")), PrecisionExhausted);
    CHECK(preceq(k("O(t^3)"), k("t^2")));
}

TEST_CASE("restricted division")
{
    CHECK(same(restricted_div(k("t^3"), k("t")), k("t^2")));
    CHECK(restricted_div(k("t"), k("t^3")).is_exact_zero());
    CHECK(restricted_div(k("0"), k("t")).is_exact_zero());
    CHECK(restricted_div(k("t"), k("0")).is_exact_zero());
}

TEST_CASE("co and abs")
{
    const LaurentElem a = k("3*t^-2 + 5*t^-1");
    CHECK(same(abs_g(a).value, k("t^-2")));
    CHECK(same(co(a).value, k("3")));
    CHECK(abs_g(k("0")).value.is_exact_zero());
    CHECK(co(k("0")).value.is_exact_zero());
    CHECK_FALSE(co(k("0")).inexact_zero);
    CHECK(co(k("O(t^2)")).inexact_zero);
    CHECK(same(co(k("2*t") * k("3*t^-1")).value, k("6")));
}

TEST_CASE("membership")
{
    Membership t = membership(k("t"));
    CHECK(t.in_R);
    CHECK(t.in_oR);
    CHECK_FALSE(t.in_C);
    CHECK(t.in_G);
    CHECK_FALSE(in_G(k("2*t")));
    Membership five = membership(k("5"));
    CHECK(five.in_R);
    CHECK_FALSE(five.in_oR);
    CHECK(five.in_C);
    CHECK_FALSE(five.in_G);
    CHECK_THROWS_AS(in_C(k("5 (mod t^2)")), PrecisionExhausted);
    CHECK_FALSE(in_C(k("5 + t (mod t^2)")));
}

TEST_CASE("equality at precision")
{
    CHECK(equals(k("1 + t"), k("1 + t")));
    CHECK_FALSE(equals(k("1 + t"), k("1 - t")));
    CHECK_THROWS_AS(equals(k("1 (mod t^2)"), k("1")), PrecisionExhausted);
    CHECK_FALSE(equals(k("1 (mod t^2)"), k("2")));
}

TEST_CASE("decomposition")
{
    Decomposition d = decompose(k("-2*t^3 + t^4"));
    CHECK(same(d.co, k("-2")));
    CHECK(same(d.abs_g, k("t^3")));
    CHECK(same(d.m, k("-1/2*t (mod t^5)")));
    CHECK(decompose(k("7*t^-1")).m.is_exact_zero());
    CHECK_THROWS_AS(decompose(k("0")), ContractViolation);
}

TEST_CASE("viability witness")
{
    CHECK(same(viability_witness(k("t^3 + t^4")), k("t^2 + t^3")));
    CHECK_THROWS_AS(viability_witness(k("1")), ContractViolation);
}

TEST_CASE("literals")
{
    for (const char* text : {"0", "O(t^3)", "1 - t (mod t^6)", "t^-2*(3 + 5*t) (mod t^6)", "-1/2*t^4 (mod t^2)",
                             "t*(1 + 2*t^4) (mod t^5)"})
        CHECK(to_string(k(text)) == text);
    CHECK_THROWS_AS(k("1 (mod t^7)"), ContractViolation);
    CHECK_THROWS_AS(k("1 + t^2 (mod t^2)"), ContractViolation);
    CHECK_THROWS_AS(k("t^{1/2}"), ParseError);
    CHECK_THROWS_AS(k("Y1"), ParseError);
}

TEST_CASE("annuli")
{
    const LaurentPoly z{{k("0"), k("1")}};
    const LaurentPoly zm1{{k("-1"), k("1")}};

    AnnulusSpec whole = make_annulus({z}, {1}, {k("1")});
    CHECK(annulus_contains(whole, k("t")));
    CHECK(annulus_contains(whole, k("1")));

    AnnulusSpec ring = make_annulus({z, z}, {1, 1}, {k("1"), k("t")});
    CHECK(annulus_contains(ring, k("t")));
    CHECK_FALSE(annulus_contains(ring, k("t^2")));

    AnnulusSpec near_one = make_annulus({zm1}, {1}, {k("t")});
    CHECK(annulus_contains(near_one, k("1 + t^2")));
    CHECK_FALSE(annulus_contains(near_one, k("0")));

    AnnulusSpec overlap = make_annulus({z, z, z}, {1, 1, 1}, {k("1"), k("t"), k("t^2")});
    CHECK(overlap.holes == HoleVerdict::violated);
    CHECK(overlap.hole_witness.has_value());
    CHECK(ring.holes == HoleVerdict::no_counterexample);

    CHECK_THROWS_AS(make_annulus({LaurentPoly{{k("0"), k("2")}}}, {1}, {k("1")}), ContractViolation);
    CHECK_THROWS_AS(make_annulus({z}, {0}, {k("1")}), ContractViolation);
    CHECK_THROWS_AS(make_annulus({z}, {1}, {k("t^-1")}), ContractViolation);
    CHECK_THROWS_AS(annulus_contains(whole, k("t^-1")), ContractViolation);
}

TEST_CASE("valuation laws on random elements")
{
    Rng rng(51);
    for (int i = 0; i < 200; ++i) {
        const LaurentElem a = random_laurent(rng, cap);
        const LaurentElem b = random_laurent(rng, cap);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        const LaurentElem s = a + b;
        if (a.valuation() != b.valuation())
            CHECK(s.valuation() == std::min(a.valuation(), b.valuation()));
        else if (!s.is_inexact_zero())
            CHECK(s.valuation() >= a.valuation());
        CHECK(equals(a / b * b, a));
        CHECK(same(parse_laurent(to_string(a), cap), a));
        CHECK(same(parse_laurent(to_string(s), cap), s));
    }
}
