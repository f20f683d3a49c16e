#include "tadic/error.hpp"
#include "tadic/hensel.hpp"

#include "support/oracles.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace tadic;
using namespace tadic::testing;

namespace {

AdicCoeff c(const char* text, int n)
{
    return parse_coeff(text, Precision(n));
}

} // namespace

TEST_CASE("special polynomial")
{
    const std::vector<AdicCoeff> one{c("1", 4)};
    CHECK(solve_special(c("t", 4), one) == c("-1 - t - 2*t^2 - 5*t^3", 4));
    CHECK(solve_special(c("0", 4), one) == c("-1", 4));
    const std::vector<AdicCoeff> none{c("0", 4)};
    CHECK(solve_special(c("t", 4), none) == c("-1", 4));
    CHECK_THROWS_AS(solve_special(c("1", 4), one), ContractViolation);
}

TEST_CASE("special polynomial: both constructions agree")
{
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        const Precision p(uniform(rng, 1, 10));
        const AdicCoeff e = random_small(rng, p);
        std::vector<AdicCoeff> a;
        for (int k = uniform(rng, 0, 3); k >= 0; --k)
            a.push_back(random_coeff(rng, p));
        const AdicCoeff y = solve_special(e, a);
        CHECK(y == solve_special_fixed_point(e, a));
        // 1 + y + sum e a_i y^i = 0
        AdicCoeff v = AdicCoeff::constant(p, 1) + y;
        for (std::size_t k = 0; k < a.size(); ++k)
            v += e * a[k] * pow(y, static_cast<unsigned>(k + 2));
        CHECK(v.is_zero());
    }
}

TEST_CASE("Newton lifting examples")
{
    CHECK(hensel_root(parse_poly1("-1 - t, 0, 1", Precision(4)), c("1", 4))
          == c("1 + 1/2*t - 1/8*t^2 + 1/16*t^3", 4));
    CHECK(hensel_root(parse_poly1("-1 - t, 0, 0, 1", Precision(3)), c("1", 3)) == c("1 + 1/3*t - 1/9*t^2", 3));
    CHECK(hensel_root(parse_poly1("-2 - t, 1", Precision(3)), c("2 + t^2", 3)) == c("2 + t", 3));
    CHECK_THROWS_AS(hensel_root(parse_poly1("-1, 0, 1", Precision(3)), c("2", 3)), NotHenselianInstance);
    CHECK_THROWS_AS(hensel_root(parse_poly1("t, 0, 1", Precision(3)), c("0", 3)), NotHenselianInstance);
}

TEST_CASE("quadratic lifting examples")
{
    const Poly1 p4 = parse_poly1("t, -1, 1", Precision(4));
    CHECK(hensel_root_quadratic(p4, c("0", 4), c("t", 4)) == c("t + t^2 + 2*t^3", 4));
    const Poly1 p3 = parse_poly1("t, -1, 1", Precision(3));
    CHECK(hensel_root_quadratic(p3, c("1", 3), c("t", 3)) == c("1 - t - t^2", 3));
    const Poly1 root = parse_poly1("-1, 1", Precision(3));
    CHECK(hensel_root_quadratic(root, c("1", 3), c("0", 3)) == c("1", 3));
    CHECK_THROWS_AS(hensel_root_quadratic(p3, c("0", 3), c("t^2", 3)), NotHenselianInstance);
}

TEST_CASE("Taylor coefficients")
{
    const Poly1 p = parse_poly1("1, 2, 3", Precision(3));
    const AdicCoeff a = c("1 + t", 3);
    const std::vector<AdicCoeff> tc = p.taylor(a);
    const AdicCoeff x = c("t^2 - 2", 3);
    AdicCoeff sum(Precision(3));
    for (std::size_t i = 0; i < tc.size(); ++i)
        sum += tc[i] * pow(x, static_cast<unsigned>(i));
    CHECK(sum == p(a + x));
    CHECK(p.derivative()(a) == tc[1]);
}

TEST_CASE("poly literals")
{
    const Poly1 p = parse_poly1("-1 - t, 0, 1, 0", Precision(3));
    CHECK(p.degree() == 2);
    CHECK(to_string(p) == "-1 - t, 0, 1");
    try {
        parse_poly1("1, 2 +, 3", Precision(3));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() > 4);
    }
}

TEST_CASE("random henselian instances")
{
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        const Precision prec(uniform(rng, 1, 12));
        std::vector<AdicCoeff> cs;
        for (int k = uniform(rng, 1, 4); k >= 0; --k)
            cs.push_back(random_coeff(rng, prec));
        const AdicCoeff a = random_coeff(rng, prec);
        Poly1 p(prec, cs);
        cs[0] -= AdicCoeff::constant(prec, p(a).residue());
        p = Poly1(prec, cs);
        if (p.degree() < 1 || !p.derivative()(a).is_unit())
            continue;
        const AdicCoeff b = hensel_root(p, a);
        CHECK(p(b).is_zero());
        CHECK((b - a).ord() >= 1);
    }
}
