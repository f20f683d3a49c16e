#include "tadic/coeff.hpp"
#include "tadic/error.hpp"

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

TEST_CASE("ring operations truncate at the precision")
{
    CHECK(c("1 + t", 3) * c("1 - t", 3) == c("1 - t^2", 3));
    CHECK(c("1 + t", 2) * c("1 + t", 2) == c("1 + 2*t", 2));
    CHECK(c("1/2 + t", 3) + AdicCoeff(Precision(3)) == c("1/2 + t", 3));
    CHECK(c("t^2", 3) * c("t", 3) == AdicCoeff(Precision(3)));
}

TEST_CASE("ord")
{
    CHECK(c("t^2 + t^3", 5).ord() == 2);
    CHECK(AdicCoeff(Precision(5)).ord() == 5);
    CHECK(c("3", 5).ord() == 0);
}

TEST_CASE("invert_unit")
{
    CHECK(invert_unit(c("1 - t", 3)) == c("1 + t + t^2", 3));
    CHECK(invert_unit(c("1", 4)) == c("1", 4));
    CHECK(invert_unit(c("2 + t", 2)) == c("1/2 - 1/4*t", 2));
    CHECK_THROWS_AS(invert_unit(c("t", 3)), NotAUnit);
}

TEST_CASE("residue")
{
    CHECK(c("3 + 5*t", 3).residue() == 3);
    CHECK(c("t", 3).residue() == 0);
    CHECK(AdicCoeff(Precision(3)).residue() == 0);
}

TEST_CASE("mixed precision is rejected")
{
    CHECK_THROWS_AS(c("1", 2) + c("1", 3), ContractViolation);
    CHECK_THROWS_AS(c("1", 2) * c("1", 3), ContractViolation);
}

TEST_CASE("shifts and precision changes")
{
    const AdicCoeff a = c("t^2 + 3*t^4", 6);
    CHECK(a.divided_by_t_power(2) == c("1 + 3*t^2", 4));
    CHECK(a.times_t_power(2) == c("t^4", 6));
    CHECK(a.with_precision(3) == c("t^2", 3));
    CHECK(a.with_precision(8) == c("t^2 + 3*t^4", 8));
    CHECK_THROWS_AS(a.divided_by_t_power(3), ContractViolation);
}

TEST_CASE("literals")
{
    CHECK(to_string(c("1 - 1/2*t + 3*t^2", 3)) == "1 - 1/2*t + 3*t^2 (mod t^3)");
    CHECK(to_string(AdicCoeff(Precision(2))) == "0 (mod t^2)");
    CHECK(parse_coeff("2*t (mod t^4)") == c("2*t", 4));
    CHECK_THROWS_AS(parse_coeff("1 + t"), ParseError);
    CHECK_THROWS_AS(parse_coeff("1 (mod t^3)", Precision(4)), ContractViolation);
    CHECK_THROWS_AS(parse_coeff("1 + t^-1 (mod t^3)"), ParseError);
    CHECK_THROWS_AS(parse_coeff("1 + Y1 (mod t^3)"), ParseError);
    CHECK_THROWS(parse_coeff("1 +", Precision(2)));
}

TEST_CASE("properties on random elements")
{
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Precision p(uniform(rng, 1, 12));
        const AdicCoeff a = random_coeff(rng, p);
        const AdicCoeff b = random_coeff(rng, p);
        const std::size_t n = static_cast<std::size_t>(p.levels());

        CHECK(digits_of(a * b) == convolve(digits_of(a), digits_of(b), n));
        CHECK((a + b).ord() >= std::min(a.ord(), b.ord()));
        if (a.ord() != b.ord())
            CHECK((a + b).ord() == std::min(a.ord(), b.ord()));
        CHECK((a * b).ord() >= std::min(p.levels(), a.ord() + b.ord()));
        CHECK(parse_coeff(to_string(a)) == a);

        const AdicCoeff u = random_unit(rng, p);
        CHECK(u * invert_unit(u) == AdicCoeff::constant(p, 1));
        CHECK(pow(u, 3) == u * u * u);
    }
}
