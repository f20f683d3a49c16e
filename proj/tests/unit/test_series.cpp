#include "tadic/error.hpp"
#include "tadic/series.hpp"

#include "support/oracles.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace tadic;
using namespace tadic::testing;

namespace {

RestrictedSeries s(const char* text, int n, std::size_t nvars = 0)
{
    return parse_series(text, Precision(n), nvars);
}

AdicCoeff c(const char* text, int n)
{
    return parse_coeff(text, Precision(n));
}

} // namespace

TEST_CASE("products")
{
    CHECK(s("Y1 + t", 4) * s("Y1 - t", 4) == s("Y1^2 - t^2", 4));
    CHECK(s("t*Y1", 5) * s("t^4*Y1", 5) == RestrictedSeries(1, Precision(5)));
    CHECK(s("Y1*Y2 + 1", 3) + RestrictedSeries(2, Precision(3)) == s("Y1*Y2 + 1", 3));
}

TEST_CASE("gauss_norm")
{
    CHECK(gauss_norm(s("t^2*Y1 + t^3", 5)) == 2);
    CHECK(gauss_norm(s("Y1 + t", 5)) == 0);
    CHECK(gauss_norm(RestrictedSeries(1, Precision(5))) == 5);
}

TEST_CASE("substitute")
{
    const RestrictedSeries sq = s("Y1^2", 4);
    const std::vector<RestrictedSeries> g{s("Y1 + t", 4)};
    CHECK(substitute(sq, g) == s("Y1^2 + 2*t*Y1 + t^2", 4));

    const RestrictedSeries f = s("1 + 2*Y1*Y2 - t*Y2^3", 4);
    const std::vector<RestrictedSeries> id{s("Y1", 4, 2), s("Y2", 4)};
    CHECK(substitute(f, id) == f);

    const RestrictedSeries geo = s("1 + t*Y1 + t^2*Y1^2", 3);
    const std::vector<RestrictedSeries> sum{s("Y1 + Y2", 3)};
    CHECK(substitute(geo, sum) == s("1 + t*(Y1 + Y2) + t^2*(Y1^2 + 2*Y1*Y2 + Y2^2)", 3));
}

TEST_CASE("evaluate")
{
    const std::vector<AdicCoeff> at_t{c("t", 4)};
    CHECK(evaluate(s("Y1^2 + t", 4), at_t) == c("t^2 + t", 4));

    const std::vector<AdicCoeff> one{c("1", 4)};
    CHECK(evaluate(s("1 + t*Y1 + t^2*Y1^2 + t^3*Y1^3", 4), one) == c("1 + t + t^2 + t^3", 4));

    const std::vector<AdicCoeff> zero{c("0", 4), c("0", 4)};
    CHECK(evaluate(s("2 - t + Y1*Y2", 4), zero) == c("2 - t", 4));
}

TEST_CASE("residue_poly")
{
    CHECK(residue_poly(s("Y1 + t*Y2", 3)) == residue_poly(s("Y1", 3, 2)));
    CHECK(residue_poly(s("t*Y1^2 + t^2", 3)).is_zero());
    CHECK(to_string(residue_poly(s("(1 + t)*Y1*Y2 + 2", 3))) == "Y1*Y2 + 2");
}

TEST_CASE("monic_divrem")
{
    DivRem a = monic_divrem(s("Y2^2*Y1", 3), s("Y2^2 + Y1", 3));
    CHECK(a.quotient == s("Y1", 3, 2));
    CHECK(a.remainder == s("-Y1^2", 3, 2));

    DivRem b = monic_divrem(s("Y1^3", 3), s("Y1^2 + t", 3));
    CHECK(b.quotient == s("Y1", 3));
    CHECK(b.remainder == s("-t*Y1", 3));

    DivRem low = monic_divrem(s("Y1 + 3", 3), s("Y1^2 + t", 3));
    CHECK(low.quotient.is_zero());
    CHECK(low.remainder == s("Y1 + 3", 3));

    CHECK_THROWS_AS(monic_divrem(s("Y1", 3), s("2*Y1 + 1", 3)), NotMonic);
    CHECK_THROWS_AS(monic_divrem(s("Y1", 3), s("(1 + t)*Y1 + 1", 3)), NotMonic);
}

TEST_CASE("td_transform")
{
    CHECK(td_transform(s("Y1", 3, 2), 2) == s("Y1 + Y2^2", 3));
    CHECK(td_transform(s("Y1*Y2", 3), 3) == s("Y1*Y2 + Y2^4", 3));
    const RestrictedSeries f = s("1 + t*Y1^2*Y3 - Y2 + Y3^2", 4);
    CHECK(td_inverse(td_transform(f, 3), 3) == f);
}

TEST_CASE("is_regular_in_last")
{
    CHECK(is_regular_in_last(s("t*Y1^2 + Y1 + t", 4)) == 1u);
    CHECK_FALSE(is_regular_in_last(s("Y1*Y2", 4)));
    CHECK_FALSE(is_regular_in_last(s("t*Y1 + t", 4)));
    CHECK(is_regular_in_last(s("3*Y2^2 + Y1*Y2 + t*Y2^5", 4)) == 2u);
}

TEST_CASE("units")
{
    CHECK(is_unit(s("2 + t*Y1", 4)));
    CHECK_FALSE(is_unit(s("2 + Y1", 4)));
    const RestrictedSeries u = s("2 + t*Y1 - t^2*Y2", 4);
    CHECK(u * invert_unit(u) == s("1", 4, 2));
}

TEST_CASE("literals")
{
    CHECK(to_string(s("(1 + t)*Y1 - t", 4)) == "(1 + t)*Y1 - t (mod t^4)");
    CHECK(to_string(s("Y2^2 + t*Y1 + 3", 2)) == "Y2^2 + t*Y1 + 3 (mod t^2)");
    CHECK(parse_series("Y1 (mod t^3)", 3).nvars() == 3);
    CHECK_THROWS_AS(parse_series("Y1"), ParseError);
    CHECK_THROWS_AS(parse_series("t^-1*Y1 (mod t^3)"), ParseError);
    CHECK_THROWS_AS(parse_series("Y0 (mod t^3)"), ParseError);
    CHECK(parse_series("t^3*Y1 + (1 + t)*(1 + t) (mod t^2)") == s("1 + 2*t", 2, 1));
}

TEST_CASE("arithmetic agrees with the dense oracle")
{
    Rng rng(21);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        const Precision p(uniform(rng, 1, 8));
        const RestrictedSeries f = random_series(rng, n, p, 4, 5);
        const RestrictedSeries g = random_series(rng, n, p, 4, 5);
        const std::size_t prec = static_cast<std::size_t>(p.levels());
        CHECK(dense_equal(to_dense(f * g), dense_mul(to_dense(f), to_dense(g), prec)));
        CHECK(dense_equal(to_dense(f + g), dense_add(to_dense(f), to_dense(g))));

        std::vector<AdicCoeff> y;
        std::vector<Digits> yd;
        for (std::size_t k = 0; k < n; ++k) {
            y.push_back(random_coeff(rng, p));
            yd.push_back(digits_of(y.back()));
        }
        CHECK(digits_of(evaluate(f, y)) == dense_evaluate(to_dense(f), yd, prec));
        CHECK(parse_series(to_string(f), n) == f);
        CHECK(gauss_norm(f * g) >= std::min(p.levels(), gauss_norm(f) + gauss_norm(g)));
    }
}
