#pragma once

// Weierstrass division and preparation in A<Y1,...,Yn>, regularization by
// T_d, and the dominant-index normal form of a univariate series over K.

#include "tadic/series.hpp"
#include "tadic/valfield.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace tadic {

// With a seed, reducible terms are eliminated in a pseudo-random order
// instead of top Y_n-degree first.  The result does not depend on it.
struct DivisionOrder {
    std::optional<std::uint64_t> shuffle_seed;
};

DivRem weierstrass_divide(const RestrictedSeries& f, const RestrictedSeries& g, DivisionOrder order = {});

struct PreparationResult {
    RestrictedSeries unit;
    RestrictedSeries monic;
    unsigned degree;
};

PreparationResult weierstrass_prepare(const RestrictedSeries& f);

struct Regularization {
    unsigned d;
    RestrictedSeries transformed;
    unsigned degree;  // the regularity degree of f o T_d
};

// Default d is deg(residue) + 1; an explicit d must exceed deg(residue).
Regularization regularize(const RestrictedSeries& f, std::optional<unsigned> d = std::nullopt);

// The predicted regularity degree sum mu_i d^(n-i) for the lex-largest
// exponent mu of the residue.
std::uint64_t regularity_degree_formula(const RestrictedSeries& f, unsigned d);

// f = t^k * f' with residue(f') != 0; f' is returned at precision N - k.
struct StrippedSeries {
    int k;
    RestrictedSeries rest;
};
StrippedSeries strip_t(const RestrictedSeries& f);

// c0 * h in K<Y>, h in one variable.
struct KSeries {
    LaurentElem c0;
    RestrictedSeries h;
};

// A series literal that may carry negative t-exponents.  With vmin the least
// t-exponent present, c0 = t^vmin and h = t^-vmin * g at the literal's
// precision.
KSeries parse_kseries(std::string_view text);

struct UnivariateNormalForm {
    unsigned mu;
    LaurentElem scale;
    // Both at precision N - gamma, gamma the least order among h's coefficients.
    RestrictedSeries unit;
    RestrictedSeries monic;
};

// g = scale * unit * monic with monic of degree mu.
UnivariateNormalForm univariate_normalize(const KSeries& g);

// Recomputes h from the normal form at h's precision and compares.
bool normal_form_reproduces(const KSeries& g, const UnivariateNormalForm& nf);

} // namespace tadic
