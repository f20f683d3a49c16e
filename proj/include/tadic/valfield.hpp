#pragma once

// The valued field K = Q((t)) at capped relative precision.
//
// A LaurentElem is one of
//   - an exact zero,
//   - an inexact zero O(t^beta): some element of valuation >= beta,
//   - t^v * u with u a unit of A known modulo t^rel, 1 <= rel <= cap.
// The cap is the session precision; every binary operation requires equal
// caps.  A nonzero value with rel == cap is "full" and is treated as exact
// when a relation has to be decided.

#include "tadic/coeff.hpp"

#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tadic {

class LaurentElem {
public:
    enum class Kind { exact_zero, inexact_zero, nonzero };

    explicit LaurentElem(Precision cap);  // exact zero

    static LaurentElem zero(Precision cap) { return LaurentElem(cap); }
    static LaurentElem zero_at(Precision cap, long beta);
    static LaurentElem constant(Precision cap, const Rational& c);
    static LaurentElem t_power(Precision cap, long k, const Rational& c = 1);
    // t^v * unit with unit.levels() <= cap; throws NotAUnit unless ord(unit) == 0.
    static LaurentElem from_unit(Precision cap, long v, const AdicCoeff& unit);
    // An element of A known modulo t^M (M = a.levels() <= cap).  A zero
    // becomes O(t^M).
    static LaurentElem from_coeff(Precision cap, const AdicCoeff& a);

    Precision cap() const noexcept { return cap_; }
    Kind kind() const noexcept { return kind_; }
    bool is_exact_zero() const noexcept { return kind_ == Kind::exact_zero; }
    bool is_inexact_zero() const noexcept { return kind_ == Kind::inexact_zero; }
    bool is_nonzero() const noexcept { return kind_ == Kind::nonzero; }
    bool is_full() const noexcept;

    // Nonzero only.
    long valuation() const;
    const AdicCoeff& unit() const;
    int rel() const;
    // Inexact zero only.
    long zero_bound() const;

    // Digits below this exponent are known; LONG_MAX for an exact zero.
    long abs_precision() const noexcept;
    // Coefficient of t^k; PrecisionExhausted when k >= abs_precision().
    Rational digit(long k) const;

    // The element as a member of A modulo t^m.  Requires every digit below m
    // to be known and no negative exponents.
    AdicCoeff to_coeff(int m) const;

    LaurentElem operator-() const;
    friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
    friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) { return a + (-b); }
    friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
    friend LaurentElem operator/(const LaurentElem& a, const LaurentElem& b);

    // Identical representation (used for round-trip checks, not field equality).
    friend bool same_repr(const LaurentElem& a, const LaurentElem& b);

private:
    Precision cap_;
    Kind kind_ = Kind::exact_zero;
    long val_ = 0;  // valuation, or beta for an inexact zero
    AdicCoeff unit_;
};

LaurentElem inverse(const LaurentElem& a);
LaurentElem pow(const LaurentElem& a, long e);

// a <= b in the dominance order: v(a) >= v(b).
bool preceq(const LaurentElem& a, const LaurentElem& b);
bool prec(const LaurentElem& a, const LaurentElem& b);

enum class Dominance { precedes, asymp_sim, asymp_not_sim, succeeds };
Dominance dominance(const LaurentElem& a, const LaurentElem& b);
bool asymp(const LaurentElem& a, const LaurentElem& b);
bool sim(const LaurentElem& a, const LaurentElem& b);

// Field equality.  False as soon as a known digit differs; true only when
// both sides are full or exact zeros.
bool equals(const LaurentElem& a, const LaurentElem& b);

// D(a, b) = a/b if a <= b and b != 0, else 0.
LaurentElem restricted_div(const LaurentElem& a, const LaurentElem& b);

struct FlaggedValue {
    LaurentElem value;
    // Set when the argument was a zero known only up to precision.
    bool inexact_zero = false;
};

FlaggedValue co(const LaurentElem& a);
FlaggedValue abs_g(const LaurentElem& a);

bool in_R(const LaurentElem& a);
bool in_maximal_ideal(const LaurentElem& a);
bool in_C(const LaurentElem& a);
bool in_G(const LaurentElem& a);

struct Membership {
    bool in_R;
    bool in_oR;
    bool in_C;
    bool in_G;
};
Membership membership(const LaurentElem& a);

struct Decomposition {
    LaurentElem co;
    LaurentElem abs_g;
    LaurentElem m;
};
// a = co * abs_g * (1 + m) with v(m) >= 1; a must be nonzero.
Decomposition decompose(const LaurentElem& a);

// For v(a) >= 1 returns r in R with a = t*r.
LaurentElem viability_witness(const LaurentElem& a);

std::string to_string(const LaurentElem& a);
// The suffix "(mod t^k)" gives the relative precision and must not exceed
// cap; without it the literal is full.  "O(t^k)" is an inexact zero.
LaurentElem parse_laurent(std::string_view text, Precision cap);

// Univariate polynomial over K, coefficients in ascending degree.
struct LaurentPoly {
    std::vector<LaurentElem> coeffs;
};
LaurentElem evaluate(const LaurentPoly& p, const LaurentElem& z);

enum class HoleVerdict { no_counterexample, violated };

struct AnnulusSpec {
    std::vector<LaurentPoly> p;
    std::vector<unsigned> l;
    std::vector<LaurentElem> pi;
    HoleVerdict holes = HoleVerdict::no_counterexample;
    // A sample point lying in two holes, when one was found.
    std::optional<LaurentElem> hole_witness;
};

// Validates the shape (monic p_i over R, positive l_i, nonzero pi_i in R) and
// records whether the holes p_i^{l_i}(z) < pi_i (i >= 1) are pairwise disjoint
// on the sample points.  An empty sample uses a default grid.
AnnulusSpec make_annulus(std::vector<LaurentPoly> p, std::vector<unsigned> l, std::vector<LaurentElem> pi,
                         const std::vector<LaurentElem>& samples = {});

bool annulus_contains(const AnnulusSpec& spec, const LaurentElem& z);

} // namespace tadic
