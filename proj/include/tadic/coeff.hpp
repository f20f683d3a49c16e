#pragma once

// Exact arithmetic in A/t^N for A = Q[[t]].
//
// An AdicCoeff is a dense vector of N rational t-digits.  The ultranorm
// |a| = delta^ord(a) is never materialized; every norm statement is made on
// the integer exponent ord(a), with ord(0) = N acting as the ">= N" sentinel.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tadic {

using Rational = mpq_class;

// Number of t-adic levels a value is known to: computations are mod t^N.
class Precision {
public:
    explicit Precision(int levels);

    int levels() const noexcept { return levels_; }

    friend bool operator==(Precision, Precision) = default;
    friend auto operator<=>(Precision, Precision) = default;

private:
    int levels_;
};

class AdicCoeff {
public:
    explicit AdicCoeff(Precision prec);
    // Digits beyond the precision are dropped, missing digits are zero.
    AdicCoeff(Precision prec, std::vector<Rational> digits);

    static AdicCoeff constant(Precision prec, const Rational& c);
    // c * t^k (zero when k >= N).
    static AdicCoeff monomial(Precision prec, int k, const Rational& c = 1);

    Precision precision() const noexcept { return Precision(static_cast<int>(digits_.size())); }
    int levels() const noexcept { return static_cast<int>(digits_.size()); }

    const Rational& operator[](int k) const { return digits_[static_cast<std::size_t>(k)]; }
    std::span<const Rational> digits() const noexcept { return digits_; }

    // Least k with a nonzero digit, or levels() for zero.
    int ord() const;
    bool is_zero() const;
    bool is_unit() const { return sgn(digits_[0]) != 0; }
    const Rational& residue() const { return digits_[0]; }
    // True when every digit above the constant one is zero.
    bool is_constant() const;

    // Reduce to (m <= N) or embed into (m > N, zero digits) precision m.
    AdicCoeff with_precision(int m) const;
    // a / t^k for k <= ord(a); the result is known mod t^(N-k).
    AdicCoeff divided_by_t_power(int k) const;
    // a * t^k at the same precision.
    AdicCoeff times_t_power(int k) const;

    AdicCoeff operator-() const;
    AdicCoeff& operator+=(const AdicCoeff& b);
    AdicCoeff& operator-=(const AdicCoeff& b);
    AdicCoeff& operator*=(const AdicCoeff& b);
    AdicCoeff& operator*=(const Rational& c);

    friend AdicCoeff operator+(AdicCoeff a, const AdicCoeff& b) { return a += b; }
    friend AdicCoeff operator-(AdicCoeff a, const AdicCoeff& b) { return a -= b; }
    friend AdicCoeff operator*(const AdicCoeff& a, const AdicCoeff& b);
    friend AdicCoeff operator*(AdicCoeff a, const Rational& c) { return a *= c; }

    friend bool operator==(const AdicCoeff& a, const AdicCoeff& b) { return a.digits_ == b.digits_; }

private:
    std::vector<Rational> digits_;
};

// Mixed precisions are a contract violation.
void require_same_precision(const AdicCoeff& a, const AdicCoeff& b);

// Inverse of a unit of A/t^N, via the geometric series for 1 - (1 - a/c).
AdicCoeff invert_unit(const AdicCoeff& a);

AdicCoeff pow(const AdicCoeff& a, unsigned e);

// Canonical literal, e.g. "1 - 1/2*t + 3*t^2 (mod t^3)".
std::string to_string(const AdicCoeff& a);
// The same literal without the precision suffix.
std::string to_literal_body(const AdicCoeff& a);

// Parses a coefficient literal.  The "(mod t^N)" suffix is optional when a
// default precision is supplied; when both are present they must agree.
AdicCoeff parse_coeff(std::string_view text);
AdicCoeff parse_coeff(std::string_view text, Precision default_prec);

} // namespace tadic
