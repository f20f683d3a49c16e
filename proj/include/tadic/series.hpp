#pragma once

// Truncated restricted power series A<Y1,...,Yn> over A = Q[[t]].
//
// At precision N every restricted series is a polynomial over A/t^N, so a
// RestrictedSeries is a sparse map from exponent vectors to nonzero
// AdicCoeffs.  Iteration order is graded-lexicographic (ascending); the
// printer walks it in reverse so the leading term comes first.

#include "tadic/coeff.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tadic {

class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0u) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

    std::uint64_t total_degree() const;
    bool is_one() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

// Total degree first, then lexicographic with Y1 most significant.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Plain lexicographic order on exponent vectors (Y1 most significant).
bool lex_less(const Monomial& a, const Monomial& b);

// A polynomial over the residue field Q in n variables.
class ResiduePoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    explicit ResiduePoly(std::size_t nvars) : nvars_(nvars) {}

    static ResiduePoly constant(std::size_t nvars, const Rational& c);
    static ResiduePoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // -1 for the zero polynomial.
    long total_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
    friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
    friend bool operator==(const ResiduePoly&, const ResiduePoly&) = default;

private:
    std::size_t nvars_;
    TermMap terms_;
};

ResiduePoly substitute(const ResiduePoly& f, std::span<const ResiduePoly> g);
std::string to_string(const ResiduePoly& p);

class RestrictedSeries {
public:
    using TermMap = std::map<Monomial, AdicCoeff, GradedLex>;

    RestrictedSeries(std::size_t nvars, Precision prec) : nvars_(nvars), prec_(prec) {}

    static RestrictedSeries constant(std::size_t nvars, const AdicCoeff& c);
    // Y_{i+1}; indices are zero-based.
    static RestrictedSeries variable(std::size_t nvars, std::size_t i, Precision prec);
    static RestrictedSeries term(const Monomial& m, const AdicCoeff& c);

    std::size_t nvars() const noexcept { return nvars_; }
    Precision precision() const noexcept { return prec_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // Zero when the monomial is absent.
    AdicCoeff coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const AdicCoeff& c);

    // Largest Y_n-exponent with a nonzero coefficient; -1 for zero.
    long degree_in_last() const;
    // The part of Y_n-degree exactly k, with Y_n removed (still n variables).
    RestrictedSeries coefficient_in_last(std::uint32_t k) const;

    RestrictedSeries with_precision(int m) const;
    // Embeds into more variables (dummy variables) or drops trailing unused ones.
    RestrictedSeries with_nvars(std::size_t n) const;

    RestrictedSeries operator-() const;
    RestrictedSeries& operator+=(const RestrictedSeries& g);
    RestrictedSeries& operator-=(const RestrictedSeries& g);
    RestrictedSeries& operator*=(const AdicCoeff& c);

    friend RestrictedSeries operator+(RestrictedSeries f, const RestrictedSeries& g) { return f += g; }
    friend RestrictedSeries operator-(RestrictedSeries f, const RestrictedSeries& g) { return f -= g; }
    friend RestrictedSeries operator*(const RestrictedSeries& f, const RestrictedSeries& g);
    friend RestrictedSeries operator*(RestrictedSeries f, const AdicCoeff& c) { return f *= c; }
    friend RestrictedSeries operator*(const AdicCoeff& c, RestrictedSeries f) { return f *= c; }

    friend bool operator==(const RestrictedSeries& f, const RestrictedSeries& g)
    {
        return f.nvars_ == g.nvars_ && f.prec_ == g.prec_ && f.terms_ == g.terms_;
    }

private:
    std::size_t nvars_;
    Precision prec_;
    TermMap terms_;
};

void require_compatible(const RestrictedSeries& f, const RestrictedSeries& g);

RestrictedSeries pow(const RestrictedSeries& f, unsigned e);

// min over coefficients of ord(a_nu); precision().levels() for the zero series.
int gauss_norm(const RestrictedSeries& f);

// f(g_1,...,g_m) for f in m variables and g_i in a common set of n variables.
RestrictedSeries substitute(const RestrictedSeries& f, std::span<const RestrictedSeries> g);

// sum a_nu y^nu mod t^N, with 0^0 = 1.
AdicCoeff evaluate(const RestrictedSeries& f, std::span<const AdicCoeff> y);

ResiduePoly residue_poly(const RestrictedSeries& f);

struct DivRem {
    RestrictedSeries quotient;
    RestrictedSeries remainder;
};

// Division by f in A<Y'>[Y_n], monic in Y_n with leading coefficient exactly 1.
DivRem monic_divrem(const RestrictedSeries& g, const RestrictedSeries& f);

// f(T_d(Y)) with T_d(Y) = (Y_1 + Y_n^(d^(n-1)), ..., Y_{n-1} + Y_n^d, Y_n).
RestrictedSeries td_transform(const RestrictedSeries& f, unsigned d);
RestrictedSeries td_inverse(const RestrictedSeries& f, unsigned d);

// The degree d when the residue, as a polynomial in Y_n over Q[Y'], has degree
// d and a nonzero constant leading coefficient.
std::optional<unsigned> is_regular_in_last(const RestrictedSeries& f);

// A series is a unit exactly when its residue is a nonzero constant.
bool is_unit(const RestrictedSeries& f);
RestrictedSeries invert_unit(const RestrictedSeries& f);

std::string to_string(const RestrictedSeries& f);
std::string to_literal_body(const RestrictedSeries& f);

// nvars is the highest Y index mentioned in the literal, unless a larger
// count is requested.
RestrictedSeries parse_series(std::string_view text, std::size_t min_nvars = 0);
RestrictedSeries parse_series(std::string_view text, Precision default_prec, std::size_t min_nvars = 0);

} // namespace tadic
