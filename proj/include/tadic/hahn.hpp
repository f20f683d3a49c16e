#pragma once

// Finite-support Hahn series sum c_g t^g over Q with rational exponents,
// known below a rational cutoff.

#include "tadic/coeff.hpp"
#include "tadic/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tadic {

class HahnSeries {
public:
    using TermMap = std::map<Rational, Rational>;

    // The zero series known below the cutoff.
    explicit HahnSeries(Rational cutoff) : cutoff_(std::move(cutoff)) { cutoff_.canonicalize(); }
    // Zero coefficients and terms at or above the cutoff are dropped.
    HahnSeries(const TermMap& terms, Rational cutoff);

    static HahnSeries monomial(const Rational& exponent, const Rational& c, const Rational& cutoff);
    static HahnSeries constant(const Rational& c, const Rational& cutoff) { return monomial(0, c, cutoff); }

    const TermMap& terms() const noexcept { return terms_; }
    const Rational& cutoff() const noexcept { return cutoff_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Least exponent in the support; the series must be nonzero.
    const Rational& valuation() const;
    // Largest exponent in the support; the series must be nonzero.
    const Rational& max_exponent() const;
    Rational coefficient(const Rational& e) const;
    bool in_valuation_ring() const;

    // Forgets everything at or above gamma <= cutoff.
    HahnSeries with_cutoff(const Rational& gamma) const;

    HahnSeries operator-() const;
    friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b);
    friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }
    friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);
    friend HahnSeries operator*(const Rational& c, const HahnSeries& a);
    friend bool operator==(const HahnSeries&, const HahnSeries&) = default;

private:
    TermMap terms_;
    Rational cutoff_;
};

HahnSeries pow(const HahnSeries& a, unsigned e);

// The proper truncation: terms with exponent < gamma; gamma <= cutoff.
// The cutoff is kept.
HahnSeries truncate(const HahnSeries& a, const Rational& gamma);

// The embedding of A/t^N, known below min(N, cutoff).
HahnSeries embed(const AdicCoeff& a, const Rational& cutoff);

// f(y) below cutoff; needs cutoff <= f's precision and y in the valuation
// ring.  The result is known below min(cutoff, cutoffs of y).
HahnSeries hahn_evaluate(const RestrictedSeries& f, std::span<const HahnSeries> y, const Rational& cutoff);

std::string to_string(const HahnSeries& a);
// "(cutoff g)" suffix; without it the default cutoff is used if given.
HahnSeries parse_hahn(std::string_view text, std::optional<Rational> default_cutoff = std::nullopt);

// A Q-subspace of Hahn series with a common cutoff, kept as a reduced
// echelon basis pivoted on the least exponent.
class HahnSpan {
public:
    explicit HahnSpan(Rational cutoff) : cutoff_(std::move(cutoff)) {}

    const Rational& cutoff() const noexcept { return cutoff_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    // Basis in increasing pivot order; each pivot coefficient is 1 and no
    // pivot exponent occurs in another basis vector.
    std::vector<HahnSeries> basis() const;

    // Returns true when x enlarged the span.
    bool add(const HahnSeries& x);
    bool contains(const HahnSeries& x) const;

private:
    HahnSeries::TermMap reduce(HahnSeries::TermMap x) const;

    Rational cutoff_;
    std::map<Rational, HahnSeries::TermMap> basis_;
};

struct NamedSeries {
    std::string name;
    RestrictedSeries series;
};

struct ClosureBudget {
    std::size_t max_dimension = 600;
    std::size_t max_elements = 4000;
    std::size_t max_applications = 40000;
};

struct ClosureSample {
    // Seeds, generators and registry values in enumeration order, deduplicated.
    std::vector<HahnSeries> elements;
    // Basis of the ring they generate modulo the cutoff.
    std::vector<HahnSeries> basis;

    // Elements followed by the basis: the set handed to the truncation check.
    std::vector<HahnSeries> members() const;
};

// Breadth-first sample of the closure of {0, 1, t} and the generators under
// ring operations and registry applications, to the given depth.
ClosureSample closure_sample(const std::vector<HahnSeries>& generators, const std::vector<NamedSeries>& registry,
                             unsigned depth, const Rational& cutoff, const ClosureBudget& budget = {});

struct TruncationVerdict {
    bool closed = true;
    // The offending element and the truncation point when not closed.
    std::optional<HahnSeries> element;
    std::optional<Rational> gamma;
};

// Checks that every proper truncation of every member lies in the Q-span of
// the sample, all taken below the least cutoff.
TruncationVerdict truncation_closed_on_sample(const std::vector<HahnSeries>& sample);

} // namespace tadic
