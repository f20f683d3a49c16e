#pragma once

// Shared reader/writer for the text literals of coefficients, series,
// Laurent elements and Hahn series.  All of them are sums of products of
// rationals, t-powers and Y-variables followed by an optional suffix.

#include "tadic/coeff.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tadic::detail {

// t-exponent -> nonzero coefficient.
using TermMap = std::map<Rational, Rational>;

struct LiteralPoly {
    // Y-exponent vector (trailing zeros trimmed) -> coefficient in t.
    std::map<std::vector<unsigned>, TermMap> terms;
    // Highest Y index mentioned in the text, even if its terms cancelled.
    int max_var = 0;
};

enum class SuffixKind { none, mod, cutoff };

struct ParsedLiteral {
    LiteralPoly poly;
    SuffixKind suffix = SuffixKind::none;
    Rational suffix_value;
    // "O(t^k)": a zero known only up to t^k.
    std::optional<Rational> big_o;
};

ParsedLiteral parse_literal(std::string_view text);

// Helpers for converting a parsed literal; they raise ParseError at (1,1)
// with the given message on shape mismatches.
int integer_exponent(const Rational& e, std::string_view what);
std::optional<int> mod_suffix(const ParsedLiteral& lit);

// "t", "t^3", "t^-2", "t^{1/2}"; empty for exponent 0.
std::string t_power_text(const Rational& e);

struct SignedTerm {
    bool negative = false;
    std::string text;
};

// |c| times a unit-coefficient body; the body may be empty.
SignedTerm make_term(const Rational& c, const std::string& body);
// "a - b + c", or "0" when empty.
std::string join_terms(const std::vector<SignedTerm>& terms);

} // namespace tadic::detail
