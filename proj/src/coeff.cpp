#include "tadic/coeff.hpp"

#include "literal.hpp"
#include "tadic/error.hpp"

#include <algorithm>
#include <utility>

namespace tadic {

Precision::Precision(int levels) : levels_(levels)
{
    if (levels < 1)
        throw ContractViolation("precision must be at least 1, got " + std::to_string(levels));
}

AdicCoeff::AdicCoeff(Precision prec) : digits_(static_cast<std::size_t>(prec.levels())) {}

AdicCoeff::AdicCoeff(Precision prec, std::vector<Rational> digits) : digits_(std::move(digits))
{
    digits_.resize(static_cast<std::size_t>(prec.levels()));
}

AdicCoeff AdicCoeff::constant(Precision prec, const Rational& c)
{
    AdicCoeff a(prec);
    a.digits_[0] = c;
    return a;
}

AdicCoeff AdicCoeff::monomial(Precision prec, int k, const Rational& c)
{
    AdicCoeff a(prec);
    if (k < 0)
        throw ContractViolation("negative t-exponent in A/t^N");
    if (k < prec.levels())
        a.digits_[static_cast<std::size_t>(k)] = c;
    return a;
}

int AdicCoeff::ord() const
{
    for (std::size_t k = 0; k < digits_.size(); ++k)
        if (sgn(digits_[k]) != 0)
            return static_cast<int>(k);
    return levels();
}

bool AdicCoeff::is_zero() const
{
    return std::all_of(digits_.begin(), digits_.end(), [](const Rational& d) { return sgn(d) == 0; });
}

bool AdicCoeff::is_constant() const
{
    return std::all_of(digits_.begin() + 1, digits_.end(), [](const Rational& d) { return sgn(d) == 0; });
}

AdicCoeff AdicCoeff::with_precision(int m) const
{
    Precision p(m);
    std::vector<Rational> d(digits_.begin(), digits_.begin() + std::min<std::ptrdiff_t>(m, levels()));
    return AdicCoeff(p, std::move(d));
}

AdicCoeff AdicCoeff::divided_by_t_power(int k) const
{
    if (k < 0 || k > ord() || k >= levels())
        throw ContractViolation("cannot divide by t^" + std::to_string(k));
    std::vector<Rational> d(digits_.begin() + k, digits_.end());
    return AdicCoeff(Precision(levels() - k), std::move(d));
}

AdicCoeff AdicCoeff::times_t_power(int k) const
{
    if (k < 0)
        throw ContractViolation("negative shift");
    AdicCoeff r(precision());
    for (int i = 0; i + k < levels(); ++i)
        r.digits_[static_cast<std::size_t>(i + k)] = digits_[static_cast<std::size_t>(i)];
    return r;
}

void require_same_precision(const AdicCoeff& a, const AdicCoeff& b)
{
    if (a.levels() != b.levels())
        throw ContractViolation("mixed precisions: t^" + std::to_string(a.levels()) + " vs t^"
                                + std::to_string(b.levels()));
}

AdicCoeff AdicCoeff::operator-() const
{
    AdicCoeff r = *this;
    for (auto& d : r.digits_)
        d = -d;
    return r;
}

AdicCoeff& AdicCoeff::operator+=(const AdicCoeff& b)
{
    require_same_precision(*this, b);
    for (std::size_t k = 0; k < digits_.size(); ++k)
        if (sgn(b.digits_[k]) != 0)
            digits_[k] += b.digits_[k];
    return *this;
}

AdicCoeff& AdicCoeff::operator-=(const AdicCoeff& b)
{
    require_same_precision(*this, b);
    for (std::size_t k = 0; k < digits_.size(); ++k)
        if (sgn(b.digits_[k]) != 0)
            digits_[k] -= b.digits_[k];
    return *this;
}

AdicCoeff operator*(const AdicCoeff& a, const AdicCoeff& b)
{
    require_same_precision(a, b);
    const int n = a.levels();
    AdicCoeff r(a.precision());
    const int oa = a.ord();
    const int ob = b.ord();
    Rational tmp;
    for (int i = oa; i < n; ++i) {
        const Rational& ai = a.digits_[static_cast<std::size_t>(i)];
        if (sgn(ai) == 0)
            continue;
        for (int j = ob; i + j < n; ++j) {
            const Rational& bj = b.digits_[static_cast<std::size_t>(j)];
            if (sgn(bj) == 0)
                continue;
            tmp = ai * bj;
            r.digits_[static_cast<std::size_t>(i + j)] += tmp;
        }
    }
    return r;
}

AdicCoeff& AdicCoeff::operator*=(const AdicCoeff& b)
{
    *this = *this * b;
    return *this;
}

AdicCoeff& AdicCoeff::operator*=(const Rational& c)
{
    for (auto& d : digits_)
        if (sgn(d) != 0)
            d *= c;
    return *this;
}

AdicCoeff invert_unit(const AdicCoeff& a)
{
    if (!a.is_unit())
        throw NotAUnit("not a unit of A/t^" + std::to_string(a.levels()) + ": " + to_string(a));
    // Digit recursion for b with a*b = 1: b_k = -(sum_{i>=1} a_i b_{k-i}) / a_0.
    const int n = a.levels();
    std::vector<Rational> b(static_cast<std::size_t>(n));
    const Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (int k = 1; k < n; ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i)
            if (sgn(a[i]) != 0)
                s += a[i] * b[static_cast<std::size_t>(k - i)];
        b[static_cast<std::size_t>(k)] = -s * inv0;
    }
    return AdicCoeff(a.precision(), std::move(b));
}

AdicCoeff pow(const AdicCoeff& a, unsigned e)
{
    AdicCoeff result = AdicCoeff::constant(a.precision(), 1);
    AdicCoeff base = a;
    while (e != 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e != 0)
            base *= base;
    }
    return result;
}

std::string to_literal_body(const AdicCoeff& a)
{
    std::vector<detail::SignedTerm> terms;
    for (int k = 0; k < a.levels(); ++k)
        if (sgn(a[k]) != 0)
            terms.push_back(detail::make_term(a[k], detail::t_power_text(Rational(k))));
    return detail::join_terms(terms);
}

std::string to_string(const AdicCoeff& a)
{
    return to_literal_body(a) + " (mod t^" + std::to_string(a.levels()) + ")";
}

namespace {

AdicCoeff coeff_from_literal(const detail::ParsedLiteral& lit, std::optional<Precision> fallback)
{
    if (lit.big_o)
        throw ParseError("O(t^k) is not a coefficient literal", 1, 1);
    std::optional<int> mod = detail::mod_suffix(lit);
    if (mod && fallback && *mod != fallback->levels())
        throw ContractViolation("literal precision t^" + std::to_string(*mod)
                                + " does not match session precision t^"
                                + std::to_string(fallback->levels()));
    if (!mod && !fallback)
        throw ParseError("missing '(mod t^N)' suffix", 1, 1);
    Precision prec(mod ? *mod : fallback->levels());
    if (lit.poly.max_var != 0)
        throw ParseError("coefficient literal must not mention Y-variables", 1, 1);
    AdicCoeff out(prec);
    std::vector<Rational> digits(static_cast<std::size_t>(prec.levels()));
    auto it = lit.poly.terms.find({});
    if (it != lit.poly.terms.end()) {
        for (const auto& [e, c] : it->second) {
            int k = detail::integer_exponent(e, "coefficient");
            if (k < 0)
                throw ParseError("negative t-exponent in a coefficient literal", 1, 1);
            if (k < prec.levels())
                digits[static_cast<std::size_t>(k)] = c;
        }
    }
    return AdicCoeff(prec, std::move(digits));
}

} // namespace

AdicCoeff parse_coeff(std::string_view text)
{
    return coeff_from_literal(detail::parse_literal(text), std::nullopt);
}

AdicCoeff parse_coeff(std::string_view text, Precision default_prec)
{
    return coeff_from_literal(detail::parse_literal(text), default_prec);
}

} // namespace tadic
