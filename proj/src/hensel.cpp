#include "tadic/hensel.hpp"

#include "tadic/error.hpp"

#include <algorithm>

namespace tadic {

Poly1::Poly1(Precision prec, std::vector<AdicCoeff> coeffs) : prec_(prec), coeffs_(std::move(coeffs))
{
    for (const auto& c : coeffs_)
        if (c.levels() != prec_.levels())
            throw ContractViolation("polynomial coefficient precision does not match");
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

AdicCoeff Poly1::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : AdicCoeff(prec_);
}

AdicCoeff Poly1::operator()(const AdicCoeff& x) const
{
    require_same_precision(AdicCoeff(prec_), x);
    AdicCoeff acc(prec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly1 Poly1::derivative() const
{
    std::vector<AdicCoeff> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        AdicCoeff c = coeffs_[i];
        c *= Rational(static_cast<long>(i));
        d.push_back(std::move(c));
    }
    return Poly1(prec_, std::move(d));
}

std::vector<AdicCoeff> Poly1::taylor(const AdicCoeff& a) const
{
    // P(a + x) = sum_k c_k sum_i C(k,i) a^(k-i) x^i, with binomials built by
    // Pascal's rule so no division occurs.
    const std::size_t n = coeffs_.size();
    std::vector<AdicCoeff> out(n, AdicCoeff(prec_));
    std::vector<AdicCoeff> apow{AdicCoeff::constant(prec_, 1)};
    for (std::size_t k = 1; k < n; ++k)
        apow.push_back(apow.back() * a);
    std::vector<mpz_class> row{1};
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            std::vector<mpz_class> next(k + 1, 0);
            next[0] = 1;
            next[k] = 1;
            for (std::size_t i = 1; i < k; ++i)
                next[i] = row[i - 1] + row[i];
            row = std::move(next);
        }
        for (std::size_t i = 0; i <= k; ++i) {
            AdicCoeff term = coeffs_[k] * apow[k - i];
            term *= Rational(row[i]);
            out[i] += term;
        }
    }
    return out;
}

Poly1 parse_poly1(std::string_view text, Precision prec)
{
    std::vector<AdicCoeff> cs;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        try {
            cs.push_back(parse_coeff(piece, prec));
        } catch (const ParseError& e) {
            throw ParseError("coefficient " + std::to_string(cs.size()) + ": " + e.message(), e.line(),
                             e.column() + static_cast<int>(start));
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Poly1(prec, std::move(cs));
}

std::string to_string(const Poly1& p)
{
    if (p.coeffs().empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0)
            out += ", ";
        out += to_literal_body(p.coeffs()[i]);
    }
    return out;
}

namespace {

void require_small(const AdicCoeff& e)
{
    if (e.ord() < 1)
        throw ContractViolation("e must lie in tA, got " + to_string(e));
}

// A zero of c + X + sum_{i>=2} e a_i X^i, found by writing X = -c + eY:
// the bracket in P(-c + eY) = e (b + (1 + e f) Y + sum e^2 b_j Y^j) is again
// of this shape once divided by the unit 1 + e f, with e replaced by e^2.
AdicCoeff special_zero(const AdicCoeff& c, const AdicCoeff& e, const std::vector<AdicCoeff>& a)
{
    if (e.is_zero())
        return -c;
    const Precision prec = e.precision();
    const std::size_t top = a.size() + 1;  // highest degree
    const AdicCoeff minus_c = -c;
    std::vector<AdicCoeff> mpow{AdicCoeff::constant(prec, 1)};
    for (std::size_t k = 1; k <= top; ++k)
        mpow.push_back(mpow.back() * minus_c);
    std::vector<AdicCoeff> epow{AdicCoeff::constant(prec, 1)};
    for (std::size_t k = 1; k <= top; ++k)
        epow.push_back(epow.back() * e);

    // s_j = sum_i C(i,j) a_i (-c)^(i-j), so the bracket is
    // s_0 + (1 + e s_1) Y + sum_{j>=2} e^j s_j Y^j.
    std::vector<AdicCoeff> s(top + 1, AdicCoeff(prec));
    for (std::size_t i = 2; i <= top; ++i) {
        mpz_class binom = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            AdicCoeff term = a[i - 2] * mpow[i - j];
            term *= Rational(binom);
            s[j] += term;
            binom = binom * static_cast<unsigned long>(i - j) / static_cast<unsigned long>(j + 1);
        }
    }
    const AdicCoeff unit = AdicCoeff::constant(prec, 1) + e * s[1];
    const AdicCoeff unit_inv = invert_unit(unit);
    const AdicCoeff e2 = e * e;
    std::vector<AdicCoeff> next(a.size(), AdicCoeff(prec));
    for (std::size_t j = 2; j <= top; ++j)
        next[j - 2] = epow[j - 2] * s[j] * unit_inv;
    const AdicCoeff y = special_zero(s[0] * unit_inv, e2, next);
    return -c + e * y;
}

} // namespace

AdicCoeff solve_special(const AdicCoeff& e, std::span<const AdicCoeff> a)
{
    require_small(e);
    for (const auto& ai : a)
        require_same_precision(e, ai);
    return special_zero(AdicCoeff::constant(e.precision(), 1), e, std::vector<AdicCoeff>(a.begin(), a.end()));
}

AdicCoeff solve_special_fixed_point(const AdicCoeff& e, std::span<const AdicCoeff> a)
{
    require_small(e);
    const Precision prec = e.precision();
    const AdicCoeff minus_one = AdicCoeff::constant(prec, -1);
    AdicCoeff y = minus_one;
    // The map is a contraction by a factor t, so N rounds fix every digit.
    for (int round = 0; round < prec.levels(); ++round) {
        AdicCoeff acc(prec);
        for (std::size_t i = a.size(); i-- > 0;) {
            acc += a[i];
            acc *= y;
        }
        acc *= y;  // lowest power is y^2
        AdicCoeff next = minus_one - e * acc;
        if (next == y)
            break;
        y = std::move(next);
    }
    return y;
}

AdicCoeff hensel_root(const Poly1& p, const AdicCoeff& a)
{
    require_same_precision(AdicCoeff(p.precision()), a);
    const Poly1 dp = p.derivative();
    if (p(a).ord() < 1)
        throw NotHenselianInstance("P(a) is not in tA: P(a) = " + to_string(p(a)));
    if (dp(a).ord() != 0)
        throw NotHenselianInstance("P'(a) is not a unit: P'(a) = " + to_string(dp(a)));
    AdicCoeff b = a;
    for (int it = 0; it <= p.precision().levels(); ++it) {
        AdicCoeff value = p(b);
        if (value.is_zero())
            return b;
        b -= value * invert_unit(dp(b));
    }
    throw Error("Newton iteration did not converge");
}

AdicCoeff hensel_root_quadratic(const Poly1& p, const AdicCoeff& a, const AdicCoeff& e)
{
    require_same_precision(AdicCoeff(p.precision()), a);
    require_same_precision(a, e);
    if (e.ord() < 1)
        throw NotHenselianInstance("e must lie in tA, got " + to_string(e));
    const AdicCoeff d = p.derivative()(a);
    if (!(p(a) == e * d * d))
        throw NotHenselianInstance("P(a) != e P'(a)^2 at precision t^" + std::to_string(e.levels()));
    // P(a + e P'(a) y) = e P'(a)^2 (1 + y + sum e a_i y^i),
    // a_i = e^(i-2) P'(a)^(i-2) P_(i)(a).
    const std::vector<AdicCoeff> tay = p.taylor(a);
    std::vector<AdicCoeff> coeffs;
    AdicCoeff scale = AdicCoeff::constant(e.precision(), 1);
    const AdicCoeff ed = e * d;
    for (std::size_t i = 2; i < tay.size(); ++i) {
        coeffs.push_back(scale * tay[i]);
        scale *= ed;
    }
    const AdicCoeff y = solve_special(e, coeffs);
    return a + ed * y;
}

} // namespace tadic
