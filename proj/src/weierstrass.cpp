#include "tadic/weierstrass.hpp"

#include "literal.hpp"
#include "tadic/error.hpp"

#include <algorithm>
#include <random>

namespace tadic {

namespace {

RestrictedSeries last_power(std::size_t n, Precision prec, unsigned d)
{
    Monomial m(n);
    m[n - 1] = d;
    return RestrictedSeries::term(m, AdicCoeff::constant(prec, 1));
}

// Term-at-a-time reduction modulo a monic f.  Terms of the current top
// Y_n-degree are eliminated one by one in an order drawn from the seed;
// picking lower terms first would only re-create them later.
DivRem shuffled_divrem(const RestrictedSeries& g, const RestrictedSeries& f, std::uint64_t seed)
{
    const std::size_t n = f.nvars();
    const auto d = static_cast<std::uint32_t>(f.degree_in_last());
    std::mt19937_64 rng(seed);
    RestrictedSeries q(n, g.precision());
    RestrictedSeries r = g;
    for (;;) {
        std::vector<const std::pair<const Monomial, AdicCoeff>*> top;
        std::uint32_t top_degree = d;
        for (const auto& entry : r.terms()) {
            const std::uint32_t k = entry.first[n - 1];
            if (k < top_degree)
                continue;
            if (k > top_degree) {
                top.clear();
                top_degree = k;
            }
            top.push_back(&entry);
        }
        if (top.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
        const auto& [m, c] = *top[pick(rng)];
        Monomial qm = m;
        qm[n - 1] -= d;
        RestrictedSeries step = RestrictedSeries::term(qm, c);
        q += step;
        r -= step * f;
    }
    return {std::move(q), std::move(r)};
}

} // namespace

DivRem weierstrass_divide(const RestrictedSeries& f, const RestrictedSeries& g, DivisionOrder order)
{
    require_compatible(f, g);
    const std::size_t n = f.nvars();
    std::optional<unsigned> reg = is_regular_in_last(f);
    if (!reg)
        throw NotRegular("divisor is not regular in Y" + std::to_string(n) + ": " + to_string(f));
    const unsigned d = *reg;
    const Precision prec = f.precision();

    Monomial lead(n);
    lead[n - 1] = d;
    const Rational c = f.coefficient(lead).residue();
    const AdicCoeff c_inv = AdicCoeff::constant(prec, 1 / c);
    const RestrictedSeries fn = f * c_inv;

    // fn = f0 + E with f0 monic of degree d and gauss_norm(E) >= 1.
    RestrictedSeries f0 = last_power(n, prec, d);
    for (const auto& [m, a] : fn.terms())
        if (m[n - 1] < d)
            f0.add_term(m, a);
    const RestrictedSeries e = fn - f0;

    RestrictedSeries q(n, prec);
    RestrictedSeries r(n, prec);
    RestrictedSeries gk = g;
    // Each pass raises the order of the defect by at least gauss_norm(E) >= 1.
    for (int pass = 0; !gk.is_zero(); ++pass) {
        if (pass > prec.levels())
            throw Error("Weierstrass iteration failed to terminate");
        DivRem step = order.shuffle_seed ? shuffled_divrem(gk, f0, *order.shuffle_seed + static_cast<unsigned>(pass))
                                         : monic_divrem(gk, f0);
        q += step.quotient;
        r += step.remainder;
        gk = -(e * step.quotient);
    }
    return {q * c_inv, std::move(r)};
}

PreparationResult weierstrass_prepare(const RestrictedSeries& f)
{
    std::optional<unsigned> reg = is_regular_in_last(f);
    if (!reg)
        throw NotRegular("series is not regular in Y" + std::to_string(f.nvars()) + ": " + to_string(f));
    const RestrictedSeries yd = last_power(f.nvars(), f.precision(), *reg);
    DivRem qr = weierstrass_divide(f, yd);
    return {std::move(qr.quotient), yd - qr.remainder, *reg};
}

namespace {

Monomial lex_largest_residue_exponent(const RestrictedSeries& f)
{
    ResiduePoly res = residue_poly(f);
    if (res.is_zero())
        throw CannotRegularize("residue is zero; factor out t first (strip_t)");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : res.terms())
        if (best == nullptr || lex_less(*best, m))
            best = &m;
    return *best;
}

} // namespace

std::uint64_t regularity_degree_formula(const RestrictedSeries& f, unsigned d)
{
    const Monomial mu = lex_largest_residue_exponent(f);
    std::uint64_t ell = 0;
    for (std::size_t i = 0; i < mu.nvars(); ++i)
        ell = ell * d + mu[i];
    return ell;
}

Regularization regularize(const RestrictedSeries& f, std::optional<unsigned> d)
{
    if (f.nvars() == 0)
        throw ContractViolation("regularize needs at least one variable");
    ResiduePoly res = residue_poly(f);
    if (res.is_zero())
        throw CannotRegularize("residue is zero; factor out t first (strip_t)");
    const auto deg = static_cast<unsigned>(res.total_degree());
    const unsigned dd = d.value_or(deg + 1);
    if (dd <= deg)
        throw ContractViolation("d = " + std::to_string(dd) + " must exceed the residue degree "
                                + std::to_string(deg));
    const std::uint64_t ell = regularity_degree_formula(f, dd);
    RestrictedSeries transformed = td_transform(f, dd);
    std::optional<unsigned> got = is_regular_in_last(transformed);
    if (!got || *got != ell)
        throw Error("regularization produced degree "
                    + (got ? std::to_string(*got) : std::string("none")) + ", expected " + std::to_string(ell));
    return {dd, std::move(transformed), *got};
}

StrippedSeries strip_t(const RestrictedSeries& f)
{
    if (f.is_zero())
        throw CannotRegularize("the zero series has no t-adic content");
    const int k = gauss_norm(f);
    const int m = f.precision().levels() - k;
    RestrictedSeries rest(f.nvars(), Precision(m));
    for (const auto& [mono, c] : f.terms())
        rest.add_term(mono, c.divided_by_t_power(k));
    return {k, std::move(rest)};
}

KSeries parse_kseries(std::string_view text)
{
    detail::ParsedLiteral lit = detail::parse_literal(text);
    if (lit.big_o)
        throw ParseError("O(t^k) is not a series literal", 1, 1);
    std::optional<int> mod = detail::mod_suffix(lit);
    if (!mod)
        throw ParseError("missing '(mod t^N)' suffix", 1, 1);
    const Precision prec(*mod);
    if (lit.poly.max_var > 1)
        throw ParseError("uninorm takes a series in Y1 only", 1, 1);
    long vmin = 0;
    bool first = true;
    for (const auto& [key, tm] : lit.poly.terms)
        for (const auto& [e, c] : tm) {
            long k = detail::integer_exponent(e, "series coefficient");
            vmin = first ? k : std::min(vmin, k);
            first = false;
        }
    RestrictedSeries h(1, prec);
    for (const auto& [key, tm] : lit.poly.terms) {
        Monomial m(1);
        m[0] = key.empty() ? 0 : key[0];
        std::vector<Rational> digits(static_cast<std::size_t>(prec.levels()));
        for (const auto& [e, c] : tm) {
            long k = detail::integer_exponent(e, "series coefficient") - vmin;
            if (k < prec.levels())
                digits[static_cast<std::size_t>(k)] = c;
        }
        h.add_term(m, AdicCoeff(prec, std::move(digits)));
    }
    return {LaurentElem::t_power(prec, vmin), std::move(h)};
}

UnivariateNormalForm univariate_normalize(const KSeries& g)
{
    const RestrictedSeries& h = g.h;
    if (h.nvars() != 1)
        throw ContractViolation("univariate_normalize needs a series in one variable");
    if (h.is_zero())
        throw PrecisionExhausted("every coefficient vanishes at precision t^" + std::to_string(h.precision().levels()));
    const int gamma = gauss_norm(h);
    unsigned mu = 0;
    for (const auto& [m, c] : h.terms())
        if (c.ord() == gamma)
            mu = std::max(mu, m[0]);
    const int rel = h.precision().levels() - gamma;
    Monomial mm(1);
    mm[0] = mu;
    const AdicCoeff w = h.coefficient(mm).divided_by_t_power(gamma);
    const AdicCoeff w_inv = invert_unit(w);
    RestrictedSeries scaled(1, Precision(rel));
    for (const auto& [m, c] : h.terms())
        scaled.add_term(m, c.divided_by_t_power(gamma) * w_inv);
    PreparationResult prep = weierstrass_prepare(scaled);
    if (prep.degree != mu)
        throw Error("normalized series has regularity degree " + std::to_string(prep.degree) + ", expected "
                    + std::to_string(mu));
    LaurentElem scale = g.c0 * LaurentElem::from_unit(g.c0.cap(), gamma, w);
    return {mu, std::move(scale), invert_unit(prep.unit), std::move(prep.monic)};
}

bool normal_form_reproduces(const KSeries& g, const UnivariateNormalForm& nf)
{
    const Precision prec = g.h.precision();
    const int gamma = gauss_norm(g.h);
    const long shift = nf.scale.valuation() - g.c0.valuation();
    if (shift != gamma)
        return false;
    // h = t^gamma * w * unit * monic, lifting the precision N - gamma factors.
    AdicCoeff w = nf.scale.unit();
    w = w * invert_unit(g.c0.unit().with_precision(w.levels()));
    RestrictedSeries prod = nf.unit * nf.monic * w.with_precision(nf.unit.precision().levels());
    RestrictedSeries lifted(1, prec);
    for (const auto& [m, c] : prod.terms()) {
        std::vector<Rational> digits(static_cast<std::size_t>(prec.levels()));
        for (int k = 0; k < c.levels() && k + gamma < prec.levels(); ++k)
            digits[static_cast<std::size_t>(k + gamma)] = c[k];
        lifted.add_term(m, AdicCoeff(prec, std::move(digits)));
    }
    return lifted == g.h;
}

} // namespace tadic
