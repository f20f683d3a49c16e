#include "tadic/valfield.hpp"

#include "literal.hpp"
#include "tadic/error.hpp"

#include <algorithm>

namespace tadic {

namespace {

void require_same_cap(const LaurentElem& a, const LaurentElem& b)
{
    if (a.cap() != b.cap())
        throw ContractViolation("mixed precisions: t^" + std::to_string(a.cap().levels()) + " vs t^"
                                + std::to_string(b.cap().levels()));
}

[[noreturn]] void exhausted(const std::string& what)
{
    throw PrecisionExhausted(what);
}

} // namespace

LaurentElem::LaurentElem(Precision cap) : cap_(cap), unit_(Precision(1)) {}

LaurentElem LaurentElem::zero_at(Precision cap, long beta)
{
    LaurentElem z(cap);
    z.kind_ = Kind::inexact_zero;
    z.val_ = beta;
    return z;
}

LaurentElem LaurentElem::constant(Precision cap, const Rational& c)
{
    return t_power(cap, 0, c);
}

LaurentElem LaurentElem::t_power(Precision cap, long k, const Rational& c)
{
    if (sgn(c) == 0)
        return LaurentElem(cap);
    return from_unit(cap, k, AdicCoeff::constant(cap, c));
}

LaurentElem LaurentElem::from_unit(Precision cap, long v, const AdicCoeff& unit)
{
    if (unit.levels() > cap.levels())
        throw ContractViolation("relative precision t^" + std::to_string(unit.levels()) + " exceeds cap t^"
                                + std::to_string(cap.levels()));
    if (!unit.is_unit())
        throw NotAUnit("Laurent unit part must have nonzero residue");
    LaurentElem a(cap);
    a.kind_ = Kind::nonzero;
    a.val_ = v;
    a.unit_ = unit;
    return a;
}

LaurentElem LaurentElem::from_coeff(Precision cap, const AdicCoeff& a)
{
    if (a.levels() > cap.levels())
        throw ContractViolation("coefficient precision exceeds cap");
    if (a.is_zero())
        return zero_at(cap, a.levels());
    int v = a.ord();
    return from_unit(cap, v, a.divided_by_t_power(v));
}

bool LaurentElem::is_full() const noexcept
{
    return kind_ == Kind::exact_zero || (kind_ == Kind::nonzero && unit_.levels() == cap_.levels());
}

long LaurentElem::valuation() const
{
    if (kind_ != Kind::nonzero)
        throw ContractViolation("valuation of zero");
    return val_;
}

const AdicCoeff& LaurentElem::unit() const
{
    if (kind_ != Kind::nonzero)
        throw ContractViolation("unit part of zero");
    return unit_;
}

int LaurentElem::rel() const
{
    return unit().levels();
}

long LaurentElem::zero_bound() const
{
    if (kind_ != Kind::inexact_zero)
        throw ContractViolation("zero bound of a value that is not an inexact zero");
    return val_;
}

long LaurentElem::abs_precision() const noexcept
{
    switch (kind_) {
    case Kind::exact_zero:
        return LONG_MAX;
    case Kind::inexact_zero:
        return val_;
    case Kind::nonzero:
        break;
    }
    return val_ + unit_.levels();
}

Rational LaurentElem::digit(long k) const
{
    if (k >= abs_precision())
        exhausted("coefficient of t^" + std::to_string(k) + " is beyond precision");
    if (kind_ != Kind::nonzero || k < val_)
        return 0;
    return unit_[static_cast<int>(k - val_)];
}

AdicCoeff LaurentElem::to_coeff(int m) const
{
    Precision p(m);
    if (kind_ == Kind::exact_zero)
        return AdicCoeff(p);
    if (abs_precision() < m)
        exhausted("value known only modulo t^" + std::to_string(abs_precision()) + ", needed t^"
                  + std::to_string(m));
    if (kind_ == Kind::inexact_zero)
        return AdicCoeff(p);
    if (val_ < 0)
        throw ContractViolation("element has negative valuation, not in R");
    std::vector<Rational> d(static_cast<std::size_t>(m));
    for (long k = val_; k < m; ++k)
        d[static_cast<std::size_t>(k)] = unit_[static_cast<int>(k - val_)];
    return AdicCoeff(p, std::move(d));
}

LaurentElem LaurentElem::operator-() const
{
    LaurentElem r = *this;
    if (kind_ == Kind::nonzero)
        r.unit_ = -unit_;
    return r;
}

LaurentElem operator+(const LaurentElem& a, const LaurentElem& b)
{
    require_same_cap(a, b);
    if (a.is_exact_zero())
        return b;
    if (b.is_exact_zero())
        return a;
    const long p = std::min(a.abs_precision(), b.abs_precision());
    if (a.is_inexact_zero() && b.is_inexact_zero())
        return LaurentElem::zero_at(a.cap_, p);
    long lo = p;
    if (a.is_nonzero())
        lo = std::min(lo, a.val_);
    if (b.is_nonzero())
        lo = std::min(lo, b.val_);
    // Digits lo .. p-1 are known; p - lo <= cap.
    for (long k = lo; k < p; ++k) {
        Rational s = a.digit(k) + b.digit(k);
        if (sgn(s) == 0)
            continue;
        std::vector<Rational> d(static_cast<std::size_t>(p - k));
        d[0] = s;
        for (long j = k + 1; j < p; ++j)
            d[static_cast<std::size_t>(j - k)] = a.digit(j) + b.digit(j);
        return LaurentElem::from_unit(a.cap_, k, AdicCoeff(Precision(static_cast<int>(p - k)), std::move(d)));
    }
    return LaurentElem::zero_at(a.cap_, p);
}

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b)
{
    require_same_cap(a, b);
    if (a.is_exact_zero() || b.is_exact_zero())
        return LaurentElem(a.cap_);
    // val_ holds the valuation or the zero bound; either way the product's
    // valuation is at least their sum.
    if (a.is_inexact_zero() || b.is_inexact_zero())
        return LaurentElem::zero_at(a.cap_, a.val_ + b.val_);
    const int rel = std::min(a.unit_.levels(), b.unit_.levels());
    return LaurentElem::from_unit(a.cap_, a.val_ + b.val_, a.unit_.with_precision(rel) * b.unit_.with_precision(rel));
}

LaurentElem inverse(const LaurentElem& a)
{
    if (a.is_inexact_zero())
        throw DivisionByZeroAtPrecision("division by " + to_string(a));
    if (a.is_exact_zero())
        throw ContractViolation("division by zero");
    return LaurentElem::from_unit(a.cap(), -a.valuation(), invert_unit(a.unit()));
}

LaurentElem operator/(const LaurentElem& a, const LaurentElem& b)
{
    require_same_cap(a, b);
    return a * inverse(b);
}

LaurentElem pow(const LaurentElem& a, long e)
{
    if (e < 0)
        return pow(inverse(a), -e);
    LaurentElem result = LaurentElem::constant(a.cap(), 1);
    LaurentElem base = a;
    while (e != 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

bool same_repr(const LaurentElem& a, const LaurentElem& b)
{
    if (a.cap_ != b.cap_ || a.kind_ != b.kind_)
        return false;
    if (a.kind_ == LaurentElem::Kind::exact_zero)
        return true;
    if (a.kind_ == LaurentElem::Kind::inexact_zero)
        return a.val_ == b.val_;
    return a.val_ == b.val_ && a.unit_ == b.unit_;
}

bool preceq(const LaurentElem& a, const LaurentElem& b)
{
    require_same_cap(a, b);
    if (a.is_exact_zero())
        return true;
    if (b.is_exact_zero()) {
        if (a.is_nonzero())
            return false;
        exhausted("cannot decide " + to_string(a) + " <<= 0");
    }
    if (a.is_inexact_zero()) {
        if (b.is_nonzero() && a.zero_bound() >= b.valuation())
            return true;
        exhausted("cannot decide " + to_string(a) + " <<= " + to_string(b));
    }
    if (b.is_inexact_zero()) {
        if (a.valuation() < b.zero_bound())
            return false;
        exhausted("cannot decide " + to_string(a) + " <<= " + to_string(b));
    }
    return a.valuation() >= b.valuation();
}

bool prec(const LaurentElem& a, const LaurentElem& b)
{
    return !preceq(b, a);
}

Dominance dominance(const LaurentElem& a, const LaurentElem& b)
{
    require_same_cap(a, b);
    const bool ab = preceq(a, b);
    const bool ba = preceq(b, a);
    if (ab && !ba)
        return Dominance::precedes;
    if (ba && !ab)
        return Dominance::succeeds;
    // a ~ b iff a - b < a; for nonzero a, b of equal valuation this is
    // equality of the leading coefficients.
    if (a.is_nonzero() && b.is_nonzero() && a.unit().residue() == b.unit().residue())
        return Dominance::asymp_sim;
    return Dominance::asymp_not_sim;
}

bool asymp(const LaurentElem& a, const LaurentElem& b)
{
    auto d = dominance(a, b);
    return d == Dominance::asymp_sim || d == Dominance::asymp_not_sim;
}

bool sim(const LaurentElem& a, const LaurentElem& b)
{
    return dominance(a, b) == Dominance::asymp_sim;
}

bool equals(const LaurentElem& a, const LaurentElem& b)
{
    require_same_cap(a, b);
    LaurentElem d = a - b;
    if (d.is_nonzero())
        return false;
    if (d.is_exact_zero() || (a.is_full() && b.is_full()))
        return true;
    exhausted("cannot decide " + to_string(a) + " = " + to_string(b));
}

LaurentElem restricted_div(const LaurentElem& a, const LaurentElem& b)
{
    require_same_cap(a, b);
    if (b.is_exact_zero())
        return LaurentElem(b.cap());
    if (b.is_inexact_zero())
        exhausted("D(" + to_string(a) + ", " + to_string(b) + "): divisor is zero only at precision");
    if (!preceq(a, b))
        return LaurentElem(a.cap());
    return a / b;
}

FlaggedValue co(const LaurentElem& a)
{
    if (a.is_exact_zero())
        return {LaurentElem(a.cap()), false};
    if (a.is_inexact_zero())
        return {LaurentElem(a.cap()), true};
    return {LaurentElem::constant(a.cap(), a.unit().residue()), false};
}

FlaggedValue abs_g(const LaurentElem& a)
{
    if (a.is_exact_zero())
        return {LaurentElem(a.cap()), false};
    if (a.is_inexact_zero())
        return {LaurentElem(a.cap()), true};
    return {LaurentElem::t_power(a.cap(), a.valuation()), false};
}

bool in_R(const LaurentElem& a)
{
    return preceq(a, LaurentElem::constant(a.cap(), 1));
}

bool in_maximal_ideal(const LaurentElem& a)
{
    return preceq(a, LaurentElem::t_power(a.cap(), 1));
}

namespace {

// Whether every known unit digit past the residue vanishes.
bool unit_is_constant(const LaurentElem& a)
{
    return a.unit().is_constant();
}

} // namespace

bool in_C(const LaurentElem& a)
{
    if (a.is_exact_zero())
        return true;
    if (a.is_inexact_zero())
        exhausted("membership in C undecidable for " + to_string(a));
    if (a.valuation() != 0 || !unit_is_constant(a))
        return false;
    if (a.is_full())
        return true;
    exhausted("membership in C undecidable for " + to_string(a));
}

bool in_G(const LaurentElem& a)
{
    if (a.is_exact_zero())
        return false;
    if (a.is_inexact_zero())
        exhausted("membership in G undecidable for " + to_string(a));
    if (a.unit().residue() != 1 || !unit_is_constant(a))
        return false;
    if (a.is_full())
        return true;
    exhausted("membership in G undecidable for " + to_string(a));
}

Membership membership(const LaurentElem& a)
{
    return {in_R(a), in_maximal_ideal(a), in_C(a), in_G(a)};
}

Decomposition decompose(const LaurentElem& a)
{
    if (!a.is_nonzero())
        throw ContractViolation("decomposition of zero");
    const Precision cap = a.cap();
    const Rational c = a.unit().residue();
    AdicCoeff m = a.unit();
    m *= Rational(1 / c);
    m -= AdicCoeff::constant(m.precision(), 1);
    LaurentElem mm = (m.is_zero() && a.is_full()) ? LaurentElem(cap) : LaurentElem::from_coeff(cap, m);
    return {LaurentElem::constant(cap, c), LaurentElem::t_power(cap, a.valuation()), mm};
}

LaurentElem viability_witness(const LaurentElem& a)
{
    if (!in_maximal_ideal(a))
        throw ContractViolation(to_string(a) + " is not in the maximal ideal");
    if (a.is_exact_zero())
        return a;
    if (a.is_inexact_zero())
        return LaurentElem::zero_at(a.cap(), a.zero_bound() - 1);
    return LaurentElem::from_unit(a.cap(), a.valuation() - 1, a.unit());
}

std::string to_string(const LaurentElem& a)
{
    if (a.is_exact_zero())
        return "0";
    if (a.is_inexact_zero())
        return "O(t^" + std::to_string(a.zero_bound()) + ")";
    const AdicCoeff& u = a.unit();
    const std::string suffix = " (mod t^" + std::to_string(u.levels()) + ")";
    const std::string tp = detail::t_power_text(Rational(a.valuation()));
    if (tp.empty())
        return to_literal_body(u) + suffix;
    if (u.is_constant()) {
        auto term = detail::make_term(u.residue(), tp);
        return (term.negative ? "-" : "") + term.text + suffix;
    }
    return tp + "*(" + to_literal_body(u) + ")" + suffix;
}

LaurentElem parse_laurent(std::string_view text, Precision cap)
{
    detail::ParsedLiteral lit = detail::parse_literal(text);
    if (lit.big_o) {
        if (lit.big_o->get_den() != 1)
            throw ParseError("O(t^k) needs an integer exponent", 1, 1);
        return LaurentElem::zero_at(cap, lit.big_o->get_num().get_si());
    }
    std::optional<int> rel = detail::mod_suffix(lit);
    if (rel && *rel > cap.levels())
        throw ContractViolation("relative precision t^" + std::to_string(*rel) + " exceeds session precision t^"
                                + std::to_string(cap.levels()));
    if (lit.poly.max_var != 0)
        throw ParseError("Laurent literal must not mention Y-variables", 1, 1);
    const int r = rel ? *rel : cap.levels();
    auto it = lit.poly.terms.find({});
    if (it == lit.poly.terms.end() || it->second.empty())
        return LaurentElem(cap);
    const auto& tm = it->second;
    const long v = detail::integer_exponent(tm.begin()->first, "Laurent literal");
    std::vector<Rational> d(static_cast<std::size_t>(r));
    for (const auto& [e, c] : tm) {
        long k = detail::integer_exponent(e, "Laurent literal") - v;
        if (k >= r)
            throw ContractViolation("term t^" + e.get_str() + " lies beyond the stated relative precision");
        d[static_cast<std::size_t>(k)] = c;
    }
    return LaurentElem::from_unit(cap, v, AdicCoeff(Precision(r), std::move(d)));
}

LaurentElem evaluate(const LaurentPoly& p, const LaurentElem& z)
{
    LaurentElem acc(z.cap());
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

namespace {

bool in_hole(const AnnulusSpec& s, std::size_t i, const LaurentElem& z)
{
    return prec(pow(evaluate(s.p[i], z), static_cast<long>(s.l[i])), s.pi[i]);
}

std::vector<LaurentElem> default_grid(Precision cap)
{
    std::vector<LaurentElem> grid;
    for (int c0 = -2; c0 <= 2; ++c0)
        for (int c1 = -2; c1 <= 2; ++c1)
            for (int k = 1; k <= 3; ++k)
                grid.push_back(LaurentElem::constant(cap, c0) + LaurentElem::t_power(cap, k, c1));
    return grid;
}

} // namespace

AnnulusSpec make_annulus(std::vector<LaurentPoly> p, std::vector<unsigned> l, std::vector<LaurentElem> pi,
                         const std::vector<LaurentElem>& samples)
{
    if (p.empty() || p.size() != l.size() || p.size() != pi.size())
        throw ContractViolation("annulus needs equally many polynomials, exponents and radii");
    const Precision cap = pi[0].cap();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& c = p[i].coeffs;
        if (c.empty() || !equals(c.back(), LaurentElem::constant(cap, 1)))
            throw ContractViolation("annulus polynomial p" + std::to_string(i) + " is not monic");
        for (const auto& ci : c)
            if (!in_R(ci))
                throw ContractViolation("annulus polynomial p" + std::to_string(i) + " has a coefficient outside R");
        if (l[i] == 0)
            throw ContractViolation("annulus exponents must be positive");
        if (!pi[i].is_nonzero() || !in_R(pi[i]))
            throw ContractViolation("annulus radius pi" + std::to_string(i) + " must be a nonzero element of R");
    }
    AnnulusSpec spec{std::move(p), std::move(l), std::move(pi), HoleVerdict::no_counterexample, std::nullopt};
    const std::vector<LaurentElem> grid = samples.empty() ? default_grid(cap) : samples;
    for (const auto& z : grid) {
        int hits = 0;
        for (std::size_t i = 1; i < spec.p.size(); ++i) {
            try {
                if (in_hole(spec, i, z))
                    ++hits;
            } catch (const PrecisionExhausted&) {
                // Undecided sample points say nothing about disjointness.
            }
        }
        if (hits >= 2) {
            spec.holes = HoleVerdict::violated;
            spec.hole_witness = z;
            break;
        }
    }
    return spec;
}

bool annulus_contains(const AnnulusSpec& spec, const LaurentElem& z)
{
    if (!in_R(z))
        throw ContractViolation("annulus membership needs z in R");
    if (!preceq(pow(evaluate(spec.p[0], z), static_cast<long>(spec.l[0])), spec.pi[0]))
        return false;
    for (std::size_t i = 1; i < spec.p.size(); ++i)
        if (in_hole(spec, i, z))
            return false;
    return true;
}

} // namespace tadic
