#include "tadic/series.hpp"

#include "literal.hpp"
#include "tadic/error.hpp"

#include <algorithm>
#include <numeric>

namespace tadic {

std::uint64_t Monomial::total_degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars())
        throw ContractViolation("monomials in different variable counts");
    Monomial r = a;
    for (std::size_t i = 0; i < r.nvars(); ++i)
        r.exps_[i] += b.exps_[i];
    return r;
}

bool lex_less(const Monomial& a, const Monomial& b)
{
    auto ea = a.exponents();
    auto eb = b.exponents();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const
{
    auto da = a.total_degree();
    auto db = b.total_degree();
    if (da != db)
        return da < db;
    return lex_less(a, b);
}

// ---------------------------------------------------------------------------
// ResiduePoly

ResiduePoly ResiduePoly::constant(std::size_t nvars, const Rational& c)
{
    ResiduePoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

ResiduePoly ResiduePoly::variable(std::size_t nvars, std::size_t i)
{
    ResiduePoly p(nvars);
    Monomial m(nvars);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

long ResiduePoly::total_degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<long>(terms_.rbegin()->first.total_degree());
}

void ResiduePoly::add_term(const Monomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw ContractViolation("residue polynomials in different variable counts");
    ResiduePoly r = a;
    for (const auto& [m, c] : b.terms_)
        r.add_term(m, c);
    return r;
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw ContractViolation("residue polynomials in different variable counts");
    ResiduePoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

ResiduePoly substitute(const ResiduePoly& f, std::span<const ResiduePoly> g)
{
    if (g.size() != f.nvars())
        throw ContractViolation("substitution arity mismatch");
    std::size_t n = g.empty() ? 0 : g[0].nvars();
    ResiduePoly out(n);
    for (const auto& [m, c] : f.terms()) {
        ResiduePoly term = ResiduePoly::constant(n, c);
        for (std::size_t i = 0; i < m.nvars(); ++i)
            for (std::uint32_t k = 0; k < m[i]; ++k)
                term = term * g[i];
        out = out + term;
    }
    return out;
}

namespace {

std::string monomial_text(const Monomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "Y" + std::to_string(i + 1);
        if (m[i] != 1)
            s += "^" + std::to_string(m[i]);
    }
    return s;
}

} // namespace

std::string to_string(const ResiduePoly& p)
{
    std::vector<detail::SignedTerm> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(detail::make_term(it->second, monomial_text(it->first)));
    return detail::join_terms(terms);
}

// ---------------------------------------------------------------------------
// RestrictedSeries

void require_compatible(const RestrictedSeries& f, const RestrictedSeries& g)
{
    if (f.nvars() != g.nvars())
        throw ContractViolation("series in different variable counts: " + std::to_string(f.nvars())
                                + " vs " + std::to_string(g.nvars()));
    if (f.precision() != g.precision())
        throw ContractViolation("mixed precisions: t^" + std::to_string(f.precision().levels())
                                + " vs t^" + std::to_string(g.precision().levels()));
}

RestrictedSeries RestrictedSeries::constant(std::size_t nvars, const AdicCoeff& c)
{
    RestrictedSeries f(nvars, c.precision());
    f.add_term(Monomial(nvars), c);
    return f;
}

RestrictedSeries RestrictedSeries::variable(std::size_t nvars, std::size_t i, Precision prec)
{
    if (i >= nvars)
        throw ContractViolation("variable index out of range");
    Monomial m(nvars);
    m[i] = 1;
    RestrictedSeries f(nvars, prec);
    f.add_term(m, AdicCoeff::constant(prec, 1));
    return f;
}

RestrictedSeries RestrictedSeries::term(const Monomial& m, const AdicCoeff& c)
{
    RestrictedSeries f(m.nvars(), c.precision());
    f.add_term(m, c);
    return f;
}

AdicCoeff RestrictedSeries::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? AdicCoeff(prec_) : it->second;
}

void RestrictedSeries::add_term(const Monomial& m, const AdicCoeff& c)
{
    if (m.nvars() != nvars_)
        throw ContractViolation("monomial has " + std::to_string(m.nvars()) + " variables, series has "
                                + std::to_string(nvars_));
    if (c.levels() != prec_.levels())
        throw ContractViolation("coefficient precision does not match series precision");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

long RestrictedSeries::degree_in_last() const
{
    if (nvars_ == 0)
        return terms_.empty() ? -1 : 0;
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<long>(m[nvars_ - 1]));
    return d;
}

RestrictedSeries RestrictedSeries::coefficient_in_last(std::uint32_t k) const
{
    RestrictedSeries out(nvars_, prec_);
    if (nvars_ == 0) {
        if (k == 0)
            out = *this;
        return out;
    }
    for (const auto& [m, c] : terms_) {
        if (m[nvars_ - 1] != k)
            continue;
        Monomial stripped = m;
        stripped[nvars_ - 1] = 0;
        out.terms_.emplace(stripped, c);
    }
    return out;
}

RestrictedSeries RestrictedSeries::with_precision(int m) const
{
    RestrictedSeries out(nvars_, Precision(m));
    for (const auto& [mono, c] : terms_)
        out.add_term(mono, c.with_precision(m));
    return out;
}

RestrictedSeries RestrictedSeries::with_nvars(std::size_t n) const
{
    RestrictedSeries out(n, prec_);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = n; i < nvars_; ++i)
            if (m[i] != 0)
                throw ContractViolation("cannot drop variable Y" + std::to_string(i + 1) + " that is in use");
        std::vector<std::uint32_t> e(n, 0u);
        for (std::size_t i = 0; i < std::min(n, nvars_); ++i)
            e[i] = m[i];
        out.terms_.emplace(Monomial(std::move(e)), c);
    }
    return out;
}

RestrictedSeries RestrictedSeries::operator-() const
{
    RestrictedSeries out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

RestrictedSeries& RestrictedSeries::operator+=(const RestrictedSeries& g)
{
    require_compatible(*this, g);
    for (const auto& [m, c] : g.terms_)
        add_term(m, c);
    return *this;
}

RestrictedSeries& RestrictedSeries::operator-=(const RestrictedSeries& g)
{
    require_compatible(*this, g);
    for (const auto& [m, c] : g.terms_)
        add_term(m, -c);
    return *this;
}

RestrictedSeries& RestrictedSeries::operator*=(const AdicCoeff& c)
{
    if (c.levels() != prec_.levels())
        throw ContractViolation("scalar precision does not match series precision");
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second * c;
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

RestrictedSeries operator*(const RestrictedSeries& f, const RestrictedSeries& g)
{
    require_compatible(f, g);
    const int n = f.prec_.levels();
    std::vector<std::pair<const Monomial*, const AdicCoeff*>> gt;
    std::vector<int> gord;
    for (const auto& [m, c] : g.terms_) {
        gt.emplace_back(&m, &c);
        gord.push_back(c.ord());
    }
    RestrictedSeries::TermMap acc;
    for (const auto& [mf, cf] : f.terms_) {
        int of = cf.ord();
        for (std::size_t j = 0; j < gt.size(); ++j) {
            if (of + gord[j] >= n)
                continue;
            Monomial m = mf * *gt[j].first;
            AdicCoeff prod = cf * *gt[j].second;
            auto [it, inserted] = acc.try_emplace(std::move(m), prod);
            if (!inserted)
                it->second += prod;
        }
    }
    RestrictedSeries out(f.nvars_, f.prec_);
    for (auto& [m, c] : acc)
        if (!c.is_zero())
            out.terms_.emplace_hint(out.terms_.end(), m, std::move(c));
    return out;
}

RestrictedSeries pow(const RestrictedSeries& f, unsigned e)
{
    RestrictedSeries result = RestrictedSeries::constant(f.nvars(), AdicCoeff::constant(f.precision(), 1));
    RestrictedSeries base = f;
    while (e != 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

int gauss_norm(const RestrictedSeries& f)
{
    int best = f.precision().levels();
    for (const auto& [m, c] : f.terms())
        best = std::min(best, c.ord());
    return best;
}

namespace {

// Powers of a fixed element, computed on demand.
template <typename T, typename One>
class PowerCache {
public:
    PowerCache(T base, One one) : powers_{one(), std::move(base)} {}

    const T& get(std::uint32_t k)
    {
        while (powers_.size() <= k)
            powers_.push_back(powers_.back() * powers_[1]);
        return powers_[k];
    }

private:
    std::vector<T> powers_;
};

} // namespace

RestrictedSeries substitute(const RestrictedSeries& f, std::span<const RestrictedSeries> g)
{
    if (g.size() != f.nvars())
        throw ContractViolation("substitution needs " + std::to_string(f.nvars()) + " series, got "
                                + std::to_string(g.size()));
    if (g.empty()) {
        // A constant series; with no targets the result lives in 0 variables.
        RestrictedSeries out(0, f.precision());
        for (const auto& [m, c] : f.terms())
            out.add_term(Monomial(0), c);
        return out;
    }
    const std::size_t n = g[0].nvars();
    const Precision prec = f.precision();
    for (const auto& gi : g)
        require_compatible(g[0], gi);
    if (g[0].precision() != prec)
        throw ContractViolation("substitution with mixed precisions");

    auto one = [&] { return RestrictedSeries::constant(n, AdicCoeff::constant(prec, 1)); };
    std::vector<PowerCache<RestrictedSeries, decltype(one)>> caches;
    caches.reserve(g.size());
    for (const auto& gi : g)
        caches.emplace_back(gi, one);

    RestrictedSeries out(n, prec);
    for (const auto& [m, c] : f.terms()) {
        RestrictedSeries term = RestrictedSeries::constant(n, c);
        for (std::size_t i = 0; i < m.nvars() && !term.is_zero(); ++i)
            if (m[i] != 0)
                term = term * caches[i].get(m[i]);
        out += term;
    }
    return out;
}

AdicCoeff evaluate(const RestrictedSeries& f, std::span<const AdicCoeff> y)
{
    if (y.size() != f.nvars())
        throw ContractViolation("evaluation needs " + std::to_string(f.nvars()) + " points, got "
                                + std::to_string(y.size()));
    const Precision prec = f.precision();
    for (const auto& yi : y)
        if (yi.levels() != prec.levels())
            throw ContractViolation("evaluation point precision does not match series precision");
    auto one = [&] { return AdicCoeff::constant(prec, 1); };
    std::vector<PowerCache<AdicCoeff, decltype(one)>> caches;
    caches.reserve(y.size());
    for (const auto& yi : y)
        caches.emplace_back(yi, one);
    AdicCoeff out(prec);
    for (const auto& [m, c] : f.terms()) {
        AdicCoeff term = c;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i] != 0)
                term *= caches[i].get(m[i]);
        out += term;
    }
    return out;
}

ResiduePoly residue_poly(const RestrictedSeries& f)
{
    ResiduePoly p(f.nvars());
    for (const auto& [m, c] : f.terms())
        p.add_term(m, c.residue());
    return p;
}

DivRem monic_divrem(const RestrictedSeries& g, const RestrictedSeries& f)
{
    require_compatible(g, f);
    const std::size_t n = f.nvars();
    if (n == 0)
        throw ContractViolation("monic division needs at least one variable");
    const long d = f.degree_in_last();
    if (d < 0)
        throw NotMonic("division by the zero series");
    const auto top = static_cast<std::uint32_t>(d);
    RestrictedSeries lead = f.coefficient_in_last(top);
    RestrictedSeries one = RestrictedSeries::constant(n, AdicCoeff::constant(f.precision(), 1));
    if (!(lead == one))
        throw NotMonic("leading Y" + std::to_string(n) + "-coefficient is not 1: " + to_string(f));

    RestrictedSeries q(n, g.precision());
    RestrictedSeries r = g;
    // Cancel the top Y_n-degree slice of r until it drops below d.
    for (long deg = r.degree_in_last(); deg >= d; deg = r.degree_in_last()) {
        RestrictedSeries slice(n, g.precision());
        for (const auto& [m, c] : r.terms()) {
            if (m[n - 1] != static_cast<std::uint32_t>(deg))
                continue;
            Monomial qm = m;
            qm[n - 1] = static_cast<std::uint32_t>(deg - d);
            slice.add_term(qm, c);
        }
        q += slice;
        r -= slice * f;
    }
    return {std::move(q), std::move(r)};
}

namespace {

RestrictedSeries td_apply(const RestrictedSeries& f, unsigned d, bool inverse)
{
    if (d < 1)
        throw ContractViolation("T_d needs d >= 1");
    const std::size_t n = f.nvars();
    if (n <= 1)
        return f;
    const Precision prec = f.precision();
    std::vector<RestrictedSeries> images;
    images.reserve(n);
    std::uint64_t power = 1;
    std::vector<std::uint64_t> exps(n, 0);
    for (std::size_t i = n - 1; i-- > 0;) {
        power *= d;
        if (power > (1u << 30))
            throw ContractViolation("T_d exponent overflow");
        exps[i] = power;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Monomial m(n);
        m[n - 1] = static_cast<std::uint32_t>(exps[i]);
        RestrictedSeries img = RestrictedSeries::variable(n, i, prec);
        img.add_term(m, AdicCoeff::constant(prec, inverse ? -1 : 1));
        images.push_back(std::move(img));
    }
    images.push_back(RestrictedSeries::variable(n, n - 1, prec));
    return substitute(f, images);
}

} // namespace

RestrictedSeries td_transform(const RestrictedSeries& f, unsigned d)
{
    return td_apply(f, d, false);
}

RestrictedSeries td_inverse(const RestrictedSeries& f, unsigned d)
{
    return td_apply(f, d, true);
}

std::optional<unsigned> is_regular_in_last(const RestrictedSeries& f)
{
    const std::size_t n = f.nvars();
    if (n == 0)
        throw ContractViolation("regularity needs at least one variable");
    ResiduePoly res = residue_poly(f);
    if (res.is_zero())
        return std::nullopt;
    std::uint32_t top = 0;
    for (const auto& [m, c] : res.terms())
        top = std::max(top, m[n - 1]);
    // The leading Y_n-coefficient must be a nonzero constant of Q.
    for (const auto& [m, c] : res.terms()) {
        if (m[n - 1] != top)
            continue;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (m[i] != 0)
                return std::nullopt;
    }
    return top;
}

bool is_unit(const RestrictedSeries& f)
{
    ResiduePoly res = residue_poly(f);
    return res.terms().size() == 1 && res.terms().begin()->first.is_one();
}

RestrictedSeries invert_unit(const RestrictedSeries& f)
{
    if (!is_unit(f))
        throw NotAUnit("series is not a unit: " + to_string(f));
    // f = c (1 + E) with gauss_norm(E) >= 1, so 1/f = c^-1 sum (-E)^k, finite mod t^N.
    const std::size_t n = f.nvars();
    const Precision prec = f.precision();
    AdicCoeff c_inv = AdicCoeff::constant(prec, 1 / f.coefficient(Monomial(n)).residue());
    RestrictedSeries one = RestrictedSeries::constant(n, AdicCoeff::constant(prec, 1));
    RestrictedSeries minus_e = one - f * c_inv;
    RestrictedSeries sum = one;
    RestrictedSeries power = one;
    for (int k = 1; k < prec.levels(); ++k) {
        power = power * minus_e;
        if (power.is_zero())
            break;
        sum += power;
    }
    return sum * c_inv;
}

std::string to_literal_body(const RestrictedSeries& f)
{
    std::vector<detail::SignedTerm> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono = monomial_text(m);
        int nonzero = 0;
        int k_single = 0;
        for (int k = 0; k < c.levels(); ++k) {
            if (sgn(c[k]) != 0) {
                ++nonzero;
                k_single = k;
            }
        }
        if (nonzero == 1) {
            std::string body = detail::t_power_text(Rational(k_single));
            if (!mono.empty())
                body = body.empty() ? mono : body + "*" + mono;
            terms.push_back(detail::make_term(c[k_single], body));
        } else {
            std::string body = "(" + to_literal_body(c) + ")";
            if (!mono.empty())
                body += "*" + mono;
            terms.push_back({false, body});
        }
    }
    return detail::join_terms(terms);
}

std::string to_string(const RestrictedSeries& f)
{
    return to_literal_body(f) + " (mod t^" + std::to_string(f.precision().levels()) + ")";
}

namespace {

RestrictedSeries series_from_literal(const detail::ParsedLiteral& lit, std::optional<Precision> fallback,
                                     std::size_t min_nvars)
{
    if (lit.big_o)
        throw ParseError("O(t^k) is not a series literal", 1, 1);
    std::optional<int> mod = detail::mod_suffix(lit);
    if (mod && fallback && *mod != fallback->levels())
        throw ContractViolation("literal precision t^" + std::to_string(*mod)
                                + " does not match session precision t^"
                                + std::to_string(fallback->levels()));
    if (!mod && !fallback)
        throw ParseError("missing '(mod t^N)' suffix", 1, 1);
    const Precision prec(mod ? *mod : fallback->levels());
    const std::size_t n = std::max(min_nvars, static_cast<std::size_t>(lit.poly.max_var));
    RestrictedSeries out(n, prec);
    for (const auto& [key, tm] : lit.poly.terms) {
        std::vector<std::uint32_t> e(n, 0u);
        for (std::size_t i = 0; i < key.size(); ++i)
            e[i] = key[i];
        std::vector<Rational> digits(static_cast<std::size_t>(prec.levels()));
        for (const auto& [te, c] : tm) {
            int k = detail::integer_exponent(te, "series coefficient");
            if (k < 0)
                throw ParseError("negative t-exponent in a series literal", 1, 1);
            if (k < prec.levels())
                digits[static_cast<std::size_t>(k)] = c;
        }
        out.add_term(Monomial(std::move(e)), AdicCoeff(prec, std::move(digits)));
    }
    return out;
}

} // namespace

RestrictedSeries parse_series(std::string_view text, std::size_t min_nvars)
{
    return series_from_literal(detail::parse_literal(text), std::nullopt, min_nvars);
}

RestrictedSeries parse_series(std::string_view text, Precision default_prec, std::size_t min_nvars)
{
    return series_from_literal(detail::parse_literal(text), default_prec, min_nvars);
}

} // namespace tadic
