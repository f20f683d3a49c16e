#include "tadic/hahn.hpp"

#include "literal.hpp"
#include "tadic/error.hpp"

#include <algorithm>

namespace tadic {

HahnSeries::HahnSeries(const TermMap& terms, Rational cutoff) : cutoff_(std::move(cutoff))
{
    cutoff_.canonicalize();
    for (const auto& [e, c] : terms)
        if (sgn(c) != 0 && e < cutoff_)
            terms_.emplace_hint(terms_.end(), e, c);
}

HahnSeries HahnSeries::monomial(const Rational& exponent, const Rational& c, const Rational& cutoff)
{
    return HahnSeries(TermMap{{exponent, c}}, cutoff);
}

const Rational& HahnSeries::valuation() const
{
    if (terms_.empty())
        throw ContractViolation("valuation of the zero Hahn series");
    return terms_.begin()->first;
}

const Rational& HahnSeries::max_exponent() const
{
    if (terms_.empty())
        throw ContractViolation("support of the zero Hahn series is empty");
    return terms_.rbegin()->first;
}

Rational HahnSeries::coefficient(const Rational& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool HahnSeries::in_valuation_ring() const
{
    return terms_.empty() || sgn(terms_.begin()->first) >= 0;
}

HahnSeries HahnSeries::with_cutoff(const Rational& gamma) const
{
    if (gamma > cutoff_)
        throw ContractViolation("cannot raise a Hahn cutoff from " + cutoff_.get_str() + " to " + gamma.get_str());
    return HahnSeries(terms_, gamma);
}

HahnSeries HahnSeries::operator-() const
{
    HahnSeries r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

HahnSeries operator+(const HahnSeries& a, const HahnSeries& b)
{
    HahnSeries r(std::min(a.cutoff_, b.cutoff_));
    HahnSeries::TermMap sum = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = sum.try_emplace(e, c);
        if (!inserted)
            it->second += c;
    }
    return HahnSeries(sum, r.cutoff_);
}

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b)
{
    // A term of a beyond its cutoff meets b at valuation >= v(b); only a
    // negative valuation can pull the unknown region down.
    auto lowest = [](const HahnSeries& x) {
        return x.is_zero() ? Rational(0) : std::min(x.valuation(), Rational(0));
    };
    const Rational cutoff = std::min(a.cutoff_ + lowest(b), b.cutoff_ + lowest(a));
    HahnSeries::TermMap prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Rational e = ea + eb;
            if (e >= cutoff)
                break;
            auto [it, inserted] = prod.try_emplace(std::move(e), ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    }
    return HahnSeries(prod, cutoff);
}

HahnSeries operator*(const Rational& c, const HahnSeries& a)
{
    HahnSeries::TermMap scaled = a.terms_;
    for (auto& [e, x] : scaled)
        x *= c;
    return HahnSeries(scaled, a.cutoff_);
}

HahnSeries pow(const HahnSeries& a, unsigned e)
{
    HahnSeries result = HahnSeries::constant(1, a.cutoff());
    HahnSeries base = a;
    while (e != 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

HahnSeries truncate(const HahnSeries& a, const Rational& gamma)
{
    if (gamma > a.cutoff())
        throw ContractViolation("truncation point " + gamma.get_str() + " lies beyond the cutoff "
                                + a.cutoff().get_str());
    HahnSeries::TermMap kept;
    for (const auto& [e, c] : a.terms()) {
        if (e >= gamma)
            break;
        kept.emplace_hint(kept.end(), e, c);
    }
    return HahnSeries(kept, a.cutoff());
}

HahnSeries embed(const AdicCoeff& a, const Rational& cutoff)
{
    HahnSeries::TermMap terms;
    for (int k = 0; k < a.levels(); ++k)
        if (sgn(a[k]) != 0)
            terms.emplace_hint(terms.end(), Rational(k), a[k]);
    return HahnSeries(terms, std::min(cutoff, Rational(a.levels())));
}

HahnSeries hahn_evaluate(const RestrictedSeries& f, std::span<const HahnSeries> y, const Rational& cutoff)
{
    if (y.size() != f.nvars())
        throw ContractViolation("evaluation needs " + std::to_string(f.nvars()) + " points, got "
                                + std::to_string(y.size()));
    if (Rational(f.precision().levels()) < cutoff)
        throw ContractViolation("series precision t^" + std::to_string(f.precision().levels())
                                + " is below the cutoff " + cutoff.get_str());
    Rational gmax = cutoff;
    for (const auto& yi : y) {
        if (!yi.in_valuation_ring())
            throw ContractViolation("Hahn evaluation point has a negative exponent");
        gmax = std::min(gmax, yi.cutoff());
    }
    std::vector<std::vector<HahnSeries>> powers(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        powers[i].push_back(HahnSeries::constant(1, gmax));
    auto power = [&](std::size_t i, std::uint32_t k) -> const HahnSeries& {
        auto& p = powers[i];
        while (p.size() <= k)
            p.push_back((p.back() * y[i]).with_cutoff(gmax));
        return p[k];
    };
    HahnSeries out(gmax);
    for (const auto& [m, c] : f.terms()) {
        // v(a y^m) >= ord(a), so only low-order coefficients matter.
        if (Rational(c.ord()) >= gmax)
            continue;
        HahnSeries term = embed(c, gmax);
        for (std::size_t i = 0; i < m.nvars() && !term.is_zero(); ++i)
            if (m[i] != 0)
                term = (term * power(i, m[i])).with_cutoff(gmax);
        out = out + term;
    }
    return out;
}

std::string to_string(const HahnSeries& a)
{
    std::vector<detail::SignedTerm> terms;
    for (const auto& [e, c] : a.terms())
        terms.push_back(detail::make_term(c, detail::t_power_text(e)));
    return detail::join_terms(terms) + " (cutoff " + a.cutoff().get_str() + ")";
}

HahnSeries parse_hahn(std::string_view text, std::optional<Rational> default_cutoff)
{
    detail::ParsedLiteral lit = detail::parse_literal(text);
    if (lit.big_o)
        throw ParseError("O(t^k) is not a Hahn literal", 1, 1);
    if (lit.suffix == detail::SuffixKind::mod)
        throw ParseError("Hahn literals take a '(cutoff g)' suffix", 1, 1);
    if (lit.poly.max_var != 0)
        throw ParseError("Hahn literal must not mention Y-variables", 1, 1);
    Rational cutoff;
    if (lit.suffix == detail::SuffixKind::cutoff)
        cutoff = lit.suffix_value;
    else if (default_cutoff)
        cutoff = *default_cutoff;
    else
        throw ParseError("missing '(cutoff g)' suffix", 1, 1);
    HahnSeries::TermMap terms;
    auto it = lit.poly.terms.find({});
    if (it != lit.poly.terms.end())
        terms = it->second;
    for (const auto& [e, c] : terms)
        if (e >= cutoff)
            throw ContractViolation("term t^" + e.get_str() + " lies at or beyond the cutoff " + cutoff.get_str());
    return HahnSeries(terms, cutoff);
}

// ---------------------------------------------------------------------------
// HahnSpan

std::vector<HahnSeries> HahnSpan::basis() const
{
    std::vector<HahnSeries> out;
    out.reserve(basis_.size());
    for (const auto& [p, v] : basis_)
        out.emplace_back(v, cutoff_);
    return out;
}

HahnSeries::TermMap HahnSpan::reduce(HahnSeries::TermMap x) const
{
    // Basis vectors carry no other pivots, so one pass over the pivots of x
    // (in increasing order) clears them all.
    for (const auto& [p, v] : basis_) {
        auto it = x.find(p);
        if (it == x.end())
            continue;
        const Rational c = it->second;
        for (const auto& [e, bc] : v) {
            auto [jt, inserted] = x.try_emplace(e, -c * bc);
            if (!inserted) {
                jt->second -= c * bc;
                if (sgn(jt->second) == 0)
                    x.erase(jt);
            }
        }
    }
    return x;
}

bool HahnSpan::add(const HahnSeries& x)
{
    HahnSeries::TermMap r = reduce(x.with_cutoff(cutoff_).terms());
    if (r.empty())
        return false;
    const Rational pivot = r.begin()->first;
    const Rational lead = r.begin()->second;
    for (auto& [e, c] : r)
        c /= lead;
    for (auto& [p, v] : basis_) {
        auto it = v.find(pivot);
        if (it == v.end())
            continue;
        const Rational c = it->second;
        for (const auto& [e, rc] : r) {
            auto [jt, inserted] = v.try_emplace(e, -c * rc);
            if (!inserted) {
                jt->second -= c * rc;
                if (sgn(jt->second) == 0)
                    v.erase(jt);
            }
        }
    }
    basis_.emplace(pivot, std::move(r));
    return true;
}

bool HahnSpan::contains(const HahnSeries& x) const
{
    return reduce(x.with_cutoff(cutoff_).terms()).empty();
}

// ---------------------------------------------------------------------------
// Closure sampling

namespace {

class ClosureBuilder {
public:
    ClosureBuilder(const Rational& cutoff, const ClosureBudget& budget) : span_(cutoff), budget_(budget) {}

    void offer(const HahnSeries& x)
    {
        HahnSeries y = x.with_cutoff(span_.cutoff());
        if (std::find(elements_.begin(), elements_.end(), y) == elements_.end()) {
            if (elements_.size() >= budget_.max_elements)
                throw BudgetExceeded("closure sample exceeds " + std::to_string(budget_.max_elements) + " elements");
            elements_.push_back(y);
        }
        extend_span(y);
    }

    // Closes the span under multiplication.
    void close_ring()
    {
        while (!pending_.empty()) {
            HahnSeries v = pending_.back();
            pending_.pop_back();
            for (const auto& b : span_.basis())
                extend_span((v * b).with_cutoff(span_.cutoff()));
        }
    }

    const std::vector<HahnSeries>& elements() const { return elements_; }
    const HahnSpan& span() const { return span_; }

private:
    void extend_span(const HahnSeries& y)
    {
        if (span_.add(y)) {
            if (span_.dimension() > budget_.max_dimension)
                throw BudgetExceeded("closure ring exceeds dimension " + std::to_string(budget_.max_dimension));
            pending_.push_back(y);
        }
    }

    HahnSpan span_;
    ClosureBudget budget_;
    std::vector<HahnSeries> elements_;
    std::vector<HahnSeries> pending_;
};

} // namespace

ClosureSample closure_sample(const std::vector<HahnSeries>& generators, const std::vector<NamedSeries>& registry,
                             unsigned depth, const Rational& cutoff, const ClosureBudget& budget)
{
    for (const auto& g : generators)
        if (!g.in_valuation_ring())
            throw ContractViolation("closure generators must lie in the valuation ring: " + to_string(g));
    ClosureBuilder b(cutoff, budget);
    b.offer(HahnSeries(cutoff));
    b.offer(HahnSeries::constant(1, cutoff));
    b.offer(HahnSeries::monomial(1, 1, cutoff));
    for (const auto& g : generators)
        b.offer(g);
    b.close_ring();

    std::size_t applications = 0;
    for (unsigned level = 0; level < depth; ++level) {
        const std::vector<HahnSeries> current = b.elements();
        for (const auto& named : registry) {
            const std::size_t m = named.series.nvars();
            // Odometer over all m-tuples of the current elements.
            std::vector<std::size_t> idx(m, 0);
            for (;;) {
                if (++applications > budget.max_applications)
                    throw BudgetExceeded("closure sample exceeds " + std::to_string(budget.max_applications)
                                         + " applications");
                std::vector<HahnSeries> args;
                args.reserve(m);
                for (std::size_t i : idx)
                    args.push_back(current[i]);
                b.offer(hahn_evaluate(named.series, args, cutoff));
                std::size_t k = 0;
                while (k < m && ++idx[k] == current.size())
                    idx[k++] = 0;
                if (k == m)
                    break;
            }
        }
        b.close_ring();
    }
    return {b.elements(), b.span().basis()};
}

std::vector<HahnSeries> ClosureSample::members() const
{
    std::vector<HahnSeries> all = elements;
    all.insert(all.end(), basis.begin(), basis.end());
    return all;
}

TruncationVerdict truncation_closed_on_sample(const std::vector<HahnSeries>& sample)
{
    if (sample.empty())
        return {};
    Rational cutoff = sample[0].cutoff();
    for (const auto& s : sample)
        cutoff = std::min(cutoff, s.cutoff());
    HahnSpan span(cutoff);
    for (const auto& s : sample)
        span.add(s);
    for (const auto& s : sample) {
        const HahnSeries x = s.with_cutoff(cutoff);
        for (const auto& [gamma, c] : x.terms()) {
            HahnSeries tr = truncate(x, gamma);
            if (tr.is_zero())
                continue;
            if (!span.contains(tr))
                return {false, x, gamma};
        }
    }
    return {};
}

} // namespace tadic
