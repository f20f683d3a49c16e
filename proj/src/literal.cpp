#include "literal.hpp"

#include "tadic/error.hpp"

#include <cctype>
#include <utility>

namespace tadic::detail {

namespace {

void trim(std::vector<unsigned>& key)
{
    while (!key.empty() && key.back() == 0)
        key.pop_back();
}

void add_into(TermMap& into, const Rational& e, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = into.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            into.erase(it);
    }
}

LiteralPoly constant_poly(const Rational& c)
{
    LiteralPoly p;
    if (sgn(c) != 0)
        p.terms[{}][Rational(0)] = c;
    return p;
}

LiteralPoly add(const LiteralPoly& a, const LiteralPoly& b, bool negate_b)
{
    LiteralPoly r = a;
    r.max_var = std::max(a.max_var, b.max_var);
    for (const auto& [key, tm] : b.terms) {
        auto& dst = r.terms[key];
        for (const auto& [e, c] : tm)
            add_into(dst, e, negate_b ? Rational(-c) : c);
        if (dst.empty())
            r.terms.erase(key);
    }
    return r;
}

LiteralPoly mul(const LiteralPoly& a, const LiteralPoly& b)
{
    LiteralPoly r;
    r.max_var = std::max(a.max_var, b.max_var);
    for (const auto& [ka, ta] : a.terms) {
        for (const auto& [kb, tb] : b.terms) {
            std::vector<unsigned> key(std::max(ka.size(), kb.size()), 0u);
            for (std::size_t i = 0; i < ka.size(); ++i)
                key[i] += ka[i];
            for (std::size_t i = 0; i < kb.size(); ++i)
                key[i] += kb[i];
            trim(key);
            auto& dst = r.terms[key];
            for (const auto& [ea, ca] : ta)
                for (const auto& [eb, cb] : tb)
                    add_into(dst, Rational(ea + eb), Rational(ca * cb));
            if (dst.empty())
                r.terms.erase(key);
        }
    }
    return r;
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    ParsedLiteral read()
    {
        ParsedLiteral out;
        skip_ws();
        if (peek() == 'O' && peek(1) == '(') {
            advance();
            advance();
            skip_ws();
            expect('t');
            skip_ws();
            expect('^');
            out.big_o = read_exponent();
            skip_ws();
            expect(')');
            skip_ws();
            if (!at_end())
                fail("unexpected trailing input");
            return out;
        }
        out.poly = expr();
        skip_ws();
        if (peek() == '(') {
            advance();
            skip_ws();
            std::string word = identifier();
            skip_ws();
            if (word == "mod") {
                expect('t');
                skip_ws();
                expect('^');
                skip_ws();
                out.suffix = SuffixKind::mod;
                out.suffix_value = Rational(integer());
            } else if (word == "cutoff") {
                out.suffix = SuffixKind::cutoff;
                bool neg = false;
                if (peek() == '-') {
                    neg = true;
                    advance();
                }
                out.suffix_value = number();
                if (neg)
                    out.suffix_value = -out.suffix_value;
            } else {
                fail("expected 'mod' or 'cutoff' suffix");
            }
            skip_ws();
            expect(')');
            skip_ws();
        }
        if (!at_end())
            fail("unexpected trailing input");
        return out;
    }

private:
    LiteralPoly expr()
    {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            advance();
        }
        LiteralPoly acc = term();
        if (negate)
            acc = add(LiteralPoly{{}, acc.max_var}, acc, true);
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-')
                return acc;
            bool minus = peek() == '-';
            advance();
            acc = add(acc, term(), minus);
        }
    }

    LiteralPoly term()
    {
        LiteralPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*')
                return acc;
            advance();
            acc = mul(acc, factor());
        }
    }

    LiteralPoly factor()
    {
        skip_ws();
        std::size_t start = pos_;
        LiteralPoly base = primary();
        skip_ws();
        if (peek() != '^')
            return base;
        advance();
        Rational e = read_exponent();
        if (e.get_den() == 1 && sgn(e) >= 0) {
            LiteralPoly r = constant_poly(1);
            r.max_var = base.max_var;
            for (long k = e.get_num().get_si(); k > 0; --k)
                r = mul(r, base);
            return r;
        }
        // Negative or fractional powers only make sense for a single t-monomial.
        if (base.terms.size() != 1 || !base.terms.begin()->first.empty()
            || base.terms.begin()->second.size() != 1) {
            pos_ = start;
            fail("negative or fractional exponent needs a single t-power base");
        }
        auto [be, bc] = *base.terms.begin()->second.begin();
        Rational coeff;
        if (e.get_den() != 1) {
            if (bc != 1) {
                pos_ = start;
                fail("fractional exponent needs a unit-coefficient t-power base");
            }
            coeff = 1;
        } else {
            coeff = 1;
            Rational inv = 1 / bc;
            for (long k = -e.get_num().get_si(); k > 0; --k)
                coeff *= inv;
        }
        LiteralPoly r;
        r.terms[{}][Rational(be * e)] = coeff;
        return r;
    }

    LiteralPoly primary()
    {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return constant_poly(number());
        if (c == 't' && !is_ident_char(peek(1))) {
            advance();
            LiteralPoly p;
            p.terms[{}][Rational(1)] = 1;
            return p;
        }
        if (c == 'Y') {
            advance();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected variable index after 'Y'");
            long idx = integer();
            if (idx < 1 || idx > 64)
                fail("variable index out of range");
            std::vector<unsigned> key(static_cast<std::size_t>(idx), 0u);
            key.back() = 1;
            LiteralPoly p;
            p.terms[key][Rational(0)] = 1;
            p.max_var = static_cast<int>(idx);
            return p;
        }
        if (c == '(') {
            advance();
            LiteralPoly inner = expr();
            skip_ws();
            expect(')');
            return inner;
        }
        if (at_end())
            fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    Rational read_exponent()
    {
        skip_ws();
        if (peek() == '{') {
            advance();
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                advance();
            }
            Rational e = number();
            skip_ws();
            expect('}');
            return neg ? Rational(-e) : e;
        }
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected exponent");
        Rational e(integer());
        return neg ? Rational(-e) : e;
    }

    Rational number()
    {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected number");
        std::size_t start = pos_;
        mpz_class num = digits();
        mpz_class den = 1;
        if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            advance();
            den = digits();
            if (den == 0) {
                pos_ = start;
                fail("zero denominator");
            }
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    long integer()
    {
        std::size_t start = pos_;
        mpz_class v = digits();
        if (!v.fits_slong_p() || v > 1000000) {
            pos_ = start;
            fail("integer too large");
        }
        return v.get_si();
    }

    mpz_class digits()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            advance();
        if (start == pos_)
            fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (is_ident_char(peek()))
            advance();
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_ident_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    char peek(std::size_t ahead = 0) const
    {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    void advance() { ++pos_; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        int line = 1;
        int col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ParsedLiteral parse_literal(std::string_view text)
{
    return Reader(text).read();
}

int integer_exponent(const Rational& e, std::string_view what)
{
    if (e.get_den() != 1 || !e.get_num().fits_sint_p())
        throw ParseError(std::string(what) + ": exponent must be an integer", 1, 1);
    return static_cast<int>(e.get_num().get_si());
}

std::optional<int> mod_suffix(const ParsedLiteral& lit)
{
    if (lit.suffix == SuffixKind::cutoff)
        throw ParseError("unexpected cutoff suffix", 1, 1);
    if (lit.suffix == SuffixKind::none)
        return std::nullopt;
    return integer_exponent(lit.suffix_value, "precision");
}

std::string t_power_text(const Rational& e)
{
    if (sgn(e) == 0)
        return {};
    if (e == 1)
        return "t";
    if (e.get_den() == 1)
        return "t^" + e.get_str();
    return "t^{" + e.get_str() + "}";
}

SignedTerm make_term(const Rational& c, const std::string& body)
{
    SignedTerm st;
    st.negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (body.empty())
        st.text = mag.get_str();
    else if (mag == 1)
        st.text = body;
    else
        st.text = mag.get_str() + "*" + body;
    return st;
}

std::string join_terms(const std::vector<SignedTerm>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].text;
    }
    return out;
}

} // namespace tadic::detail
