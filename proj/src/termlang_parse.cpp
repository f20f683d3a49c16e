#include "tadic/termlang.hpp"

#include "tadic/error.hpp"

#include <cctype>

namespace tadic {

namespace {

enum class Tok {
    end,
    number,
    ident,
    plus,
    minus,
    star,
    caret,
    lparen,
    rparen,
    comma,
    preceq,
    equals,
    amp,
    bar,
    bang,
    quantifier,
};

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

// Internal failure carrying a byte offset; converted to line:column at the
// outermost call.
struct Failure {
    std::size_t offset;
    std::string message;
};

std::pair<int, int> line_column(std::string_view text, std::size_t offset)
{
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
            ++col;
        }
    }
    return {line, col};
}

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
            }
            out.push_back({Tok::number, at, std::string(s.substr(at, i - at))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string word(s.substr(at, i - at));
            out.push_back({word == "forall" || word == "exists" ? Tok::quantifier : Tok::ident, at, word});
            continue;
        }
        struct Sym {
            std::string_view text;
            Tok kind;
        };
        static const Sym syms[] = {
            {"<<=", Tok::preceq}, {"≼", Tok::preceq}, {"∧", Tok::amp},        {"∨", Tok::bar},
            {"¬", Tok::bang}, {"∀", Tok::quantifier}, {"∃", Tok::quantifier}, {"+", Tok::plus},
            {"-", Tok::minus},     {"*", Tok::star},      {"^", Tok::caret},       {"(", Tok::lparen},
            {")", Tok::rparen},    {",", Tok::comma},     {"=", Tok::equals},      {"&", Tok::amp},
            {"|", Tok::bar},       {"!", Tok::bang},
        };
        bool matched = false;
        for (const auto& sym : syms) {
            if (starts(sym.text)) {
                out.push_back({sym.kind, at, std::string(sym.text)});
                i += sym.text.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::size_t len = 1;
            while (at + len < s.size() && (static_cast<unsigned char>(s[at + len]) & 0xC0) == 0x80)
                ++len;
            throw Failure{at, "unexpected character '" + std::string(s.substr(at, len)) + "'"};
        }
    }
    out.push_back({Tok::end, s.size(), ""});
    return out;
}

bool is_reserved(const std::string& w)
{
    return w == "t" || w == "D" || w == "co" || w == "abs" || w == "C" || w == "G";
}

TermPtr make(Term::Kind kind, std::vector<TermPtr> args, std::string name = {})
{
    return std::make_shared<const Term>(Term{kind, std::nullopt, std::move(name), std::move(args)});
}

TermPtr make_const(const LaurentElem& v)
{
    return std::make_shared<const Term>(Term{Term::Kind::constant, v, {}, {}});
}

FormulaPtr make_formula(Formula::Kind kind, std::vector<TermPtr> terms, std::vector<FormulaPtr> subs)
{
    return std::make_shared<const Formula>(Formula{kind, std::move(terms), std::move(subs)});
}

class Parser {
public:
    Parser(std::vector<Token> toks, const SeriesRegistry& reg, Precision cap)
        : toks_(std::move(toks)), reg_(reg), cap_(cap) {}

    TermPtr whole_term()
    {
        TermPtr t = term();
        expect_end();
        return t;
    }

    FormulaPtr whole_formula()
    {
        FormulaPtr f = disj();
        expect_end();
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { throw Failure{peek().offset, msg}; }

    void expect(Tok k, const char* what)
    {
        if (!at(k))
            fail(std::string("expected ") + what + describe_found());
        take();
    }

    std::string describe_found() const
    {
        if (at(Tok::end))
            return ", found end of input";
        return ", found '" + peek().text + "'";
    }

    void expect_end()
    {
        if (!at(Tok::end))
            fail("unexpected '" + peek().text + "'");
    }

    void reject_quantifier()
    {
        if (at(Tok::quantifier))
            fail("quantifiers are not supported; formulas must be quantifier-free");
    }

    // -- formulas ---------------------------------------------------------

    FormulaPtr disj()
    {
        FormulaPtr f = conj();
        while (at(Tok::bar)) {
            take();
            f = make_formula(Formula::Kind::disj, {}, {f, conj()});
        }
        return f;
    }

    FormulaPtr conj()
    {
        FormulaPtr f = negation();
        while (at(Tok::amp)) {
            take();
            f = make_formula(Formula::Kind::conj, {}, {f, negation()});
        }
        return f;
    }

    FormulaPtr negation()
    {
        reject_quantifier();
        if (at(Tok::bang)) {
            take();
            return make_formula(Formula::Kind::neg, {}, {negation()});
        }
        if (at(Tok::ident) && (peek().text == "C" || peek().text == "G") && peek(1).kind == Tok::lparen) {
            const bool is_c = peek().text == "C";
            take();
            take();
            TermPtr t = term();
            expect(Tok::rparen, "')'");
            return make_formula(is_c ? Formula::Kind::in_C : Formula::Kind::in_G, {t}, {});
        }
        if (at(Tok::lparen)) {
            // Either a parenthesized formula or a term opening a relation.
            const std::size_t save = pos_;
            std::optional<Failure> first;
            try {
                take();
                FormulaPtr f = disj();
                expect(Tok::rparen, "')'");
                if (!at(Tok::preceq) && !at(Tok::equals) && !at(Tok::plus) && !at(Tok::minus) && !at(Tok::star)
                    && !at(Tok::caret))
                    return f;
                throw Failure{peek().offset, "parenthesized formula used as a term"};
            } catch (const Failure& e) {
                first = e;
            }
            pos_ = save;
            try {
                return relation();
            } catch (const Failure& e) {
                throw e.offset >= first->offset ? e : *first;
            }
        }
        return relation();
    }

    FormulaPtr relation()
    {
        TermPtr lhs = term();
        Formula::Kind kind;
        if (at(Tok::preceq))
            kind = Formula::Kind::preceq;
        else if (at(Tok::equals))
            kind = Formula::Kind::equals;
        else
            fail("expected '<<=' or '='" + describe_found());
        take();
        TermPtr rhs = term();
        return make_formula(kind, {lhs, rhs}, {});
    }

    // -- terms ------------------------------------------------------------

    TermPtr term()
    {
        TermPtr t = product();
        while (at(Tok::plus) || at(Tok::minus)) {
            const bool minus = take().kind == Tok::minus;
            t = make(minus ? Term::Kind::sub : Term::Kind::add, {t, product()});
        }
        return t;
    }

    TermPtr product()
    {
        TermPtr t = unary();
        while (at(Tok::star)) {
            take();
            t = make(Term::Kind::mul, {t, unary()});
        }
        return t;
    }

    TermPtr unary()
    {
        if (at(Tok::minus)) {
            take();
            return make(Term::Kind::neg, {unary()});
        }
        return power();
    }

    TermPtr power()
    {
        const std::size_t atom_offset = peek().offset;
        const bool foldable = at(Tok::number) || (at(Tok::ident) && peek().text == "t");
        TermPtr base = atom();
        if (!at(Tok::caret))
            return base;
        take();
        bool negative = false;
        if (at(Tok::minus)) {
            take();
            negative = true;
        }
        if (!at(Tok::number) || peek().text.find('/') != std::string::npos)
            fail("expected an integer exponent" + describe_found());
        const std::size_t exp_offset = peek().offset;
        mpz_class ez(take().text);
        if (ez > 100000)
            throw Failure{exp_offset, "exponent too large"};
        long e = ez.get_si();
        if (negative)
            e = -e;
        if (foldable) {
            const LaurentElem& v = *base->value;
            if (v.is_exact_zero() && e < 0)
                throw Failure{atom_offset, "zero raised to a negative power"};
            if (v.is_exact_zero())
                return make_const(e == 0 ? LaurentElem::constant(cap_, 1) : v);
            return make_const(pow(v, e));
        }
        if (e < 0)
            throw Failure{exp_offset - (negative ? 1 : 0), "negative exponent on a non-constant term"};
        if (e == 0)
            return make_const(LaurentElem::constant(cap_, 1));
        TermPtr t = base;
        for (long k = 1; k < e; ++k)
            t = make(Term::Kind::mul, {t, base});
        return t;
    }

    TermPtr atom()
    {
        reject_quantifier();
        if (at(Tok::number)) {
            Rational q(take().text);
            q.canonicalize();
            return make_const(LaurentElem::constant(cap_, q));
        }
        if (at(Tok::lparen)) {
            take();
            TermPtr t = term();
            expect(Tok::rparen, "')'");
            return t;
        }
        if (!at(Tok::ident))
            fail("expected a term" + describe_found());
        const Token id = take();
        if (id.text == "t")
            return make_const(LaurentElem::t_power(cap_, 1));
        if (id.text == "D") {
            expect(Tok::lparen, "'(' after D");
            TermPtr a = term();
            expect(Tok::comma, "','");
            TermPtr b = term();
            expect(Tok::rparen, "')'");
            return make(Term::Kind::dcall, {a, b});
        }
        if (id.text == "co" || id.text == "abs") {
            expect(Tok::lparen, "'('");
            TermPtr a = term();
            expect(Tok::rparen, "')'");
            return make(id.text == "co" ? Term::Kind::co : Term::Kind::abs, {a});
        }
        if (id.text == "C" || id.text == "G")
            throw Failure{id.offset, "'" + id.text + "' is a predicate, not a term"};
        if (at(Tok::lparen)) {
            const RestrictedSeries* f = reg_.find(id.text);
            if (f == nullptr)
                throw Failure{id.offset, "unknown series '" + id.text + "'"};
            take();
            std::vector<TermPtr> args;
            if (!at(Tok::rparen)) {
                args.push_back(term());
                while (at(Tok::comma)) {
                    take();
                    args.push_back(term());
                }
            }
            if (args.size() != f->nvars())
                throw Failure{id.offset, "series '" + id.text + "' takes " + std::to_string(f->nvars())
                                             + " argument(s), got " + std::to_string(args.size())};
            expect(Tok::rparen, "')'");
            return make(Term::Kind::apply, std::move(args), id.text);
        }
        return make(Term::Kind::variable, {}, id.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const SeriesRegistry& reg_;
    Precision cap_;
};

template <typename F>
auto with_positions(std::string_view text, F&& body)
{
    try {
        return body();
    } catch (const Failure& f) {
        auto [line, col] = line_column(text, f.offset);
        throw ParseError(f.message, line, col);
    }
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

// Calls fn(name, literal, line, literal_column) for every definition line.
template <typename Fn>
void scan_definitions(std::string_view text, Fn&& fn)
{
    int line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line;
        std::size_t nl = text.find('\n', start);
        std::string_view row = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
        std::size_t hash = row.find('#');
        if (hash != std::string_view::npos)
            row = row.substr(0, hash);
        std::size_t first = row.find_first_not_of(" \t\r");
        if (first != std::string_view::npos) {
            std::size_t def = row.find(":=");
            if (def == std::string_view::npos)
                throw ParseError("expected 'name := literal'", line, static_cast<int>(first) + 1);
            std::string_view name = row.substr(first, def - first);
            while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
                name.remove_suffix(1);
            if (!is_identifier(name) || is_reserved(std::string(name)))
                throw ParseError("invalid name '" + std::string(name) + "'", line, static_cast<int>(first) + 1);
            std::string_view lit = row.substr(def + 2);
            const int col = static_cast<int>(def + 2) + 1;
            try {
                fn(std::string(name), lit, line);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), line, col + e.column() - 1);
            }
        }
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
}

} // namespace

void SeriesRegistry::add(const std::string& name, RestrictedSeries series)
{
    if (series.precision() != prec_)
        throw ContractViolation("series '" + name + "' has precision t^" + std::to_string(series.precision().levels())
                                + ", registry uses t^" + std::to_string(prec_.levels()));
    if (!entries_.emplace(name, std::move(series)).second)
        throw ContractViolation("series '" + name + "' is defined twice");
}

const RestrictedSeries* SeriesRegistry::find(const std::string& name) const
{
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

SeriesRegistry parse_registry(std::string_view text, std::optional<Precision> prec)
{
    std::optional<SeriesRegistry> reg;
    if (prec)
        reg.emplace(*prec);
    scan_definitions(text, [&](const std::string& name, std::string_view lit, int line) {
        try {
            // Without a session precision the first suffixed literal fixes it.
            RestrictedSeries s = reg ? parse_series(lit, reg->precision()) : parse_series(lit);
            if (!reg)
                reg.emplace(s.precision());
            reg->add(name, std::move(s));
        } catch (const ContractViolation& e) {
            throw ContractViolation("line " + std::to_string(line) + ": " + e.what());
        }
    });
    if (!reg)
        throw ContractViolation("empty registry without a precision");
    return *reg;
}

Environment parse_environment(std::string_view text, Precision cap)
{
    Environment env;
    scan_definitions(text, [&](const std::string& name, std::string_view lit, int line) {
        try {
            if (!env.emplace(name, parse_laurent(lit, cap)).second)
                throw ContractViolation("variable '" + name + "' is defined twice");
        } catch (const ContractViolation& e) {
            throw ContractViolation("line " + std::to_string(line) + ": " + e.what());
        }
    });
    return env;
}

TermPtr parse_term(std::string_view text, const SeriesRegistry& registry, Precision cap)
{
    return with_positions(text, [&] { return Parser(lex(text), registry, cap).whole_term(); });
}

FormulaPtr parse_formula(std::string_view text, const SeriesRegistry& registry, Precision cap)
{
    return with_positions(text, [&] { return Parser(lex(text), registry, cap).whole_formula(); });
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength: 1 sum, 2 product, 3 unary, 4 atom.
int strength(const Term& t)
{
    switch (t.kind) {
    case Term::Kind::add:
    case Term::Kind::sub:
        return 1;
    case Term::Kind::mul:
        return 2;
    case Term::Kind::neg:
        return 3;
    case Term::Kind::constant:
        return 4;
    default:
        return 4;
    }
}

std::string constant_text(const LaurentElem& v)
{
    if (v.is_exact_zero())
        return "0";
    if (v.is_nonzero() && v.is_full() && v.unit().is_constant()) {
        const Rational& c = v.unit().residue();
        const long k = v.valuation();
        if (k == 0 && sgn(c) > 0)
            return c.get_str();
        if (c == 1)
            return k == 1 ? "t" : "t^" + std::to_string(k);
    }
    throw ContractViolation("constant " + to_string(v) + " has no term syntax");
}

std::string print(const Term& t, int min_strength)
{
    std::string s;
    switch (t.kind) {
    case Term::Kind::constant:
        s = constant_text(*t.value);
        break;
    case Term::Kind::variable:
        s = t.name;
        break;
    case Term::Kind::neg:
        s = "-" + print(*t.args[0], 3);
        break;
    case Term::Kind::add:
    case Term::Kind::sub:
        s = print(*t.args[0], 1) + (t.kind == Term::Kind::add ? " + " : " - ") + print(*t.args[1], 2);
        break;
    case Term::Kind::mul:
        s = print(*t.args[0], 2) + "*" + print(*t.args[1], 3);
        break;
    case Term::Kind::dcall:
        s = "D(" + print(*t.args[0], 1) + ", " + print(*t.args[1], 1) + ")";
        break;
    case Term::Kind::co:
        s = "co(" + print(*t.args[0], 1) + ")";
        break;
    case Term::Kind::abs:
        s = "abs(" + print(*t.args[0], 1) + ")";
        break;
    case Term::Kind::apply:
        s = t.name + "(";
        for (std::size_t i = 0; i < t.args.size(); ++i)
            s += (i ? ", " : "") + print(*t.args[i], 1);
        s += ")";
        break;
    }
    return strength(t) < min_strength ? "(" + s + ")" : s;
}

// 1 disjunction, 2 conjunction, 3 negation and atoms.
std::string print(const Formula& f, int min_strength)
{
    std::string s;
    int own = 3;
    switch (f.kind) {
    case Formula::Kind::preceq:
        s = print(*f.terms[0], 1) + " <<= " + print(*f.terms[1], 1);
        break;
    case Formula::Kind::equals:
        s = print(*f.terms[0], 1) + " = " + print(*f.terms[1], 1);
        break;
    case Formula::Kind::in_C:
        s = "C(" + print(*f.terms[0], 1) + ")";
        break;
    case Formula::Kind::in_G:
        s = "G(" + print(*f.terms[0], 1) + ")";
        break;
    case Formula::Kind::neg: {
        const Formula& sub = *f.subs[0];
        const bool relation = sub.kind == Formula::Kind::preceq || sub.kind == Formula::Kind::equals;
        s = "!" + (relation ? "(" + print(sub, 1) + ")" : print(sub, 3));
        break;
    }
    case Formula::Kind::conj:
        own = 2;
        s = print(*f.subs[0], 2) + " & " + print(*f.subs[1], 3);
        break;
    case Formula::Kind::disj:
        own = 1;
        s = print(*f.subs[0], 1) + " | " + print(*f.subs[1], 2);
        break;
    }
    return own < min_strength ? "(" + s + ")" : s;
}

} // namespace

std::string to_string(const Term& t)
{
    return print(t, 1);
}

std::string to_string(const Formula& f)
{
    return print(f, 1);
}

bool same_term(const Term& a, const Term& b)
{
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size())
        return false;
    if (a.kind == Term::Kind::constant && !same_repr(*a.value, *b.value))
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!same_term(*a.args[i], *b.args[i]))
            return false;
    return true;
}

bool same_formula(const Formula& a, const Formula& b)
{
    if (a.kind != b.kind || a.terms.size() != b.terms.size() || a.subs.size() != b.subs.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (!same_term(*a.terms[i], *b.terms[i]))
            return false;
    for (std::size_t i = 0; i < a.subs.size(); ++i)
        if (!same_formula(*a.subs[i], *b.subs[i]))
            return false;
    return true;
}

} // namespace tadic
