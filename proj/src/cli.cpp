#include "tadic/cli.hpp"

#include "tadic/error.hpp"
#include "tadic/hahn.hpp"
#include "tadic/hensel.hpp"
#include "tadic/termlang.hpp"
#include "tadic/weierstrass.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

namespace tadic {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

// Human-readable "key = value" lines followed by one "key=value; ..." line.
int emit(std::ostream& out, const Fields& fields, std::optional<bool> check)
{
    for (const auto& [k, v] : fields)
        out << k << " = " << v << "\n";
    std::string block;
    for (const auto& [k, v] : fields)
        block += k + "=" + v + "; ";
    if (check)
        block += std::string("check=") + (*check ? "OK" : "FAILED");
    else if (!block.empty())
        block.resize(block.size() - 2);
    out << block << "\n";
    return check && !*check ? 1 : 0;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ContractViolation("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational parse_rational(const std::string& text)
{
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    const bool ok = !s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos
                    && s.find('-', 1) == std::string::npos && std::count(s.begin(), s.end(), '/') <= 1
                    && s.back() != '/' && s.front() != '/' && s.find("-/") == std::string::npos;
    if (!ok)
        throw ParseError("not a rational number: '" + text + "'", 1, 1);
    Rational q;
    q.set_str(s, 10);
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'", 1, 1);
    q.canonicalize();
    return q;
}

RestrictedSeries read_series(const std::string& text, std::optional<int> precision, std::size_t min_nvars = 0)
{
    return precision ? parse_series(text, Precision(*precision), min_nvars) : parse_series(text, min_nvars);
}

// Brings two series to a common variable count.
void align(RestrictedSeries& a, RestrictedSeries& b)
{
    const std::size_t n = std::max(a.nvars(), b.nvars());
    a = a.with_nvars(n);
    b = b.with_nvars(n);
}

struct Options {
    std::optional<int> precision;
    std::string registry;
    std::string env;
    std::string term;
    std::string formula;
    std::string f;
    std::string g;
    std::optional<unsigned> d;
    std::string poly;
    std::string start;
    std::string e;
    std::vector<std::string> y;
    std::string cutoff;
    std::string a;
    std::string gamma;
    std::vector<std::string> gens;
    unsigned depth = 1;
};

int cmd_eval(const Options& o, std::ostream& out)
{
    const Precision cap(*o.precision);
    const SeriesRegistry reg = o.registry.empty() ? SeriesRegistry(cap) : parse_registry(read_file(o.registry), cap);
    const Environment env = o.env.empty() ? Environment{} : parse_environment(read_file(o.env), cap);
    TermPtr t = parse_term(o.term, reg, cap);
    LaurentElem v = eval_term(*t, env, reg);
    return emit(out, {{"term", to_string(*t)}, {"value", to_string(v)}}, std::nullopt);
}

int cmd_check(const Options& o, std::ostream& out)
{
    const Precision cap(*o.precision);
    const SeriesRegistry reg = o.registry.empty() ? SeriesRegistry(cap) : parse_registry(read_file(o.registry), cap);
    const Environment env = o.env.empty() ? Environment{} : parse_environment(read_file(o.env), cap);
    FormulaPtr f = parse_formula(o.formula, reg, cap);
    const bool v = eval_formula(*f, env, reg);
    return emit(out, {{"formula", to_string(*f)}, {"truth", v ? "true" : "false"}}, std::nullopt);
}

int cmd_wdiv(const Options& o, std::ostream& out)
{
    RestrictedSeries f = read_series(o.f, o.precision);
    RestrictedSeries g = read_series(o.g, o.precision);
    align(f, g);
    DivRem qr = weierstrass_divide(f, g);
    const long d = static_cast<long>(*is_regular_in_last(f));
    const bool ok = qr.quotient * f + qr.remainder == g && qr.remainder.degree_in_last() < d;
    return emit(out, {{"q", to_string(qr.quotient)}, {"r", to_string(qr.remainder)}}, ok);
}

int cmd_wprep(const Options& o, std::ostream& out)
{
    const RestrictedSeries f = read_series(o.f, o.precision);
    PreparationResult p = weierstrass_prepare(f);
    const bool ok = p.unit * f == p.monic && is_unit(p.unit);
    return emit(out,
                {{"unit", to_string(p.unit)}, {"monic", to_string(p.monic)}, {"degree", std::to_string(p.degree)}},
                ok);
}

int cmd_regularize(const Options& o, std::ostream& out)
{
    const RestrictedSeries f = read_series(o.f, o.precision);
    Regularization r = regularize(f, o.d);
    const bool ok = td_inverse(r.transformed, r.d) == f;
    return emit(out,
                {{"d", std::to_string(r.d)},
                 {"transformed", to_string(r.transformed)},
                 {"degree", std::to_string(r.degree)}},
                ok);
}

int cmd_uninorm(const Options& o, std::ostream& out)
{
    const KSeries g = parse_kseries(o.g);
    UnivariateNormalForm nf = univariate_normalize(g);
    return emit(out,
                {{"mu", std::to_string(nf.mu)},
                 {"scale", to_string(nf.scale)},
                 {"unit", to_string(nf.unit)},
                 {"monic", to_string(nf.monic)}},
                normal_form_reproduces(g, nf));
}

int cmd_hensel(const Options& o, std::ostream& out)
{
    const Precision prec(*o.precision);
    const Poly1 p = parse_poly1(o.poly, prec);
    const AdicCoeff a = parse_coeff(o.start, prec);
    AdicCoeff b = a;
    bool ok = true;
    if (o.e.empty()) {
        b = hensel_root(p, a);
        ok = (b - a).ord() >= 1;
    } else {
        b = hensel_root_quadratic(p, a, parse_coeff(o.e, prec));
    }
    const AdicCoeff residual = p(b);
    ok = ok && residual.is_zero();
    return emit(out, {{"root", to_string(b)}, {"residual", to_string(residual)}}, ok);
}

int cmd_hahn_eval(const Options& o, std::ostream& out)
{
    const Rational cutoff = parse_rational(o.cutoff);
    std::vector<HahnSeries> ys;
    for (const auto& s : o.y)
        ys.push_back(parse_hahn(s, cutoff));
    const RestrictedSeries f = read_series(o.f, o.precision, ys.size());
    if (f.nvars() != ys.size())
        throw ContractViolation("series has " + std::to_string(f.nvars()) + " variables, got "
                                + std::to_string(ys.size()) + " points");
    return emit(out, {{"value", to_string(hahn_evaluate(f, ys, cutoff))}}, std::nullopt);
}

int cmd_truncate(const Options& o, std::ostream& out)
{
    const HahnSeries a = parse_hahn(o.a);
    return emit(out, {{"value", to_string(truncate(a, parse_rational(o.gamma)))}}, std::nullopt);
}

int cmd_closure(const Options& o, std::ostream& out)
{
    const Rational cutoff = parse_rational(o.cutoff);
    std::vector<HahnSeries> gens;
    for (const auto& s : o.gens)
        gens.push_back(parse_hahn(s, cutoff));
    std::vector<NamedSeries> registry;
    if (!o.registry.empty()) {
        const std::string text = read_file(o.registry);
        std::optional<Precision> prec;
        if (o.precision)
            prec = Precision(*o.precision);
        const SeriesRegistry reg = parse_registry(text, prec);
        for (const auto& [name, s] : reg.entries())
            registry.push_back({name, s});
    }
    ClosureSample cs = closure_sample(gens, registry, o.depth, cutoff);
    TruncationVerdict v = truncation_closed_on_sample(cs.members());
    for (const auto& x : cs.elements)
        out << "element = " << to_string(x) << "\n";
    Fields fields{{"elements", std::to_string(cs.elements.size())},
                  {"dimension", std::to_string(cs.basis.size())},
                  {"truncation_closed", v.closed ? "yes" : "no"}};
    if (!v.closed) {
        fields.push_back({"counterexample", to_string(*v.element)});
        fields.push_back({"gamma", v.gamma->get_str()});
    }
    return emit(out, fields, std::nullopt);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact t-adic series, Weierstrass division, Hensel lifting and valued-field terms", "tadic"};
    app.require_subcommand(1, 1);
    Options o;
    std::function<int(const Options&, std::ostream&)> handler;

    auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&handler, fn] { handler = fn; });
        return s;
    };
    auto precision_opt = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--precision", o.precision, "t-adic precision N")->check(CLI::Range(1, 100000));
        if (required)
            opt->required();
    };

    CLI::App* eval = sub("eval", "evaluate a term", cmd_eval);
    precision_opt(eval, true);
    eval->add_option("--registry", o.registry, "file of 'name := series' lines");
    eval->add_option("--env", o.env, "file of 'name := laurent' lines");
    eval->add_option("--term", o.term, "term text")->required();

    CLI::App* check = sub("check", "decide a quantifier-free formula", cmd_check);
    precision_opt(check, true);
    check->add_option("--registry", o.registry, "file of 'name := series' lines");
    check->add_option("--env", o.env, "file of 'name := laurent' lines");
    check->add_option("--formula", o.formula, "formula text")->required();

    CLI::App* wdiv = sub("wdiv", "Weierstrass division g = q f + r", cmd_wdiv);
    precision_opt(wdiv, false);
    wdiv->add_option("--f", o.f, "divisor, regular in the last variable")->required();
    wdiv->add_option("--g", o.g, "dividend")->required();

    CLI::App* wprep = sub("wprep", "Weierstrass preparation unit * f = monic", cmd_wprep);
    precision_opt(wprep, false);
    wprep->add_option("--f", o.f, "series regular in the last variable")->required();

    CLI::App* reg = sub("regularize", "make a series regular in the last variable", cmd_regularize);
    precision_opt(reg, false);
    reg->add_option("--f", o.f, "series with nonzero residue")->required();
    reg->add_option("--d", o.d, "parameter of T_d")->check(CLI::Range(1u, 64u));

    CLI::App* uni = sub("uninorm", "dominant-index normal form over K", cmd_uninorm);
    uni->add_option("--g", o.g, "series in Y1, t-exponents may be negative")->required();

    CLI::App* hen = sub("hensel", "lift a root", cmd_hensel);
    precision_opt(hen, true);
    hen->add_option("--poly", o.poly, "coefficients in ascending degree, comma separated")->required();
    hen->add_option("--start", o.start, "approximate root")->required();
    hen->add_option("--e", o.e, "e with P(a) = e P'(a)^2");

    CLI::App* he = sub("hahn-eval", "evaluate a series at Hahn series", cmd_hahn_eval);
    precision_opt(he, false);
    he->add_option("--f", o.f, "series")->required();
    he->add_option("--y", o.y, "evaluation point (repeat per variable)");
    he->add_option("--cutoff", o.cutoff, "rational cutoff")->required();

    CLI::App* tr = sub("truncate", "proper truncation of a Hahn series", cmd_truncate);
    tr->add_option("--a", o.a, "Hahn series")->required();
    tr->add_option("--gamma", o.gamma, "rational truncation point")->required();

    CLI::App* cl = sub("closure", "sample the closure of Hahn generators", cmd_closure);
    precision_opt(cl, false);
    cl->add_option("--gen", o.gens, "generator (repeatable)");
    cl->add_option("--registry", o.registry, "file of 'name := series' lines");
    cl->add_option("--depth", o.depth, "application depth")->check(CLI::Range(0u, 8u));
    cl->add_option("--cutoff", o.cutoff, "rational cutoff")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        return handler(o, out);
    } catch (const PrecisionExhausted& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const DivisionByZeroAtPrecision& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace tadic
