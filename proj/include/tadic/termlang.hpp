#pragma once

// Terms and quantifier-free formulas over K with restricted division, the
// maps co and abs, and applications of named restricted series.
//
// Grammar (whitespace insensitive):
//   formula := conj ('|' conj)*
//   conj    := neg ('&' neg)*
//   neg     := '!' neg | 'C' '(' term ')' | 'G' '(' term ')'
//            | '(' formula ')' | term ('<<=' | '=') term
//   term    := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' '-'? integer)?
//   atom    := rational | 't' | ident | ident '(' term (',' term)* ')'
//            | 'D' '(' term ',' term ')' | 'co' '(' term ')' | 'abs' '(' term ')'
//            | '(' term ')'
// Powers of 't' and of numbers fold to constants; other powers expand to
// products.  The unicode connectives and relation sign are accepted as
// aliases.

#include "tadic/series.hpp"
#include "tadic/valfield.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tadic {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { constant, variable, neg, add, sub, mul, dcall, co, abs, apply };

    Kind kind;
    std::optional<LaurentElem> value;  // constant
    std::string name;                  // variable or series name
    std::vector<TermPtr> args;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { preceq, equals, in_C, in_G, conj, disj, neg };

    Kind kind;
    std::vector<TermPtr> terms;
    std::vector<FormulaPtr> subs;
};

bool same_term(const Term& a, const Term& b);
bool same_formula(const Formula& a, const Formula& b);

class SeriesRegistry {
public:
    explicit SeriesRegistry(Precision prec) : prec_(prec) {}

    Precision precision() const noexcept { return prec_; }
    void add(const std::string& name, RestrictedSeries series);
    const RestrictedSeries* find(const std::string& name) const;
    const std::map<std::string, RestrictedSeries>& entries() const noexcept { return entries_; }

private:
    Precision prec_;
    std::map<std::string, RestrictedSeries> entries_;
};

using Environment = std::map<std::string, LaurentElem>;

// Line-based "name := literal" files with '#' comments.  Literals without a
// suffix take the given precision; errors carry the file's line and column.
// Without a precision the first literal's suffix fixes it.
SeriesRegistry parse_registry(std::string_view text, std::optional<Precision> prec);
Environment parse_environment(std::string_view text, Precision cap);

TermPtr parse_term(std::string_view text, const SeriesRegistry& registry, Precision cap);
FormulaPtr parse_formula(std::string_view text, const SeriesRegistry& registry, Precision cap);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

LaurentElem eval_term(const Term& t, const Environment& env, const SeriesRegistry& registry);
bool eval_formula(const Formula& f, const Environment& env, const SeriesRegistry& registry);

// The series in Y1..Yn (Y_i for vars[i]) that computes a term built from
// constants in R, ring operations and applications.
RestrictedSeries compose_series(const Term& t, const std::vector<std::string>& vars,
                                const SeriesRegistry& registry);

} // namespace tadic
