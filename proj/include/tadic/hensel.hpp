#pragma once

// Root lifting over A/t^N.

#include "tadic/coeff.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tadic {

// P(X) = sum c_i X^i over A/t^N; trailing zero coefficients are pruned.
class Poly1 {
public:
    Poly1(Precision prec, std::vector<AdicCoeff> coeffs);

    Precision precision() const noexcept { return prec_; }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<AdicCoeff>& coeffs() const noexcept { return coeffs_; }
    AdicCoeff coeff(std::size_t i) const;

    AdicCoeff operator()(const AdicCoeff& x) const;
    Poly1 derivative() const;
    // Taylor coefficients P_(i)(a), i = 0..deg, with P(a + x) = sum P_(i)(a) x^i.
    std::vector<AdicCoeff> taylor(const AdicCoeff& a) const;

private:
    Precision prec_;
    std::vector<AdicCoeff> coeffs_;
};

// Comma-separated coefficient literals in ascending degree, e.g. "-1 - t, 0, 1".
Poly1 parse_poly1(std::string_view text, Precision prec);
std::string to_string(const Poly1& p);

// The zero y in -1 + tA of 1 + y + sum_{i>=2} e a_i y^i, ord(e) >= 1.
// a[0] holds a_2.  Computed by substituting X = -a + eY and squaring e.
AdicCoeff solve_special(const AdicCoeff& e, std::span<const AdicCoeff> a);
// The same zero by the fixed-point iteration y <- -1 - sum e a_i y^i.
AdicCoeff solve_special_fixed_point(const AdicCoeff& e, std::span<const AdicCoeff> a);

// Newton lifting from a with P(a) = 0 mod t and P'(a) a unit.
AdicCoeff hensel_root(const Poly1& p, const AdicCoeff& a);

// The root b with b - a in e P'(a) A, given P(a) = e P'(a)^2 and ord(e) >= 1.
AdicCoeff hensel_root_quadratic(const Poly1& p, const AdicCoeff& a, const AdicCoeff& e);

} // namespace tadic
