#pragma once

#include <vector>

#include "gal/field.hpp"

namespace gal {

// Dense univariate polynomial over the base field k. Coefficient i is the
// coefficient of the i-th power; the vector carries no trailing zeros.
struct UPoly {
    std::vector<FElem> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    FElem coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return FElem{0, 1};
        return c[static_cast<size_t>(i)];
    }
    FElem lc() const { return c.empty() ? FElem{0, 1} : c.back(); }
    FElem constant_term() const { return coeff(0); }
};

UPoly up_trim(UPoly a);
UPoly up_zero();
UPoly up_const(const FElem& a);
UPoly up_monomial(const BaseField& k, int e);  // t^e
UPoly up_add(const BaseField& k, const UPoly& a, const UPoly& b);
UPoly up_sub(const BaseField& k, const UPoly& a, const UPoly& b);
UPoly up_neg(const BaseField& k, const UPoly& a);
UPoly up_mul(const BaseField& k, const UPoly& a, const UPoly& b);
UPoly up_scale(const BaseField& k, const UPoly& a, const FElem& s);
UPoly up_shift(const UPoly& a, int e);  // multiply by t^e, e >= 0
// Division with remainder; divisor must be nonzero.
void up_divrem(const BaseField& k, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly up_rem(const BaseField& k, const UPoly& a, const UPoly& b);
UPoly up_quo_exact(const BaseField& k, const UPoly& a, const UPoly& b);
UPoly up_gcd(const BaseField& k, UPoly a, UPoly b);  // monic gcd
UPoly up_monic(const BaseField& k, const UPoly& a);
UPoly up_derivative(const BaseField& k, const UPoly& a);
UPoly up_pow(const BaseField& k, const UPoly& a, long e);
UPoly up_powmod(const BaseField& k, UPoly a, Int e, const UPoly& m);
FElem up_eval(const BaseField& k, const UPoly& a, const FElem& x);
int up_order(const UPoly& a);  // order of vanishing at 0; -1 for the zero polynomial
bool up_eq(const UPoly& a, const UPoly& b);
std::string up_str(const BaseField& k, const UPoly& a, const std::string& var = "t");

}  // namespace gal
