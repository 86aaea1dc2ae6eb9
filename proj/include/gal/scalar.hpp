#pragma once

#include <optional>

#include "gal/upoly.hpp"

namespace gal {

// Element of K = k((t)) with exact representative t^shift * num/den where
// num, den are in k[t] with nonzero constant term (den monic, gcd(num,den)=1).
// shift >= 0 puts the element in R = k[t]_(t); shift < 0 is Laurent mode.
// The zero element has empty num and shift 0.
struct Scalar {
    UPoly num;
    UPoly den = UPoly{{FElem{1, 1}}};
    long shift = 0;

    bool is_zero() const { return num.is_zero(); }
};

class ScalarRing {
public:
    explicit ScalarRing(BaseField k) : k_(k) {}
    const BaseField& field() const { return k_; }

    Scalar zero() const { return Scalar{}; }
    Scalar one() const { return from_felem(k_.one()); }
    Scalar t(long e = 1) const;
    Scalar from_felem(const FElem& a) const;
    Scalar from_long(long n) const { return from_felem(k_.from_long(n)); }
    // num/den in k[t]; canonicalizes (strips shared t-powers into the shift).
    Scalar make(const UPoly& num, const UPoly& den, long shift = 0) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(const Scalar& a, long e) const;
    bool eq(const Scalar& a, const Scalar& b) const;
    bool is_one(const Scalar& a) const { return eq(a, one()); }

    // t-adic valuation, +inf on zero.
    Val valuation(const Scalar& a) const {
        return a.is_zero() ? Val::infinity() : Val::of(a.shift);
    }
    bool in_R(const Scalar& a) const { return a.is_zero() || a.shift >= 0; }
    // Constant term of an element of R (the reduction mod t).
    FElem residue(const Scalar& a) const;

    std::string str(const Scalar& a) const;

private:
    BaseField k_;
};

// Truncated t-adic expansion: coefficients of t^(j/e) for j = 0..prec-1.
// Arithmetic carries the minimum precision of the operands.
struct TruncatedSeries {
    std::vector<FElem> c;
    int prec = 0;
    int e = 1;

    FElem coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(c.size())) return FElem{0, 1};
        return c[static_cast<size_t>(j)];
    }
    // Valuation as a rational (index/e); nullopt when indistinguishable from 0.
    std::optional<Rat> valuation() const {
        for (int j = 0; j < prec; ++j)
            if (!coeff(j).is_zero()) return Rat(j, e);
        return std::nullopt;
    }
    bool is_zero_up_to_prec() const { return !valuation().has_value(); }
};

TruncatedSeries ts_make(const BaseField& k, std::vector<FElem> coeffs, int prec, int e = 1);
TruncatedSeries ts_add(const BaseField& k, const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const BaseField& k, const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const BaseField& k, const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_scale(const BaseField& k, const TruncatedSeries& a, const FElem& s);
// Inverse of a series with unit constant term, to the series' own precision.
TruncatedSeries ts_inv(const BaseField& k, const TruncatedSeries& a);
bool ts_eq(const TruncatedSeries& a, const TruncatedSeries& b);  // up to shared precision
std::string ts_str(const BaseField& k, const TruncatedSeries& a);

// t-adic expansion of a Scalar to O(t^N). Errors on Laurent elements
// (negative valuation cannot be represented with exponents >= 0).
TruncatedSeries truncate_series(const ScalarRing& S, const Scalar& a, int N);

}  // namespace gal
