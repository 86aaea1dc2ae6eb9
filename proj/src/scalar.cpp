#include "gal/scalar.hpp"

namespace gal {

Scalar ScalarRing::from_felem(const FElem& a) const {
    if (a.is_zero()) return Scalar{};
    Scalar s;
    s.num = up_const(a);
    s.den = up_const(k_.one());
    s.shift = 0;
    return s;
}

Scalar ScalarRing::t(long e) const {
    Scalar s = one();
    s.shift = e;
    return s;
}

Scalar ScalarRing::make(const UPoly& num0, const UPoly& den0, long shift) const {
    if (den0.is_zero()) throw error("Scalar: zero denominator");
    if (num0.is_zero()) return Scalar{};
    UPoly num = num0, den = den0;
    int on = up_order(num), od = up_order(den);
    // strip t-powers into the shift
    if (on > 0) {
        num.c.erase(num.c.begin(), num.c.begin() + on);
        shift += on;
    }
    if (od > 0) {
        den.c.erase(den.c.begin(), den.c.begin() + od);
        shift -= od;
    }
    UPoly g = up_gcd(k_, num, den);
    if (g.deg() > 0) {
        num = up_quo_exact(k_, num, g);
        den = up_quo_exact(k_, den, g);
    }
    FElem lcinv = k_.inv(den.lc());
    num = up_scale(k_, num, lcinv);
    den = up_scale(k_, den, lcinv);
    Scalar s;
    s.num = num;
    s.den = den;
    s.shift = shift;
    return s;
}

Scalar ScalarRing::add(const Scalar& a, const Scalar& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long m = std::min(a.shift, b.shift);
    UPoly na = up_shift(up_mul(k_, a.num, b.den), static_cast<int>(a.shift - m));
    UPoly nb = up_shift(up_mul(k_, b.num, a.den), static_cast<int>(b.shift - m));
    return make(up_add(k_, na, nb), up_mul(k_, a.den, b.den), m);
}

Scalar ScalarRing::neg(const Scalar& a) const {
    Scalar r = a;
    r.num = up_neg(k_, r.num);
    return r;
}

Scalar ScalarRing::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar ScalarRing::mul(const Scalar& a, const Scalar& b) const {
    if (a.is_zero() || b.is_zero()) return Scalar{};
    return make(up_mul(k_, a.num, b.num), up_mul(k_, a.den, b.den), a.shift + b.shift);
}

Scalar ScalarRing::inv(const Scalar& a) const {
    if (a.is_zero()) throw error("Scalar: inverse of zero");
    return make(a.den, a.num, -a.shift);
}

Scalar ScalarRing::pow(const Scalar& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar r = one(), b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool ScalarRing::eq(const Scalar& a, const Scalar& b) const {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.shift == b.shift && up_eq(a.num, b.num) && up_eq(a.den, b.den);
}

FElem ScalarRing::residue(const Scalar& a) const {
    if (a.is_zero()) return k_.zero();
    if (a.shift > 0) return k_.zero();
    if (a.shift < 0) throw error("Scalar: residue of element with negative valuation");
    return k_.div(a.num.constant_term(), a.den.constant_term());
}

std::string ScalarRing::str(const Scalar& a) const {
    if (a.is_zero()) return "0";
    std::string s;
    if (a.shift != 0) {
        s += "t";
        if (a.shift != 1) s += "^" + std::to_string(a.shift);
        s += "*";
    }
    bool par = a.num.deg() > 0;
    s += par ? "(" + up_str(k_, a.num) + ")" : up_str(k_, a.num);
    if (!(a.den.deg() == 0 && a.den.constant_term() == k_.one())) {
        s += "/(" + up_str(k_, a.den) + ")";
    }
    return s;
}

TruncatedSeries ts_make(const BaseField& k, std::vector<FElem> coeffs, int prec, int e) {
    if (prec < 1) throw error("TruncatedSeries: precision must be >= 1");
    if (e < 1) throw error("TruncatedSeries: ramification index must be >= 1");
    TruncatedSeries r;
    coeffs.resize(static_cast<size_t>(prec), k.zero());
    r.c = std::move(coeffs);
    r.prec = prec;
    r.e = e;
    return r;
}

static int common_prec(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.e != b.e) throw error("TruncatedSeries: ramification mismatch");
    return std::min(a.prec, b.prec);
}

TruncatedSeries ts_add(const BaseField& k, const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_prec(a, b);
    std::vector<FElem> c(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] = k.add(a.coeff(j), b.coeff(j));
    return ts_make(k, std::move(c), n, a.e);
}

TruncatedSeries ts_sub(const BaseField& k, const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_prec(a, b);
    std::vector<FElem> c(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] = k.sub(a.coeff(j), b.coeff(j));
    return ts_make(k, std::move(c), n, a.e);
}

TruncatedSeries ts_mul(const BaseField& k, const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = common_prec(a, b);
    std::vector<FElem> c(static_cast<size_t>(n), k.zero());
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j < n; ++j)
            c[static_cast<size_t>(i + j)] = k.add(c[static_cast<size_t>(i + j)], k.mul(a.coeff(i), b.coeff(j)));
    }
    return ts_make(k, std::move(c), n, a.e);
}

TruncatedSeries ts_scale(const BaseField& k, const TruncatedSeries& a, const FElem& s) {
    std::vector<FElem> c = a.c;
    for (auto& x : c) x = k.mul(x, s);
    return ts_make(k, std::move(c), a.prec, a.e);
}

TruncatedSeries ts_inv(const BaseField& k, const TruncatedSeries& a) {
    if (a.coeff(0).is_zero()) throw error("TruncatedSeries: inverse needs unit constant term");
    std::vector<FElem> c(static_cast<size_t>(a.prec), k.zero());
    FElem c0inv = k.inv(a.coeff(0));
    c[0] = c0inv;
    for (int j = 1; j < a.prec; ++j) {
        FElem s = k.zero();
        for (int i = 1; i <= j; ++i) s = k.add(s, k.mul(a.coeff(i), c[static_cast<size_t>(j - i)]));
        c[static_cast<size_t>(j)] = k.neg(k.mul(c0inv, s));
    }
    return ts_make(k, std::move(c), a.prec, a.e);
}

bool ts_eq(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.e != b.e) return false;
    int n = std::min(a.prec, b.prec);
    for (int j = 0; j < n; ++j)
        if (a.coeff(j) != b.coeff(j)) return false;
    return true;
}

std::string ts_str(const BaseField& k, const TruncatedSeries& a) {
    std::string s;
    bool first = true;
    for (int j = 0; j < a.prec; ++j) {
        if (a.coeff(j).is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        s += k.str(a.coeff(j));
        if (j > 0) {
            s += "*t";
            if (a.e == 1) {
                if (j > 1) s += "^" + std::to_string(j);
            } else {
                s += "^(" + std::to_string(j) + "/" + std::to_string(a.e) + ")";
            }
        }
    }
    if (first) s = "0";
    std::string p = std::to_string(a.prec);
    if (a.e != 1) p += "/" + std::to_string(a.e);
    return s + " + O(t^" + p + ")";
}

TruncatedSeries truncate_series(const ScalarRing& S, const Scalar& a, int N) {
    const BaseField& k = S.field();
    if (N < 1) throw error("truncate_series: precision must be >= 1");
    if (a.is_zero()) return ts_make(k, {}, N);
    if (a.shift < 0)
        throw error("truncate_series: requested precision lies below the Laurent shift " +
                    std::to_string(a.shift));
    std::vector<FElem> c(static_cast<size_t>(N), k.zero());
    // expand num/den, then shift by the t-power
    std::vector<FElem> inv(static_cast<size_t>(N), k.zero());
    FElem d0inv = k.inv(a.den.constant_term());
    inv[0] = d0inv;
    for (int j = 1; j < N; ++j) {
        FElem s = k.zero();
        for (int i = 1; i <= j; ++i) s = k.add(s, k.mul(a.den.coeff(i), inv[static_cast<size_t>(j - i)]));
        inv[static_cast<size_t>(j)] = k.neg(k.mul(d0inv, s));
    }
    for (int j = 0; j < N; ++j) {
        if (j < a.shift) continue;
        int jj = j - static_cast<int>(a.shift);
        FElem s = k.zero();
        for (int i = 0; i <= jj; ++i) s = k.add(s, k.mul(a.num.coeff(i), inv[static_cast<size_t>(jj - i)]));
        c[static_cast<size_t>(j)] = s;
    }
    return ts_make(k, std::move(c), N);
}

}  // namespace gal
