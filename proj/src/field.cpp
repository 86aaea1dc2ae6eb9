#include "gal/field.hpp"

namespace gal {

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string Val::str() const {
    if (inf) return "+inf";
    return rat_str(v);
}

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BaseField BaseField::prime(long p) {
    if (!is_prime_long(p)) throw error("BaseField: " + std::to_string(p) + " is not prime");
    return BaseField(p);
}

static Int mod_norm(Int n, long p) {
    n %= p;
    if (n < 0) n += p;
    return n;
}

FElem BaseField::reduce(Int n, Int d) const {
    if (kind_ == Kind::Prime) {
        n = mod_norm(n, p_);
        if (d != 1) {
            Int dd = mod_norm(d, p_);
            if (dd == 0) throw error("division by zero in F_p");
            // Fermat inverse
            Int r = 1, b = dd;
            long e = p_ - 2;
            while (e > 0) {
                if (e & 1) r = mod_norm(r * b, p_);
                b = mod_norm(b * b, p_);
                e >>= 1;
            }
            n = mod_norm(n * r, p_);
        }
        return FElem{n, 1};
    }
    if (d == 0) throw error("division by zero in Q");
    if (d < 0) { n = -n; d = -d; }
    Int g = gcd(n, d);
    if (g != 0) { n /= g; d /= g; }
    if (n == 0) d = 1;
    return FElem{n, d};
}

FElem BaseField::from_int(const Int& n) const { return reduce(n, 1); }
FElem BaseField::from_rat(const Int& n, const Int& d) const { return reduce(n, d); }

FElem BaseField::add(const FElem& a, const FElem& b) const {
    return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}
FElem BaseField::sub(const FElem& a, const FElem& b) const {
    return reduce(a.num * b.den - b.num * a.den, a.den * b.den);
}
FElem BaseField::mul(const FElem& a, const FElem& b) const {
    return reduce(a.num * b.num, a.den * b.den);
}
FElem BaseField::neg(const FElem& a) const { return reduce(-a.num, a.den); }

FElem BaseField::inv(const FElem& a) const {
    if (a.is_zero()) throw error("inverse of zero");
    return reduce(a.den, a.num);
}

FElem BaseField::pow(const FElem& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    FElem r = one(), b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::string BaseField::str(const FElem& a) const {
    std::string s = a.num.str();
    if (a.den != 1) s += "/" + a.den.str();
    return s;
}

}  // namespace gal
