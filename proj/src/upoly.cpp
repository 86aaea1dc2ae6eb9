#include "gal/upoly.hpp"

namespace gal {

UPoly up_trim(UPoly a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
    return a;
}

UPoly up_zero() { return UPoly{}; }

UPoly up_const(const FElem& a) {
    if (a.is_zero()) return UPoly{};
    return UPoly{{a}};
}

UPoly up_monomial(const BaseField& k, int e) {
    UPoly r;
    r.c.assign(static_cast<size_t>(e) + 1, k.zero());
    r.c.back() = k.one();
    return r;
}

UPoly up_add(const BaseField& k, const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = k.add(a.coeff((int)i), b.coeff((int)i));
    return up_trim(r);
}

UPoly up_sub(const BaseField& k, const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = k.sub(a.coeff((int)i), b.coeff((int)i));
    return up_trim(r);
}

UPoly up_neg(const BaseField& k, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = k.neg(x);
    return r;
}

UPoly up_mul(const BaseField& k, const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
    }
    return up_trim(r);
}

UPoly up_scale(const BaseField& k, const UPoly& a, const FElem& s) {
    if (s.is_zero()) return UPoly{};
    UPoly r = a;
    for (auto& x : r.c) x = k.mul(x, s);
    return up_trim(r);
}

UPoly up_shift(const UPoly& a, int e) {
    if (a.is_zero()) return a;
    UPoly r;
    r.c.assign(a.c.size() + static_cast<size_t>(e), FElem{0, 1});
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + static_cast<size_t>(e)] = a.c[i];
    return r;
}

void up_divrem(const BaseField& k, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw error("UPoly division by zero");
    q = UPoly{};
    r = a;
    FElem lcinv = k.inv(b.lc());
    int db = b.deg();
    if (r.deg() >= db) q.c.assign(static_cast<size_t>(r.deg() - db) + 1, k.zero());
    while (!r.is_zero() && r.deg() >= db) {
        int sh = r.deg() - db;
        FElem f = k.mul(r.lc(), lcinv);
        q.c[static_cast<size_t>(sh)] = f;
        // r -= f * t^sh * b
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(i + sh);
            r.c[idx] = k.sub(r.c[idx], k.mul(f, b.c[static_cast<size_t>(i)]));
        }
        r = up_trim(r);
    }
    q = up_trim(q);
}

UPoly up_rem(const BaseField& k, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    up_divrem(k, a, b, q, r);
    return r;
}

UPoly up_quo_exact(const BaseField& k, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    up_divrem(k, a, b, q, r);
    if (!r.is_zero()) throw error("UPoly exact division has remainder");
    return q;
}

UPoly up_monic(const BaseField& k, const UPoly& a) {
    if (a.is_zero()) return a;
    return up_scale(k, a, k.inv(a.lc()));
}

UPoly up_gcd(const BaseField& k, UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = up_rem(k, a, b);
        a = b;
        b = r;
    }
    return up_monic(k, a);
}

UPoly up_derivative(const BaseField& k, const UPoly& a) {
    UPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = k.mul(a.c[i], k.from_long(static_cast<long>(i)));
    return up_trim(r);
}

UPoly up_pow(const BaseField& k, const UPoly& a, long e) {
    UPoly r = up_const(k.one()), b = a;
    while (e > 0) {
        if (e & 1) r = up_mul(k, r, b);
        b = up_mul(k, b, b);
        e >>= 1;
    }
    return r;
}

UPoly up_powmod(const BaseField& k, UPoly a, Int e, const UPoly& m) {
    UPoly r = up_const(k.one());
    a = up_rem(k, a, m);
    while (e > 0) {
        if ((e & 1) != 0) r = up_rem(k, up_mul(k, r, a), m);
        a = up_rem(k, up_mul(k, a, a), m);
        e >>= 1;
    }
    return r;
}

FElem up_eval(const BaseField& k, const UPoly& a, const FElem& x) {
    FElem r = k.zero();
    for (size_t i = a.c.size(); i-- > 0;) r = k.add(k.mul(r, x), a.c[i]);
    return r;
}

int up_order(const UPoly& a) {
    if (a.is_zero()) return -1;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!a.c[i].is_zero()) return static_cast<int>(i);
    return -1;
}

bool up_eq(const UPoly& a, const UPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

std::string up_str(const BaseField& k, const UPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        if (i == 0) {
            s += k.str(a.c[i]);
        } else {
            if (!(a.c[i] == k.one())) s += k.str(a.c[i]) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace gal
