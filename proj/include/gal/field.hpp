#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rational-or-plus-infinity, the value type of t-adic valuations.
struct Val {
    bool inf = false;
    Rat v = 0;

    static Val infinity() { return Val{true, 0}; }
    static Val of(const Rat& r) { return Val{false, r}; }
    static Val of(long n) { return Val{false, Rat(n)}; }

    bool operator==(const Val& o) const {
        return inf == o.inf && (inf || v == o.v);
    }
    bool operator<(const Val& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return v < o.v;
    }
    bool operator<=(const Val& o) const { return *this < o || *this == o; }
    Val operator+(const Val& o) const {
        if (inf || o.inf) return infinity();
        return of(v + o.v);
    }
    std::string str() const;
};

std::string rat_str(const Rat& r);

// Element of the coefficient field k. For k = Q this is a reduced fraction;
// for k = F_p the value is stored as num in [0, p) with den = 1.
struct FElem {
    Int num = 0;
    Int den = 1;

    bool is_zero() const { return num == 0; }
    bool operator==(const FElem& o) const { return num == o.num && den == o.den; }
    bool operator!=(const FElem& o) const { return !(*this == o); }
    bool operator<(const FElem& o) const {  // canonical ordering for maps
        if (num != o.num) return num < o.num;
        return den < o.den;
    }
};

class BaseField {
public:
    enum class Kind { Rationals, Prime };

    BaseField() : kind_(Kind::Rationals), p_(0) {}
    static BaseField rationals() { return BaseField(); }
    static BaseField prime(long p);

    Kind kind() const { return kind_; }
    long p() const { return p_; }
    bool is_prime_field() const { return kind_ == Kind::Prime; }
    long characteristic() const { return is_prime_field() ? p_ : 0; }

    FElem zero() const { return FElem{0, 1}; }
    FElem one() const { return FElem{1, 1}; }
    FElem from_int(const Int& n) const;
    FElem from_long(long n) const { return from_int(Int(n)); }
    FElem from_rat(const Int& n, const Int& d) const;

    FElem add(const FElem& a, const FElem& b) const;
    FElem sub(const FElem& a, const FElem& b) const;
    FElem mul(const FElem& a, const FElem& b) const;
    FElem neg(const FElem& a) const;
    FElem inv(const FElem& a) const;
    FElem div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }
    FElem pow(const FElem& a, long e) const;

    bool eq(const BaseField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    std::string str(const FElem& a) const;

private:
    explicit BaseField(long p) : kind_(Kind::Prime), p_(p) {}
    FElem reduce(Int n, Int d) const;

    Kind kind_;
    long p_;
};

bool is_prime_long(long p);

}  // namespace gal
