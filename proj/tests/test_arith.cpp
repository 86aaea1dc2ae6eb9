#include <doctest.h>

#include <random>

#include "gal/newton.hpp"
#include "gal/scalar.hpp"

using namespace gal;

namespace {

Scalar parse_frac(const ScalarRing& S, std::vector<long> num, std::vector<long> den) {
    UPoly n, d;
    for (long c : num) n.c.push_back(S.field().from_long(c));
    for (long c : den) d.c.push_back(S.field().from_long(c));
    return S.make(up_trim(n), up_trim(d));
}

Scalar random_scalar(const ScalarRing& S, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> degd(0, 3);
    std::uniform_int_distribution<long> sh(-3, 3);
    UPoly n, d;
    int dn = degd(rng), dd = degd(rng);
    for (int i = 0; i <= dn; ++i) n.c.push_back(S.field().from_long(coeff(rng)));
    for (int i = 0; i <= dd; ++i) d.c.push_back(S.field().from_long(coeff(rng)));
    n = up_trim(n);
    d = up_trim(d);
    if (d.is_zero() || !d.constant_term().is_zero()) {
        // make sure the denominator is a unit at t = 0
        if (d.is_zero()) d = up_const(S.field().one());
        if (d.constant_term().is_zero()) d.c[0] = S.field().one();
    } else {
        d.c[0] = S.field().one();
    }
    if (n.is_zero()) return S.zero();
    return S.make(n, d, sh(rng));
}

}  // namespace

TEST_CASE("field arithmetic over Q and F_p") {
    BaseField Q = BaseField::rationals();
    CHECK(Q.add(Q.from_rat(1, 2), Q.from_rat(1, 3)) == Q.from_rat(5, 6));
    CHECK(Q.mul(Q.from_rat(-2, 3), Q.from_rat(3, 4)) == Q.from_rat(-1, 2));
    CHECK(Q.inv(Q.from_rat(-2, 5)) == Q.from_rat(-5, 2));

    BaseField F5 = BaseField::prime(5);
    CHECK(F5.add(F5.from_long(3), F5.from_long(4)) == F5.from_long(2));
    CHECK(F5.inv(F5.from_long(2)) == F5.from_long(3));
    CHECK(F5.pow(F5.from_long(2), 4) == F5.one());
    CHECK_THROWS_AS((void)BaseField::prime(6), error);
}

TEST_CASE("tadic_valuation on the stated examples") {
    ScalarRing S(BaseField::rationals());
    // t^3 -> 3
    CHECK(S.valuation(S.t(3)) == Val::of(3));
    // 0 -> +inf
    CHECK(S.valuation(S.zero()) == Val::infinity());
    // (2t^2 + t^5)/(1+t) -> 2
    Scalar s = parse_frac(S, {0, 0, 2, 0, 0, 1}, {1, 1});
    CHECK(S.valuation(s) == Val::of(2));
}

TEST_CASE("valuation axioms on random scalar pairs") {
    ScalarRing S(BaseField::rationals());
    std::mt19937_64 rng(20240915);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        Scalar a = random_scalar(S, rng), b = random_scalar(S, rng);
        Val va = S.valuation(a), vb = S.valuation(b);
        CHECK(S.valuation(S.mul(a, b)) == va + vb);
        Val vs = S.valuation(S.add(a, b));
        Val vmin = va < vb ? va : vb;
        CHECK(vmin <= vs);
        if (!(va == vb)) {
            CHECK(vs == vmin);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("scalar field arithmetic is exact") {
    ScalarRing S(BaseField::rationals());
    Scalar a = parse_frac(S, {1, 2}, {1, 0, 1});  // (1+2t)/(1+t^2)
    Scalar b = S.inv(a);
    CHECK(S.eq(S.mul(a, b), S.one()));
    CHECK(S.eq(S.sub(S.add(a, b), b), a));
    // (1+t)/(1+t) canonicalizes to 1
    Scalar c = parse_frac(S, {1, 1}, {1, 1});
    CHECK(S.eq(c, S.one()));
}

TEST_CASE("truncate_series on the stated examples") {
    ScalarRing S(BaseField::rationals());
    const BaseField& k = S.field();
    // 1/(1-t), N=4 -> 1 + t + t^2 + t^3
    Scalar g = parse_frac(S, {1}, {1, -1});
    TruncatedSeries ts = truncate_series(S, g, 4);
    for (int j = 0; j < 4; ++j) CHECK(ts.coeff(j) == k.one());
    CHECK(ts.prec == 4);
    // t^2, N=2 -> 0 + O(t^2)
    TruncatedSeries t2 = truncate_series(S, S.t(2), 2);
    CHECK(t2.is_zero_up_to_prec());
    // (1+t)/(1+t), N=3 -> 1 + O(t^3)
    TruncatedSeries u = truncate_series(S, parse_frac(S, {1, 1}, {1, 1}), 3);
    CHECK(u.coeff(0) == k.one());
    CHECK(u.coeff(1).is_zero());
    CHECK(u.coeff(2).is_zero());
    // Laurent elements are rejected
    CHECK_THROWS_AS((void)truncate_series(S, S.t(-1), 4), error);
}

TEST_CASE("series round-trip and truncation compatibility") {
    ScalarRing S(BaseField::rationals());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Scalar a = random_scalar(S, rng), b = random_scalar(S, rng);
        if (!S.in_R(a) || !S.in_R(b)) continue;
        int N = 6;
        TruncatedSeries lhs = truncate_series(S, S.mul(a, b), N);
        TruncatedSeries rhs = ts_mul(S.field(), truncate_series(S, a, N), truncate_series(S, b, N));
        CHECK(ts_eq(lhs, rhs));
        TruncatedSeries sum = ts_add(S.field(), truncate_series(S, a, N), truncate_series(S, b, N));
        CHECK(ts_eq(truncate_series(S, S.add(a, b), N), sum));
    }
    // exact round trip for polynomial numerators of degree < N with v >= 0
    Scalar a = parse_frac(S, {3, 0, -2, 1}, {1});
    TruncatedSeries ts = truncate_series(S, a, 6);
    UPoly back;
    back.c.assign(ts.c.begin(), ts.c.end());
    Scalar b = S.make(up_trim(back), up_const(S.field().one()));
    CHECK(S.eq(a, b));
}

TEST_CASE("newton_polygon on the stated examples") {
    ScalarRing S(BaseField::rationals());
    // z^2 - t: hull (0,1),(2,0); root valuations [(1/2, 2)]
    KPoly f = {S.neg(S.t(1)), S.zero(), S.one()};
    NewtonPolygon np = newton_polygon(S, f);
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == Rat(-1, 2));
    CHECK(np.segments[0].length == 2);
    CHECK(np.ord0 == 0);
    auto rv = root_valuations(np);
    REQUIRE(rv.size() == 1);
    CHECK(rv[0].first == Val::of(Rat(1, 2)));
    CHECK(rv[0].second == 2);

    // z^2 - tz: [(inf,1),(1,1)]
    KPoly g = {S.zero(), S.neg(S.t(1)), S.one()};
    auto rv2 = root_valuations(newton_polygon(S, g));
    REQUIRE(rv2.size() == 2);
    CHECK(rv2[0].first == Val::infinity());
    CHECK(rv2[0].second == 1);
    CHECK(rv2[1].first == Val::of(1));
    CHECK(rv2[1].second == 1);

    CHECK_THROWS_AS((void)newton_polygon(S, KPoly{}), error);
}

TEST_CASE("newton_polygon of z^2 - t z + t^3 agrees with lifted series roots") {
    ScalarRing S(BaseField::rationals());
    KPoly f = {S.t(3), S.neg(S.t(1)), S.one()};
    // oracle: lift both series roots to precision 6 and read their valuations
    PuiseuxResult pr = puiseux_roots(S, f, 6, 4);
    REQUIRE(pr.roots.size() == 2);
    std::vector<Rat> vals;
    for (const auto& r : pr.roots) {
        REQUIRE_FALSE(r.valuation.inf);
        vals.push_back(r.valuation.v);
        // verify by substitution: f(root) vanishes to high order
        Scalar z = S.zero();
        // rebuild the root scalar from its series (ram = 1 here)
        REQUIRE(r.ram == 1);
        UPoly p;
        p.c.assign(r.series.c.begin(), r.series.c.end());
        z = S.make(up_trim(p), up_const(S.field().one()));
        Scalar fz = kp_eval(S, f, z);
        CHECK((fz.is_zero() || fz.shift >= 6));
    }
    std::sort(vals.begin(), vals.end());
    CHECK(vals[0] == Rat(1));
    CHECK(vals[1] == Rat(2));
    // the polygon reports the same multiset of valuations
    auto rv = root_valuations(newton_polygon(S, f));
    REQUIRE(rv.size() == 2);
    CHECK(rv[0].first == Val::of(2));
    CHECK(rv[1].first == Val::of(1));
}

TEST_CASE("newton polygon of a product concatenates slopes") {
    ScalarRing S(BaseField::rationals());
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> degd(1, 5);
    std::uniform_int_distribution<long> sh(0, 4);
    std::uniform_int_distribution<int> zero(0, 3);
    auto random_kpoly = [&](int maxdeg) {
        KPoly f(static_cast<size_t>(maxdeg) + 1, S.zero());
        for (int i = 0; i <= maxdeg; ++i) {
            if (zero(rng) == 0 && i != maxdeg) continue;
            f[static_cast<size_t>(i)] = S.t(sh(rng));
        }
        return kp_trim(S, f);
    };
    for (int trial = 0; trial < 200; ++trial) {
        KPoly f = random_kpoly(degd(rng)), g = random_kpoly(degd(rng));
        if (f.empty() || g.empty()) continue;
        auto slopes = [&](const KPoly& h) {
            std::vector<Rat> v;
            for (auto& [val, len] : root_valuations(newton_polygon(S, h)))
                for (int i = 0; i < len; ++i) v.push_back(val.inf ? Rat(1000000) : val.v);
            std::sort(v.begin(), v.end());
            return v;
        };
        auto sf = slopes(f), sg = slopes(g), sfg = slopes(kp_mul(S, f, g));
        std::vector<Rat> merged = sf;
        merged.insert(merged.end(), sg.begin(), sg.end());
        std::sort(merged.begin(), merged.end());
        CHECK(merged == sfg);
    }
}

TEST_CASE("puiseux lifting across ramified slopes") {
    ScalarRing S(BaseField::rationals());
    // z^2 - t has the two roots +-t^(1/2)
    KPoly f = {S.neg(S.t(1)), S.zero(), S.one()};
    PuiseuxResult pr = puiseux_roots(S, f, 4, 4);
    REQUIRE(pr.roots.size() == 2);
    for (const auto& r : pr.roots) {
        CHECK(r.ram == 2);
        CHECK(r.valuation == Val::of(Rat(1, 2)));
    }
    // with e_max = 1 the ramified roots are not reachable
    PuiseuxResult pr1 = puiseux_roots(S, f, 4, 1);
    CHECK_FALSE(pr1.complete);
    CHECK(pr1.roots.empty());
}
