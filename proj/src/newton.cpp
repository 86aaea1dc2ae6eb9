#include "gal/newton.hpp"

#include <algorithm>
#include <numeric>

namespace gal {

KPoly kp_trim(const ScalarRing& S, KPoly f) {
    (void)S;
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int kp_deg(const KPoly& f) { return static_cast<int>(f.size()) - 1; }

KPoly kp_add(const ScalarRing& S, const KPoly& a, const KPoly& b) {
    KPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        Scalar x = i < a.size() ? a[i] : S.zero();
        Scalar y = i < b.size() ? b[i] : S.zero();
        r[i] = S.add(x, y);
    }
    return kp_trim(S, r);
}

KPoly kp_mul(const ScalarRing& S, const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, S.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = S.add(r[i + j], S.mul(a[i], b[j]));
    return kp_trim(S, r);
}

KPoly kp_derivative(const ScalarRing& S, const KPoly& f) {
    KPoly r;
    for (size_t i = 1; i < f.size(); ++i)
        r.push_back(S.mul(f[i], S.from_long(static_cast<long>(i))));
    return kp_trim(S, r);
}

Scalar kp_eval(const ScalarRing& S, const KPoly& f, const Scalar& x) {
    Scalar r = S.zero();
    for (size_t i = f.size(); i-- > 0;) r = S.add(S.mul(r, x), f[i]);
    return r;
}

std::string kp_str(const ScalarRing& S, const KPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::string s;
    bool first = true;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        s += "(" + S.str(f[i]) + ")";
        if (i >= 1) {
            s += "*" + var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

NewtonPolygon newton_polygon(const ScalarRing& S, const KPoly& f0) {
    KPoly f = kp_trim(S, f0);
    if (f.empty()) throw error("newton_polygon: zero polynomial");
    NewtonPolygon np;
    int n = kp_deg(f);
    int ord = 0;
    while (ord <= n && f[static_cast<size_t>(ord)].is_zero()) ++ord;
    np.ord0 = ord;
    // lower hull of (i, v(a_i)), i = ord..n
    std::vector<std::pair<long, Rat>> pts;
    for (int i = ord; i <= n; ++i) {
        if (f[static_cast<size_t>(i)].is_zero()) continue;
        pts.emplace_back(i, Rat(f[static_cast<size_t>(i)].shift));
    }
    std::vector<std::pair<long, Rat>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below the segment from a to p
            Rat lhs = (b.second - a.second) * (p.first - a.first);
            Rat rhs = (p.second - a.second) * (b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(p);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        NewtonSegment seg;
        seg.slope = (hull[i + 1].second - hull[i].second) / Rat(hull[i + 1].first - hull[i].first);
        seg.length = static_cast<int>(hull[i + 1].first - hull[i].first);
        np.segments.push_back(seg);
    }
    return np;
}

std::vector<std::pair<Val, int>> root_valuations(const NewtonPolygon& np) {
    std::vector<std::pair<Val, int>> r;
    if (np.ord0 > 0) r.emplace_back(Val::infinity(), np.ord0);
    for (const auto& seg : np.segments) r.emplace_back(Val::of(-seg.slope), seg.length);
    return r;
}

// ---------------------------------------------------------------- k-roots

static std::vector<Int> small_divisors(Int n, bool& complete) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    if (n == 0) return divs;
    Int bound = 1000000;
    std::vector<std::pair<Int, int>> fac;
    Int m = n;
    for (Int d = 2; d * d <= m; ++d) {
        if (d > bound) {
            complete = false;
            break;
        }
        while (m % d == 0) {
            if (!fac.empty() && fac.back().first == d) fac.back().second++;
            else fac.emplace_back(d, 1);
            m /= d;
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    divs.push_back(1);
    for (auto& [p, e] : fac) {
        size_t sz = divs.size();
        Int pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

std::vector<std::pair<FElem, int>> field_roots(const BaseField& k, const UPoly& f0, bool& complete) {
    complete = true;
    std::vector<std::pair<FElem, int>> out;
    UPoly f = up_trim(f0);
    if (f.is_zero()) throw error("field_roots: zero polynomial");
    auto record = [&](const FElem& c) {
        int mult = 0;
        UPoly lin;  // x - c
        lin.c = {k.neg(c), k.one()};
        for (;;) {
            UPoly q, r;
            up_divrem(k, f, lin, q, r);
            if (!r.is_zero()) break;
            f = q;
            ++mult;
            if (f.deg() < 1) break;
        }
        if (mult > 0) out.emplace_back(c, mult);
    };
    if (k.is_prime_field()) {
        for (long a = 0; a < k.p() && f.deg() > 0; ++a) {
            FElem c = k.from_long(a);
            if (up_eval(k, f, c).is_zero()) record(c);
        }
        if (f.deg() > 0) complete = false;  // roots live in an extension field
        return out;
    }
    // Q: rational root search on the integer-cleared polynomial
    if (f.deg() < 1) return out;
    if (up_eval(k, f, k.zero()).is_zero()) record(k.zero());
    if (f.deg() < 1) return out;
    Int denlcm = 1;
    for (const auto& a : f.c) denlcm = lcm(denlcm, a.den);
    Int a0 = 0, an = 0;
    {
        std::vector<Int> ic;
        for (const auto& a : f.c) ic.push_back(a.num * (denlcm / a.den));
        size_t lo = 0;
        while (lo < ic.size() && ic[lo] == 0) ++lo;
        a0 = ic[lo];
        an = ic.back();
    }
    auto dn = small_divisors(a0, complete);
    auto dd = small_divisors(an, complete);
    for (const auto& p : dn)
        for (const auto& q : dd) {
            for (int sgn : {1, -1}) {
                if (f.deg() < 1) return out;
                FElem c = k.from_rat(sgn * p, q);
                if (up_eval(k, f, c).is_zero()) record(c);
            }
        }
    if (f.deg() > 0) complete = false;  // leftover irrational factor
    return out;
}

// ---------------------------------------------------------- Puiseux lifting

static UPoly up_inflate(const UPoly& a, int e) {
    if (a.is_zero() || e == 1) return a;
    UPoly r;
    r.c.assign(static_cast<size_t>(a.deg()) * e + 1, FElem{0, 1});
    for (int i = 0; i <= a.deg(); ++i) r.c[static_cast<size_t>(i) * e] = a.coeff(i);
    return r;
}

static Scalar scalar_inflate(const Scalar& s, int e) {
    if (s.is_zero() || e == 1) return s;
    Scalar r;
    r.num = up_inflate(s.num, e);
    r.den = up_inflate(s.den, e);
    r.shift = s.shift * e;
    return r;
}

namespace {

// A lifted root living in k(w) with w = (ambient variable)^(1/ram).
struct LiftRoot {
    Scalar approx;
    int ram = 1;
    int mult = 1;
    bool exact_zero = false;
};

struct Lifter {
    const ScalarRing& S;
    int prec;
    bool complete = true;

    std::vector<LiftRoot> lift(KPoly f, int depth, int ram_budget) {
        std::vector<LiftRoot> out;
        f = kp_trim(S, f);
        if (kp_deg(f) < 1) return out;
        NewtonPolygon np = newton_polygon(S, f);
        if (np.ord0 > 0) {
            LiftRoot z;
            z.approx = S.zero();
            z.mult = np.ord0;
            z.exact_zero = true;
            out.push_back(z);
        }
        long E = 1;
        for (const auto& seg : np.segments) {
            Rat mq0 = -seg.slope;
            Int d = denominator(mq0);
            if (d > ram_budget) {
                complete = false;
                continue;
            }
            long dl = static_cast<long>(d);
            long ch = S.field().characteristic();
            if (ch != 0 && dl % ch == 0) {
                complete = false;  // wild slope, outside the tame search space
                continue;
            }
            long l = std::lcm(E, dl);
            if (l > ram_budget) {
                complete = false;
                continue;
            }
            E = l;
        }
        KPoly g(f.size());
        for (size_t i = 0; i < f.size(); ++i) g[i] = scalar_inflate(f[i], static_cast<int>(E));
        NewtonPolygon npE = newton_polygon(S, g);
        for (const auto& seg : npE.segments) {
            Rat mq = -seg.slope;
            if (denominator(mq) != 1) continue;  // flagged incomplete above
            long m = static_cast<long>(numerator(mq));
            UPoly rho = residual(g, m);
            bool rc = true;
            auto cs = field_roots(S.field(), rho, rc);
            if (!rc) complete = false;
            for (auto& [c, r] : cs) {
                if (c.is_zero()) continue;
                KPoly h = translate(g, m, c);
                if (r == 1) {
                    LiftRoot z;
                    z.approx = newton_refine(h, m, c);
                    z.ram = static_cast<int>(E);
                    out.push_back(z);
                } else {
                    if (depth <= 0) {
                        complete = false;
                        continue;
                    }
                    auto sub = lift(h, depth - 1, ram_budget / static_cast<int>(E));
                    for (auto& sr : sub) {
                        Val v = S.valuation(sr.approx);
                        if (!sr.exact_zero && !(Val::of(0) < v)) continue;  // sibling branches
                        LiftRoot z;
                        Scalar inner = S.add(scalar_inflate(S.from_felem(c), 1), sr.approx);
                        z.approx = S.mul(S.t(m * sr.ram), inner);
                        z.ram = static_cast<int>(E) * sr.ram;
                        z.mult = sr.mult;
                        out.push_back(z);
                    }
                }
            }
        }
        return out;
    }

    UPoly residual(const KPoly& g, long m) {
        long base = -1;
        bool first = true;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i].is_zero()) continue;
            long v = g[i].shift + static_cast<long>(i) * m;
            if (first || v < base) base = v;
            first = false;
        }
        UPoly rho;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i].is_zero()) continue;
            long v = g[i].shift + static_cast<long>(i) * m;
            if (v != base) continue;
            FElem lead = S.field().div(g[i].num.constant_term(), g[i].den.constant_term());
            while (rho.c.size() <= i) rho.c.push_back(S.field().zero());
            rho.c[i] = lead;
        }
        return up_trim(rho);
    }

    KPoly translate(const KPoly& g, long m, const FElem& c) {
        // h(y) = g(u^m (c+y)), normalized by its content valuation
        Scalar um = S.t(m);
        Scalar cs = S.from_felem(c);
        KPoly h;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i].is_zero()) continue;
            Scalar coeff = S.mul(g[i], S.pow(um, static_cast<long>(i)));
            KPoly base = {cs, S.one()};
            KPoly powi = {S.one()};
            for (size_t j = 0; j < i; ++j) powi = kp_mul(S, powi, base);
            for (auto& a : powi) a = S.mul(a, coeff);
            h = kp_add(S, h, powi);
        }
        long w = 0;
        bool first = true;
        for (const auto& a : h) {
            if (a.is_zero()) continue;
            if (first || a.shift < w) w = a.shift;
            first = false;
        }
        Scalar uw = S.t(-w);
        for (auto& a : h) a = S.mul(a, uw);
        return h;
    }

    Scalar newton_refine(const KPoly& h, long m, const FElem& c) {
        KPoly dh = kp_derivative(S, h);
        Scalar y = S.zero();
        for (int it = 0; it < 64; ++it) {
            Scalar hy = kp_eval(S, h, y);
            if (hy.is_zero()) break;
            Scalar dhy = kp_eval(S, dh, y);
            if (dhy.is_zero()) {
                complete = false;
                break;
            }
            long gap = hy.shift - dhy.shift;
            if (gap > prec + std::abs(m) + 8) break;
            y = S.sub(y, S.div(hy, dhy));
        }
        return S.mul(S.t(m), S.add(S.from_felem(c), y));
    }
};

}  // namespace

PuiseuxResult puiseux_roots(const ScalarRing& S, const KPoly& f, int prec, int e_max) {
    PuiseuxResult res;
    KPoly g = kp_trim(S, f);
    if (g.empty()) throw error("puiseux_roots: zero polynomial");
    Lifter L{S, prec};
    auto roots = L.lift(g, kp_deg(g) + 2, std::max(1, e_max));
    res.complete = L.complete;
    for (auto& r : roots) {
        PuiseuxRoot pr;
        pr.ram = r.ram;
        pr.multiplicity = r.mult;
        if (r.exact_zero) {
            pr.valuation = Val::infinity();
            pr.series = ts_make(S.field(), {}, std::max(1, prec * r.ram), r.ram);
        } else {
            Val v = S.valuation(r.approx);
            pr.valuation = v.inf ? v : Val::of(v.v / r.ram);
            if (!v.inf && v.v >= 0) {
                TruncatedSeries ts = truncate_series(S, r.approx, std::max(1, prec * r.ram));
                ts.e = r.ram;
                pr.series = ts;
            } else {
                pr.series = ts_make(S.field(), {}, 1, r.ram);
            }
        }
        res.roots.push_back(std::move(pr));
    }
    return res;
}

}  // namespace gal
