#include "gal/integral.hpp"

#include <numeric>

namespace gal {

namespace {

// substitute t -> u^e, solve_var -> y, other chart var -> xi; returns a
// polynomial in y with exact scalar coefficients
KPoly specialize(const ScalarRing& S, const PolyRing& R, const MultiPoly& f, int t_idx,
                 int solve_idx, int other_idx, const Scalar& xi, int e) {
    KPoly out;
    for (const auto& [exp, coef] : f.terms) {
        Scalar c = S.from_felem(coef);
        c = S.mul(c, S.t(static_cast<long>(exp[static_cast<size_t>(t_idx)]) * e));
        if (other_idx >= 0 && exp[static_cast<size_t>(other_idx)] > 0)
            c = S.mul(c, S.pow(xi, exp[static_cast<size_t>(other_idx)]));
        int d = solve_idx >= 0 ? exp[static_cast<size_t>(solve_idx)] : 0;
        while (static_cast<int>(out.size()) <= d) out.push_back(S.zero());
        out[static_cast<size_t>(d)] = S.add(out[static_cast<size_t>(d)], c);
    }
    return kp_trim(S, out);
}

Scalar eval_poly(const ScalarRing& S, const PolyRing& R, const MultiPoly& f, int t_idx, int e,
                 const std::vector<std::pair<int, Scalar>>& assignment) {
    Scalar acc = S.zero();
    for (const auto& [exp, coef] : f.terms) {
        Scalar c = S.from_felem(coef);
        c = S.mul(c, S.t(static_cast<long>(exp[static_cast<size_t>(t_idx)]) * e));
        for (const auto& [vi, val] : assignment)
            if (exp[static_cast<size_t>(vi)] > 0) c = S.mul(c, S.pow(val, exp[static_cast<size_t>(vi)]));
        acc = S.add(acc, c);
    }
    (void)R;
    return acc;
}

std::vector<FElem> coefficient_candidates(const BaseField& k) {
    std::vector<FElem> out;
    if (k.is_prime_field()) {
        for (long a = 0; a < k.p(); ++a) out.push_back(k.from_long(a));
        return out;
    }
    for (long a : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) out.push_back(k.from_long(a));
    out.push_back(k.from_rat(1, 2));
    out.push_back(k.from_rat(-1, 2));
    return out;
}

constexpr int kSeriesPrec = 16;
constexpr long kValueMargin = 6;

}  // namespace

WitnessSearchResult place_witness_search(const MultiPoly& numerator, long tshift, const Chart& c,
                                         const Rat& r, int e_max) {
    const PolyRing& R = c.ring;
    int ti = c.t_index();
    std::vector<int> xvars;
    for (int i = 0; i < R.nvars(); ++i)
        if (i != ti) xvars.push_back(i);
    if (xvars.size() > 2) throw error("place_witness_search: chart has more than 2 variables");
    if (c.presentation.gens.size() > 1)
        throw error("place_witness_search: chart ideal is not principal");
    ScalarRing S(R.k);
    WitnessSearchResult res;
    res.exhausted_bounds = true;
    auto coeffs = coefficient_candidates(R.k);

    auto accept = [&](int ram, const std::vector<std::pair<int, Scalar>>& point) -> bool {
        // only integral points define maps Spec O_v -> chart
        for (const auto& [vi, val] : point)
            if (!val.is_zero() && val.shift < 0) return false;
        // valuations are in u-units with t = u^ram
        if (!c.presentation.gens.empty()) {
            Scalar fv = eval_poly(S, R, c.presentation.gens[0], ti, ram, point);
            if (!fv.is_zero() && fv.shift < (kSeriesPrec - 4) * ram) return false;  // not a point
        }
        Scalar av = eval_poly(S, R, numerator, ti, ram, point);
        Val v = S.valuation(av);
        if (v.inf) return false;  // indistinguishable from 0 at this precision
        Rat value = v.v / Rat(ram) - Rat(tshift);
        if (value > r) return false;
        if (value > kValueMargin) return false;  // too close to the precision radius
        PlaceWitness w;
        w.ram = ram;
        w.value = value;
        for (int xv : xvars) {
            for (const auto& [vi, val] : point)
                if (vi == xv) {
                    if (!val.is_zero() && val.shift < 0) {
                        w.coordinates.push_back(ts_make(R.k, {}, 1, ram));
                    } else {
                        TruncatedSeries ts = truncate_series(S, val, kSeriesPrec);
                        ts.e = ram;
                        w.coordinates.push_back(ts);
                    }
                }
        }
        w.verified = true;
        res.witness = w;
        return true;
    };

    // single constrained variable: solve the defining equation directly
    if (xvars.size() == 1 && !c.presentation.gens.empty()) {
        KPoly fx = specialize(S, R, c.presentation.gens[0], ti, xvars[0], -1, S.zero(), 1);
        if (kp_deg(fx) >= 1) {
            PuiseuxResult pr = puiseux_roots(S, fx, kSeriesPrec, e_max);
            if (!pr.complete) res.exhausted_bounds = false;
            for (const auto& root : pr.roots) {
                if (root.ram > e_max) {
                    res.exhausted_bounds = false;
                    continue;
                }
                Scalar x;
                if (root.valuation.inf) {
                    x = S.zero();
                } else {
                    UPoly p;
                    p.c.assign(root.series.c.begin(), root.series.c.end());
                    p = up_trim(p);
                    x = p.is_zero() ? S.zero() : S.make(p, up_const(R.k.one()));
                }
                if (accept(root.ram, {{xvars[0], x}})) return res;
            }
        }
        return res;
    }

    // candidate parameter values c * t^(j/e), small |j| first
    for (int e = 1; e <= e_max; ++e) {
        std::vector<int> jorder;
        for (int a = 0; a <= 2 * e; ++a) jorder.push_back(a);
        for (int j : jorder) {
            if (e > 1 && std::gcd(std::abs(j), e) != 1) continue;
            for (const auto& c0 : coeffs) {
                if (c0.is_zero() && j != 0) continue;
                Scalar xi = c0.is_zero() ? S.zero() : S.mul(S.from_felem(c0), S.t(j));
                if (xvars.size() == 1) {
                    if (accept(e, {{xvars[0], xi}})) return res;
                } else {
                    for (int which = 0; which < 2; ++which) {
                        int pvar = xvars[static_cast<size_t>(which)];
                        int svar = xvars[static_cast<size_t>(1 - which)];
                        if (c.presentation.gens.empty()) {
                            if (which == 0) continue;  // handled by pairs below
                            for (const auto& c1 : coeffs) {
                                Scalar eta = c1.is_zero() ? S.zero() : S.from_felem(c1);
                                if (accept(e, {{pvar, xi}, {svar, eta}})) return res;
                            }
                        } else {
                            KPoly fy = specialize(S, R, c.presentation.gens[0], ti, svar, pvar, xi, e);
                            if (kp_deg(fy) < 1) continue;
                            PuiseuxResult pr;
                            try {
                                pr = puiseux_roots(S, fy, kSeriesPrec, std::max(1, e_max / e));
                            } catch (const error&) {
                                continue;
                            }
                            if (!pr.complete) res.exhausted_bounds = false;
                            for (const auto& root : pr.roots) {
                                int ram = e * root.ram;
                                if (ram > e_max) {
                                    res.exhausted_bounds = false;
                                    continue;
                                }
                                Scalar y;
                                if (root.valuation.inf) {
                                    y = S.zero();
                                } else {
                                    // rebuild the exact approximation in u-units
                                    // series exponents are u-powers already
                                    if (root.series.prec < 1) {
                                        res.exhausted_bounds = false;
                                        continue;
                                    }
                                    UPoly p;
                                    p.c.assign(root.series.c.begin(), root.series.c.end());
                                    p = up_trim(p);
                                    if (p.is_zero() && !root.valuation.inf) {
                                        res.exhausted_bounds = false;
                                        continue;
                                    }
                                    y = p.is_zero() ? S.zero()
                                                    : S.make(p, up_const(R.k.one()));
                                }
                                Scalar xi_r = xi;
                                if (root.ram > 1 && !xi.is_zero()) {
                                    // re-express xi in the finer variable
                                    Scalar tmp = S.mul(S.from_felem(c0), S.t(static_cast<long>(j) * root.ram));
                                    xi_r = tmp;
                                }
                                if (accept(ram, {{pvar, xi_r}, {svar, y}})) return res;
                            }
                        }
                    }
                }
            }
        }
    }

    return res;
}

}  // namespace gal
