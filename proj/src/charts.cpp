#include "gal/integral.hpp"

#include <algorithm>
#include <functional>

namespace gal {

Chart make_chart(std::string name, PolyRing ring, std::vector<MultiPoly> gens,
                 bool domain_asserted) {
    if (ring.var_index("t") < 0) throw error("chart " + name + ": ring has no variable t");
    Chart c;
    c.name = std::move(name);
    c.ring = std::move(ring);
    c.presentation = make_ideal(c.ring, std::move(gens));
    c.domain_asserted = domain_asserted || c.presentation.gens.empty();
    return c;
}

namespace {

MultiPoly mp_det(const PolyRing& R, const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return mp_one(R);
    if (n == 1) return m[0][0];
    MultiPoly det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = mp_mul(R, m[0][j], mp_det(R, sub));
        det = (j % 2 == 0) ? mp_add(R, det, term) : mp_sub(R, det, term);
    }
    return det;
}

// all c x c minors of the Jacobian of gens with respect to vars
std::vector<MultiPoly> jacobian_minors(const PolyRing& R, const std::vector<MultiPoly>& gens,
                                       const std::vector<int>& vars, int c) {
    std::vector<MultiPoly> minors;
    int m = static_cast<int>(gens.size());
    int n = static_cast<int>(vars.size());
    if (c <= 0) {
        minors.push_back(mp_one(R));
        return minors;
    }
    if (c > m || c > n) return minors;  // empty: no minors of that size
    std::vector<int> ri(static_cast<size_t>(c)), ci(static_cast<size_t>(c));
    std::vector<std::vector<MultiPoly>> jac(static_cast<size_t>(m),
                                            std::vector<MultiPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            jac[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                mp_derivative(R, gens[static_cast<size_t>(i)], vars[static_cast<size_t>(j)]);
    // iterate over row and column subsets
    std::vector<int> rows(static_cast<size_t>(c)), cols(static_cast<size_t>(c));
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == c) {
            pick_cols(0, 0);
            return;
        }
        for (int i = start; i < m; ++i) {
            rows[static_cast<size_t>(depth)] = i;
            pick_rows(i + 1, depth + 1);
        }
    };
    pick_cols = [&](int start, int depth) {
        if (depth == c) {
            std::vector<std::vector<MultiPoly>> sub(static_cast<size_t>(c),
                                                    std::vector<MultiPoly>(static_cast<size_t>(c)));
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j)
                    sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        jac[static_cast<size_t>(rows[static_cast<size_t>(i)])]
                           [static_cast<size_t>(cols[static_cast<size_t>(j)])];
            MultiPoly d = mp_det(R, sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
            return;
        }
        for (int j = start; j < n; ++j) {
            cols[static_cast<size_t>(depth)] = j;
            pick_cols(j + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return minors;
}

Ideal ideal_add(const Ideal& I, std::vector<MultiPoly> extra) {
    std::vector<MultiPoly> gens = I.gens;
    for (auto& g : extra) gens.push_back(std::move(g));
    return make_ideal(I.ring, std::move(gens));
}

}  // namespace

ChartDiagnostics verify_chart(const Chart& c) {
    ChartDiagnostics d;
    const PolyRing& R = c.ring;
    int ti = c.t_index();
    MultiPoly t = mp_var(R, ti);
    Ideal sat = c.presentation.gens.empty() ? c.presentation : saturate(c.presentation, t);
    d.t_torsion_free = ideal_eq(sat, c.presentation);
    // Jacobian criterion on the generic fiber: derivatives in the chart
    // variables, singular locus must sit inside t = 0.
    std::vector<int> xvars;
    for (int i = 0; i < R.nvars(); ++i)
        if (i != ti) xvars.push_back(i);
    if (sat.gens.empty()) {
        d.generic_fiber_smooth = TriState::Yes;
        d.fiber_codim = 0;
        return d;
    }
    if (contains_one(sat)) {
        d.generic_fiber_smooth = TriState::Yes;  // empty fiber
        d.fiber_codim = 0;
        return d;
    }
    int dim = krull_dimension(sat);
    int c_codim = R.nvars() - dim;
    d.fiber_codim = c_codim;
    auto minors = jacobian_minors(R, sat.gens, xvars, c_codim);
    if (minors.empty()) {
        d.generic_fiber_smooth = TriState::No;
        return d;
    }
    Ideal singular = ideal_add(sat, minors);
    try {
        d.generic_fiber_smooth =
            radical_membership(t, singular) ? TriState::Yes : TriState::No;
    } catch (const error&) {
        d.generic_fiber_smooth = TriState::Unknown;
    }
    return d;
}

namespace {

struct Frac {
    MultiPoly num;
    MultiPoly den;
};

Frac frac_add(const PolyRing& R, const Frac& a, const Frac& b) {
    return Frac{mp_add(R, mp_mul(R, a.num, b.den), mp_mul(R, b.num, a.den)),
                mp_mul(R, a.den, b.den)};
}
Frac frac_mul(const PolyRing& R, const Frac& a, const Frac& b) {
    return Frac{mp_mul(R, a.num, b.num), mp_mul(R, a.den, b.den)};
}

// evaluate a polynomial of the extended ring as a fraction over the base ring
Frac frac_eval(const PolyRing& Rext, const MultiPoly& p, const PolyRing& Rbase,
               const std::vector<Frac>& images) {
    Frac acc{mp_zero(), mp_one(Rbase)};
    for (const auto& [e, coef] : p.terms) {
        Frac term{mp_const(Rbase, coef), mp_one(Rbase)};
        for (size_t i = 0; i < e.size(); ++i)
            for (int rep = 0; rep < e[i]; ++rep) term = frac_mul(Rbase, term, images[i]);
        acc = frac_add(Rbase, acc, term);
    }
    (void)Rext;
    return acc;
}

}  // namespace

NormalizationData normalize(const Chart& c, int round_cap) {
    if (!c.domain_asserted) throw error("normalize: chart " + c.name + " is not asserted a domain");
    const PolyRing& R0 = c.ring;
    NormalizationData nd;
    nd.ext_ring = R0;
    nd.ext_ideal = c.presentation;
    nd.rounds = 0;
    nd.module_denominator = mp_one(R0);

    PolyRing Rc = R0;
    Ideal Ic = c.presentation;
    // fraction over the original chart ring for every current variable
    std::vector<Frac> images;
    for (int i = 0; i < R0.nvars(); ++i) images.push_back(Frac{mp_var(R0, i), mp_one(R0)});
    std::vector<int> monic_degrees;
    Ideal last_test;

    for (int round = 0;; ++round) {
        if (round >= round_cap)
            throw error("normalize: iteration cap " + std::to_string(round_cap) + " exceeded");
        // test ideal: radical of the singular locus of the current ring
        int dim = Ic.gens.empty() ? Rc.nvars() : krull_dimension(Ic);
        int codim = Rc.nvars() - dim;
        std::vector<int> allvars;
        for (int i = 0; i < Rc.nvars(); ++i) allvars.push_back(i);
        auto minors = jacobian_minors(Rc, Ic.gens, allvars, codim);
        Ideal singular = ideal_add(Ic, minors);
        if (contains_one(singular)) {
            last_test = make_ideal(Rc, {mp_one(Rc)});
            break;  // smooth, hence normal
        }
        Ideal J = radical(singular);
        last_test = J;
        // pick a nonzerodivisor d in J \ I
        MultiPoly d;
        auto gbI = groebner_basis(Ic, MonomialOrder::grevlex());
        for (const auto& g : J.gens) {
            if (!normal_form(Rc, g, gbI, MonomialOrder::grevlex()).is_zero()) {
                d = g;
                break;
            }
        }
        if (d.is_zero()) throw error("normalize: test ideal collapsed into the presentation");
        // Hom(J, J) = ((d*J + I) : J) / d
        std::vector<MultiPoly> dJ;
        for (const auto& g : J.gens) dJ.push_back(mp_mul(Rc, d, g));
        Ideal H = quotient_ideal(ideal_add(Ic, dJ), J);
        Ideal dI = ideal_add(Ic, {d});
        std::vector<MultiPoly> new_nums;
        for (const auto& u : H.gens)
            if (!ideal_membership(u, dI)) new_nums.push_back(u);
        if (new_nums.empty()) break;  // Hom(J, J) = A: integrally closed

        // extend the ring by w_i = u_i / d
        std::vector<std::string> names;
        for (size_t i = 0; i < new_nums.size(); ++i)
            names.push_back("_n" + std::to_string(nd.n_new_vars + static_cast<int>(i)));
        PolyRing R2 = ring_extend(Rc, names);
        std::vector<int> vmap(static_cast<size_t>(Rc.nvars()));
        for (int i = 0; i < Rc.nvars(); ++i) vmap[static_cast<size_t>(i)] = i;
        std::vector<MultiPoly> gens2;
        for (const auto& g : Ic.gens) gens2.push_back(mp_lift(g, vmap, R2.nvars()));
        MultiPoly d2 = mp_lift(d, vmap, R2.nvars());
        Frac dfrac = frac_eval(Rc, d, R0, images);
        for (size_t i = 0; i < new_nums.size(); ++i) {
            MultiPoly w = mp_var(R2, Rc.nvars() + static_cast<int>(i));
            gens2.push_back(mp_sub(R2, mp_mul(R2, d2, w), mp_lift(new_nums[i], vmap, R2.nvars())));
            Frac ufrac = frac_eval(Rc, new_nums[i], R0, images);
            images.push_back(Frac{mp_mul(R0, ufrac.num, dfrac.den),
                                  mp_mul(R0, ufrac.den, dfrac.num)});
        }
        nd.n_new_vars += static_cast<int>(new_nums.size());
        Ideal I2 = saturate(make_ideal(R2, std::move(gens2)), d2);
        Rc = R2;
        Ic = I2;
        nd.rounds = round + 1;
    }

    nd.ext_ring = Rc;
    nd.ext_ideal = Ic;
    nd.conductor_witness = last_test;

    // monic integral equation for each adjoined variable
    for (int wi = R0.nvars(); wi < Rc.nvars(); ++wi) {
        std::vector<int> others;
        for (int j = R0.nvars(); j < Rc.nvars(); ++j)
            if (j != wi) others.push_back(j);
        Ideal E = others.empty() ? Ic : eliminate(Ic, others);
        // GB with w_i dominant exposes a generator with a pure w_i^d lead
        Ideal Ewi = E;
        MultiPoly best;
        int bestdeg = -1;
        // scan generators of several bases for a monic element
        std::vector<std::vector<MultiPoly>> candidates;
        candidates.push_back(Ewi.gens);
        candidates.push_back(groebner_basis(Ewi, MonomialOrder::lex()));
        candidates.push_back(groebner_basis(Ewi, MonomialOrder::grevlex()));
        for (const auto& basis : candidates) {
            for (const auto& g : basis) {
                int dw = 0;
                for (const auto& [e, coef] : g.terms) dw = std::max(dw, e[static_cast<size_t>(wi)]);
                if (dw <= 0) continue;
                // leading w_i-coefficient must be a nonzero constant
                MultiPoly lc;
                for (const auto& [e, coef] : g.terms) {
                    if (e[static_cast<size_t>(wi)] != dw) continue;
                    ExpVec e2 = e;
                    e2[static_cast<size_t>(wi)] = 0;
                    lc.terms.emplace(std::move(e2), coef);
                }
                if (lc.terms.size() != 1 || lc.total_degree() != 0) continue;
                if (bestdeg < 0 || dw < bestdeg) {
                    bestdeg = dw;
                    best = mp_scale(Rc, g, Rc.k.inv(lc.terms.begin()->second));
                }
            }
            if (bestdeg > 0) break;
        }
        if (bestdeg <= 0)
            throw error("normalize: no monic integral equation found for an adjoined variable");
        nd.monic_equations.push_back(best);
        monic_degrees.push_back(bestdeg);
    }

    // A-module generators: w-monomials below the monic staircase, as fractions
    std::vector<Frac> mod_gens;
    std::vector<int> alpha(monic_degrees.size(), 0);
    std::function<void(size_t)> enumerate = [&](size_t pos) {
        if (pos == alpha.size()) {
            Frac f{mp_one(R0), mp_one(R0)};
            for (size_t i = 0; i < alpha.size(); ++i)
                for (int rep = 0; rep < alpha[i]; ++rep)
                    f = frac_mul(R0, f, images[static_cast<size_t>(R0.nvars()) + i]);
            mod_gens.push_back(f);
            return;
        }
        for (alpha[pos] = 0; alpha[pos] < monic_degrees[pos]; ++alpha[pos]) enumerate(pos + 1);
        alpha[pos] = 0;
    };
    enumerate(0);
    // common denominator
    MultiPoly den = mp_one(R0);
    for (const auto& f : mod_gens) den = mp_mul(R0, den, f.den);
    nd.module_denominator = den;
    for (const auto& f : mod_gens) {
        MultiPoly scale = mp_quo_exact(R0, den, f.den);
        nd.module_numerators.push_back(mp_mul(R0, f.num, scale));
    }
    return nd;
}

bool grauert_remmert_verified(const Chart& c, const NormalizationData& nd) {
    (void)c;
    const PolyRing& R = nd.ext_ring;
    const Ideal& I = nd.ext_ideal;
    int dim = I.gens.empty() ? R.nvars() : krull_dimension(I);
    int codim = R.nvars() - dim;
    std::vector<int> allvars;
    for (int i = 0; i < R.nvars(); ++i) allvars.push_back(i);
    auto minors = jacobian_minors(R, I.gens, allvars, codim);
    Ideal singular = ideal_add(I, minors);
    if (contains_one(singular)) return true;
    Ideal J = radical(singular);
    auto gbI = groebner_basis(I, MonomialOrder::grevlex());
    MultiPoly d;
    for (const auto& g : J.gens) {
        if (!normal_form(R, g, gbI, MonomialOrder::grevlex()).is_zero()) {
            d = g;
            break;
        }
    }
    if (d.is_zero()) return false;
    std::vector<MultiPoly> dJ;
    for (const auto& g : J.gens) dJ.push_back(mp_mul(R, d, g));
    Ideal H = quotient_ideal(ideal_add(I, dJ), J);
    Ideal dI = ideal_add(I, {d});
    for (const auto& u : H.gens)
        if (!ideal_membership(u, dI)) return false;
    return true;
}

GaSectionModule ga_sections(const Chart& c, long r) {
    ChartDiagnostics diag = verify_chart(c);
    if (!diag.t_torsion_free) throw error("ga_sections: chart " + c.name + " has t-torsion");
    if (diag.generic_fiber_smooth == TriState::No)
        throw error("ga_sections: chart " + c.name +
                    " has a non-smooth generic fiber (normality hypothesis unavailable)");
    NormalizationData nd = normalize(c);
    GaSectionModule m;
    m.chart = c;
    m.twist = r;
    m.pres_ring = nd.ext_ring;
    m.pres_ideal = nd.ext_ideal;
    const PolyRing& R = m.pres_ring;
    MultiPoly t = mp_var(R, R.var_index("t"));
    Ideal fiber = ideal_add(m.pres_ideal, {t});
    Ideal rad = radical(fiber);
    auto gb = groebner_basis(m.pres_ideal, MonomialOrder::grevlex());
    for (const auto& g : rad.gens) {
        MultiPoly nf = normal_form(R, g, gb, MonomialOrder::grevlex());
        if (nf.is_zero()) continue;
        if (r > 0) nf = mp_mul(R, nf, mp_pow(R, t, r));
        m.generators.push_back(std::move(nf));
    }
    m.tshift = r < 0 ? -r : 0;
    if (m.generators.empty()) throw error("ga_sections: empty section module");
    // drop generators lying in the span of the others
    for (size_t i = m.generators.size(); i-- > 0 && m.generators.size() > 1;) {
        std::vector<MultiPoly> others = m.pres_ideal.gens;
        for (size_t j = 0; j < m.generators.size(); ++j)
            if (j != i) others.push_back(m.generators[j]);
        if (ideal_membership(m.generators[i], make_ideal(R, others)))
            m.generators.erase(m.generators.begin() + static_cast<long>(i));
    }
    return m;
}

GaCertificate ga_membership(const MultiPoly& numerator, long tshift, const Chart& c, long n,
                            long m) {
    if (m < 1) throw error("ga_membership: twist denominator must be >= 1");
    GaCertificate cert;
    NormalizationData nd = normalize(c);
    const PolyRing& R = nd.ext_ring;
    const Ideal& I = nd.ext_ideal;
    int ti = R.var_index("t");
    MultiPoly t = mp_var(R, ti);
    // lift the numerator into the closure presentation
    std::vector<int> vmap(static_cast<size_t>(c.ring.nvars()));
    for (int i = 0; i < c.ring.nvars(); ++i) vmap[static_cast<size_t>(i)] = i;
    MultiPoly P0 = mp_lift(numerator, vmap, R.nvars());
    // b = a^m / t^n = P0^m / t^w
    MultiPoly P = mp_pow(R, P0, m);
    long w = tshift * m + n;
    MultiPoly Q;
    if (w <= 0) {
        Q = mp_mul(R, P, mp_pow(R, t, -w));
        cert.integral = true;
    } else {
        Ideal tw = ideal_add(I, {mp_pow(R, t, w)});
        if (!ideal_membership(P, tw)) {
            cert.integral = false;
            cert.member = false;
            cert.detail = "a^m/t^n is not integral on the chart";
            return cert;
        }
        cert.integral = true;
    }
    Ideal fiber = ideal_add(I, {t});
    if (w <= 0) {
        // direct small-exponent certificate, then Rabinowitsch
        MultiPoly p = mp_one(R);
        for (int e = 1; e <= 8; ++e) {
            p = mp_mul(R, p, Q);
            if (ideal_membership(p, fiber)) {
                cert.member = true;
                cert.exponent = e;
                cert.detail = "power certificate";
                return cert;
            }
        }
        cert.rabinowitsch = true;
        cert.member = radical_membership(Q, fiber);
        cert.detail = cert.member ? "rabinowitsch witness" : "failing reduction";
        return cert;
    }
    // w > 0: adjoin beta with t^w * beta = P, saturated at t
    PolyRing R2 = ring_extend(R, {"_b"});
    std::vector<int> vmap2(static_cast<size_t>(R.nvars()));
    for (int i = 0; i < R.nvars(); ++i) vmap2[static_cast<size_t>(i)] = i;
    std::vector<MultiPoly> gens2;
    for (const auto& g : I.gens) gens2.push_back(mp_lift(g, vmap2, R2.nvars()));
    MultiPoly beta = mp_var(R2, R2.nvars() - 1);
    MultiPoly t2 = mp_var(R2, R2.var_index("t"));
    gens2.push_back(mp_sub(R2, mp_mul(R2, mp_pow(R2, t2, w), beta),
                           mp_lift(P, vmap2, R2.nvars())));
    Ideal graph = saturate(make_ideal(R2, std::move(gens2)), t2);
    // small-exponent certificate: P^e in (t^(w e + 1)) + I
    MultiPoly p = mp_one(R);
    for (int e = 1; e <= 8; ++e) {
        p = mp_mul(R, p, P);
        Ideal te = ideal_add(I, {mp_pow(R, t, w * e + 1)});
        if (ideal_membership(p, te)) {
            cert.member = true;
            cert.exponent = e;
            cert.detail = "power certificate";
            return cert;
        }
    }
    cert.rabinowitsch = true;
    Ideal fiber2 = ideal_add(graph, {t2});
    cert.member = radical_membership(beta, fiber2);
    cert.detail = cert.member ? "rabinowitsch witness" : "failing reduction";
    return cert;
}

Chart chart_localize(const Chart& c, const MultiPoly& f, const std::string& varname) {
    PolyRing R2 = ring_extend(c.ring, {varname});
    std::vector<int> vmap(static_cast<size_t>(c.ring.nvars()));
    for (int i = 0; i < c.ring.nvars(); ++i) vmap[static_cast<size_t>(i)] = i;
    std::vector<MultiPoly> gens;
    for (const auto& g : c.presentation.gens) gens.push_back(mp_lift(g, vmap, R2.nvars()));
    MultiPoly z = mp_var(R2, R2.nvars() - 1);
    gens.push_back(mp_sub(R2, mp_mul(R2, z, mp_lift(f, vmap, R2.nvars())), mp_one(R2)));
    Chart out;
    out.name = c.name + "_loc";
    out.ring = R2;
    out.presentation = make_ideal(R2, std::move(gens));
    out.domain_asserted = c.domain_asserted;
    return out;
}

}  // namespace gal
