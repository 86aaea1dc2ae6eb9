#include "gal/groebner.hpp"

#include <algorithm>
#include <set>

namespace gal {

int MaskOrder::cmp(const ExpVec& a, const ExpVec& b) const {
    auto block = [&](char side) {
        int da = 0, db = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            if (mask[i] != side) continue;
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (mask[i] != side) continue;
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    };
    int c = block(1);
    if (c != 0) return c;
    return block(0);
}

namespace {

// internal uniform comparator: either a MonomialOrder or a MaskOrder
struct AnyOrder {
    const MonomialOrder* mo = nullptr;
    const MaskOrder* mk = nullptr;
    int cmp(const ExpVec& a, const ExpVec& b) const { return mo ? mo->cmp(a, b) : mk->cmp(a, b); }
};

std::pair<ExpVec, FElem> lead_term(const MultiPoly& f, const AnyOrder& ord) {
    auto it = f.terms.begin();
    auto best = it;
    for (++it; it != f.terms.end(); ++it)
        if (ord.cmp(best->first, it->first) < 0) best = it;
    return {best->first, best->second};
}

MultiPoly nf_impl(const PolyRing& R, MultiPoly f, const std::vector<MultiPoly>& basis,
                  const AnyOrder& ord, std::vector<MultiPoly>* cof) {
    if (cof) cof->assign(basis.size(), mp_zero());
    MultiPoly rem;
    while (!f.is_zero()) {
        auto [le, lc] = lead_term(f, ord);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            auto [ge, gc] = lead_term(basis[i], ord);
            if (!ev_divides(ge, le)) continue;
            ExpVec sh = ev_sub(le, ge);
            FElem c = R.k.div(lc, gc);
            f = mp_sub(R, f, mp_mul_term(R, basis[i], sh, c));
            if (cof) (*cof)[i] = mp_add(R, (*cof)[i], mp_monomial(R, sh, c));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.emplace(le, lc);
            f.terms.erase(le);
        }
    }
    return rem;
}

std::vector<MultiPoly> buchberger(const PolyRing& R, std::vector<MultiPoly> gens,
                                  const AnyOrder& ord) {
    std::vector<MultiPoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g);
    // deterministic starting configuration
    std::sort(G.begin(), G.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        auto la = lead_term(a, ord), lb = lead_term(b, ord);
        int c = ord.cmp(la.first, lb.first);
        if (c != 0) return c < 0;
        return a.terms < b.terms;
    });

    struct PairKey {
        int deg;
        ExpVec lcm;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm != o.lcm) return lcm < o.lcm;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> queue;
    std::set<std::pair<int, int>> handled;
    auto push_pairs = [&](int j) {
        auto lj = lead_term(G[static_cast<size_t>(j)], ord);
        for (int i = 0; i < j; ++i) {
            auto li = lead_term(G[static_cast<size_t>(i)], ord);
            ExpVec l = ev_lcm(li.first, lj.first);
            queue.insert(PairKey{ev_total(l), l, i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        handled.insert({pk.i, pk.j});
        auto li = lead_term(G[static_cast<size_t>(pk.i)], ord);
        auto lj = lead_term(G[static_cast<size_t>(pk.j)], ord);
        // first Buchberger criterion: coprime leading monomials
        if (ev_disjoint(li.first, lj.first)) continue;
        // chain criterion
        bool skip = false;
        ExpVec l = ev_lcm(li.first, lj.first);
        for (int k = 0; k < static_cast<int>(G.size()); ++k) {
            if (k == pk.i || k == pk.j) continue;
            auto lk = lead_term(G[static_cast<size_t>(k)], ord);
            if (!ev_divides(lk.first, l)) continue;
            auto a = std::minmax(pk.i, k), b = std::minmax(pk.j, k);
            if (handled.count({a.first, a.second}) && handled.count({b.first, b.second})) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        // s-polynomial
        FElem one = R.k.one();
        MultiPoly s = mp_sub(
            R,
            mp_mul_term(R, G[static_cast<size_t>(pk.i)], ev_sub(l, li.first), R.k.div(one, li.second)),
            mp_mul_term(R, G[static_cast<size_t>(pk.j)], ev_sub(l, lj.first), R.k.div(one, lj.second)));
        MultiPoly r = nf_impl(R, std::move(s), G, ord, nullptr);
        if (!r.is_zero()) {
            G.push_back(std::move(r));
            push_pairs(static_cast<int>(G.size()) - 1);
        }
    }

    // minimalize
    std::vector<MultiPoly> M;
    for (size_t i = 0; i < G.size(); ++i) {
        auto li = lead_term(G[i], ord);
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            auto ljt = lead_term(G[j], ord);
            if (ev_divides(ljt.first, li.first) && (ljt.first != li.first || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) M.push_back(G[i]);
    }
    // inter-reduce tails and normalize
    std::vector<MultiPoly> red;
    for (size_t i = 0; i < M.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        MultiPoly r = nf_impl(R, M[i], others, ord, nullptr);
        if (r.is_zero()) continue;  // fully redundant
        auto lr = lead_term(r, ord);
        red.push_back(mp_scale(R, r, R.k.inv(lr.second)));
    }
    std::sort(red.begin(), red.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.cmp(lead_term(a, ord).first, lead_term(b, ord).first) < 0;
    });
    return red;
}

std::vector<MultiPoly> gb_mask(const PolyRing& R, const std::vector<MultiPoly>& gens,
                               const MaskOrder& mk) {
    AnyOrder ord{nullptr, &mk};
    return buchberger(R, gens, ord);
}

}  // namespace

Lead mp_lead(const MultiPoly& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw error("mp_lead: zero polynomial");
    AnyOrder o{&ord, nullptr};
    auto [e, c] = lead_term(f, o);
    return Lead{e, c};
}

Ideal make_ideal(const PolyRing& R, std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> g;
    for (auto& f : gens)
        if (!f.is_zero()) g.push_back(std::move(f));
    return Ideal(R, std::move(g));
}

const std::vector<MultiPoly>& groebner_basis(const Ideal& I, const MonomialOrder& ord) {
    auto it = I.gb_cache.find(ord.key());
    if (it != I.gb_cache.end()) return it->second;
    AnyOrder o{&ord, nullptr};
    auto gb = buchberger(I.ring, I.gens, o);
    auto [jt, ok] = I.gb_cache.emplace(ord.key(), std::move(gb));
    (void)ok;
    return jt->second;
}

MultiPoly normal_form(const PolyRing& R, MultiPoly f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord) {
    AnyOrder o{&ord, nullptr};
    return nf_impl(R, std::move(f), basis, o, nullptr);
}

MultiPoly normal_form_cof(const PolyRing& R, MultiPoly f, const std::vector<MultiPoly>& basis,
                          const MonomialOrder& ord, std::vector<MultiPoly>& cof) {
    AnyOrder o{&ord, nullptr};
    return nf_impl(R, std::move(f), basis, o, &cof);
}

bool ideal_membership(const MultiPoly& f, const Ideal& I) {
    if (f.is_zero()) return true;
    const auto& gb = groebner_basis(I, MonomialOrder::grevlex());
    return normal_form(I.ring, f, gb, MonomialOrder::grevlex()).is_zero();
}

bool contains_one(const Ideal& I) {
    const auto& gb = groebner_basis(I, MonomialOrder::grevlex());
    return gb.size() == 1 && gb[0].total_degree() == 0;
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    for (const auto& g : J.gens)
        if (!ideal_membership(g, I)) return false;
    return true;
}

bool ideal_eq(const Ideal& I, const Ideal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

Ideal eliminate(const Ideal& I, const std::vector<int>& drop) {
    MaskOrder mk;
    mk.mask.assign(static_cast<size_t>(I.ring.nvars()), 0);
    for (int v : drop) mk.mask[static_cast<size_t>(v)] = 1;
    auto gb = gb_mask(I.ring, I.gens, mk);
    std::vector<MultiPoly> keep;
    for (const auto& g : gb) {
        bool involves = false;
        for (int v : drop)
            if (mp_depends_on(g, v)) {
                involves = true;
                break;
            }
        if (!involves) keep.push_back(g);
    }
    return make_ideal(I.ring, std::move(keep));
}

namespace {

// Lift the ideal into ring with one fresh variable appended; returns the maps.
struct Extended {
    PolyRing R2;
    std::vector<int> var_map;  // old -> new index
    int fresh;                 // index of the fresh variable
};

Extended extend_fresh(const PolyRing& R, const std::string& hint) {
    std::string name = hint;
    int n = 0;
    while (R.var_index(name) >= 0) name = hint + std::to_string(n++);
    Extended e;
    e.R2 = ring_extend(R, {name});
    e.var_map.resize(static_cast<size_t>(R.nvars()));
    for (int i = 0; i < R.nvars(); ++i) e.var_map[static_cast<size_t>(i)] = i;
    e.fresh = e.R2.nvars() - 1;
    return e;
}

// Contract generators not involving the fresh last variable back to R.
Ideal contract_drop_last(const PolyRing& R, const PolyRing& R2, const std::vector<MultiPoly>& gens) {
    std::vector<MultiPoly> out;
    int last = R2.nvars() - 1;
    for (const auto& g : gens) {
        if (mp_depends_on(g, last)) continue;
        MultiPoly h;
        for (const auto& [e, c] : g.terms) {
            ExpVec e2(e.begin(), e.end() - 1);
            h.terms.emplace(std::move(e2), c);
        }
        out.push_back(std::move(h));
    }
    return make_ideal(R, std::move(out));
}

}  // namespace

Ideal saturate(const Ideal& I, const MultiPoly& f) {
    if (f.is_zero()) throw error("saturate: zero element");
    Extended ex = extend_fresh(I.ring, "_w");
    std::vector<MultiPoly> gens;
    for (const auto& g : I.gens) gens.push_back(mp_lift(g, ex.var_map, ex.R2.nvars()));
    MultiPoly fw = mp_mul(ex.R2, mp_lift(f, ex.var_map, ex.R2.nvars()), mp_var(ex.R2, ex.fresh));
    gens.push_back(mp_sub(ex.R2, mp_one(ex.R2), fw));
    MaskOrder mk;
    mk.mask.assign(static_cast<size_t>(ex.R2.nvars()), 0);
    mk.mask[static_cast<size_t>(ex.fresh)] = 1;
    auto gb = gb_mask(ex.R2, gens, mk);
    std::vector<MultiPoly> keep;
    for (const auto& g : gb)
        if (!mp_depends_on(g, ex.fresh)) keep.push_back(g);
    return contract_drop_last(I.ring, ex.R2, keep);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!I.ring.eq(J.ring)) throw error("intersect: ring mismatch");
    Extended ex = extend_fresh(I.ring, "_u");
    std::vector<MultiPoly> gens;
    MultiPoly u = mp_var(ex.R2, ex.fresh);
    MultiPoly omu = mp_sub(ex.R2, mp_one(ex.R2), u);
    for (const auto& g : I.gens)
        gens.push_back(mp_mul(ex.R2, u, mp_lift(g, ex.var_map, ex.R2.nvars())));
    for (const auto& g : J.gens)
        gens.push_back(mp_mul(ex.R2, omu, mp_lift(g, ex.var_map, ex.R2.nvars())));
    MaskOrder mk;
    mk.mask.assign(static_cast<size_t>(ex.R2.nvars()), 0);
    mk.mask[static_cast<size_t>(ex.fresh)] = 1;
    auto gb = gb_mask(ex.R2, gens, mk);
    std::vector<MultiPoly> keep;
    for (const auto& g : gb)
        if (!mp_depends_on(g, ex.fresh)) keep.push_back(g);
    return contract_drop_last(I.ring, ex.R2, keep);
}

MultiPoly mp_quo_exact(const PolyRing& R, const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw error("mp_quo_exact: division by zero");
    std::vector<MultiPoly> cof;
    MultiPoly r = normal_form_cof(R, f, {g}, MonomialOrder::grevlex(), cof);
    if (!r.is_zero()) throw error("mp_quo_exact: not divisible");
    return cof[0];
}

Ideal quotient(const Ideal& I, const MultiPoly& f) {
    if (f.is_zero()) throw error("quotient: zero element");
    Ideal cap = intersect(I, make_ideal(I.ring, {f}));
    std::vector<MultiPoly> out;
    for (const auto& g : cap.gens) out.push_back(mp_quo_exact(I.ring, g, f));
    return make_ideal(I.ring, std::move(out));
}

Ideal quotient_ideal(const Ideal& I, const Ideal& J) {
    bool first = true;
    Ideal acc;
    for (const auto& f : J.gens) {
        if (f.is_zero()) continue;
        Ideal q = quotient(I, f);
        if (first) {
            acc = q;
            first = false;
        } else {
            acc = intersect(acc, q);
        }
    }
    if (first) throw error("quotient_ideal: zero ideal divisor");
    return acc;
}

bool radical_membership(const MultiPoly& f, const Ideal& I) {
    if (f.is_zero()) return true;
    Extended ex = extend_fresh(I.ring, "_w");
    std::vector<MultiPoly> gens;
    for (const auto& g : I.gens) gens.push_back(mp_lift(g, ex.var_map, ex.R2.nvars()));
    MultiPoly fw = mp_mul(ex.R2, mp_lift(f, ex.var_map, ex.R2.nvars()), mp_var(ex.R2, ex.fresh));
    gens.push_back(mp_sub(ex.R2, mp_one(ex.R2), fw));
    return contains_one(make_ideal(ex.R2, std::move(gens)));
}

std::vector<int> independent_set(const Ideal& I) {
    const auto& gb = groebner_basis(I, MonomialOrder::grevlex());
    int n = I.ring.nvars();
    std::vector<ExpVec> lts;
    for (const auto& g : gb) lts.push_back(mp_lead(g, MonomialOrder::grevlex()).exp);
    // S independent iff no leading monomial is supported inside S
    std::vector<int> best;
    bool unit = contains_one(I);
    if (unit) return best;  // empty; dimension -1 handled by caller
    int bestsz = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz <= bestsz) continue;
        bool ok = true;
        for (const auto& e : lts) {
            bool inside = true;
            for (int i = 0; i < n; ++i)
                if (e[static_cast<size_t>(i)] > 0 && !(mask >> i & 1)) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) {
            bestsz = sz;
            best.clear();
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) best.push_back(i);
        }
    }
    return best;
}

int krull_dimension(const Ideal& I) {
    if (contains_one(I)) return -1;
    return static_cast<int>(independent_set(I).size());
}

UPoly univariate_eliminant(const Ideal& I, int var) {
    std::vector<int> drop;
    for (int i = 0; i < I.ring.nvars(); ++i)
        if (i != var) drop.push_back(i);
    Ideal E = eliminate(I, drop);
    UPoly g;  // gcd of the univariate generators
    const BaseField& k = I.ring.k;
    for (const auto& f : E.gens) {
        UPoly u;
        for (const auto& [e, c] : f.terms) {
            int d = e[static_cast<size_t>(var)];
            while (static_cast<int>(u.c.size()) <= d) u.c.push_back(k.zero());
            u.c[static_cast<size_t>(d)] = c;
        }
        u = up_trim(u);
        g = g.is_zero() ? up_monic(k, u) : up_gcd(k, g, u);
    }
    return g;
}

UPoly up_squarefree_part(const BaseField& k, const UPoly& f0) {
    UPoly f = up_monic(k, up_trim(f0));
    if (f.deg() <= 0) return f;
    UPoly df = up_derivative(k, f);
    if (df.is_zero()) {
        // perfect field: f = g(t^p); take the p-th root of the coefficients
        long p = k.characteristic();
        if (p == 0) throw error("squarefree: zero derivative in characteristic 0");
        UPoly g;
        for (int i = 0; i <= f.deg(); i += static_cast<int>(p)) {
            // over F_p the p-th root of c is c itself
            g.c.push_back(f.coeff(i));
        }
        return up_squarefree_part(k, up_trim(g));
    }
    UPoly g = up_gcd(k, f, df);
    if (g.deg() == 0) return f;
    UPoly s = up_quo_exact(k, f, g);
    // s can still carry p-th power factors hidden in g
    UPoly rest = up_squarefree_part(k, g);
    UPoly l = up_mul(k, s, up_quo_exact(k, rest, up_gcd(k, s, rest)));
    return up_monic(k, l);
}

// ------------------------------------------------------------------ radical

namespace {

bool all_monomial(const Ideal& I) {
    for (const auto& g : I.gens)
        if (g.terms.size() > 1) return false;
    return true;
}

MultiPoly monomial_squarefree(const PolyRing& R, const MultiPoly& m) {
    ExpVec e = m.terms.begin()->first;
    for (auto& x : e) x = x > 0 ? 1 : 0;
    return mp_monomial(R, e, R.k.one());
}

// pseudo-remainder sequence gcd in z over k[Y]; junk contents are folded
// into `junk` and later handled by saturation
MultiPoly prs_gcd_z(const PolyRing& R, MultiPoly a, MultiPoly b, int z,
                    std::vector<MultiPoly>& junk);

int z_degree(const MultiPoly& f, int z) {
    int d = 0;
    for (const auto& [e, c] : f.terms) d = std::max(d, e[static_cast<size_t>(z)]);
    return d;
}

MultiPoly z_lead_coeff(const PolyRing& R, const MultiPoly& f, int z) {
    int d = z_degree(f, z);
    MultiPoly lc;
    for (const auto& [e, c] : f.terms) {
        if (e[static_cast<size_t>(z)] != d) continue;
        ExpVec e2 = e;
        e2[static_cast<size_t>(z)] = 0;
        lc.terms.emplace(std::move(e2), c);
    }
    (void)R;
    return lc;
}

// pseudo-division of a by b in z: lc(b)^k * a = q*b + r with deg_z r < deg_z b
void z_pseudo_divrem(const PolyRing& R, MultiPoly a, const MultiPoly& b, int z, MultiPoly& q,
                     MultiPoly& r) {
    int db = z_degree(b, z);
    MultiPoly lb = z_lead_coeff(R, b, z);
    q = mp_zero();
    while (!a.is_zero() && z_degree(a, z) >= db) {
        int da = z_degree(a, z);
        MultiPoly la = z_lead_coeff(R, a, z);
        ExpVec sh(static_cast<size_t>(R.nvars()), 0);
        sh[static_cast<size_t>(z)] = da - db;
        MultiPoly term = mp_mul_term(R, la, sh, R.k.one());
        q = mp_add(R, mp_mul(R, q, lb), term);
        a = mp_sub(R, mp_mul(R, a, lb), mp_mul(R, term, b));
        if (!a.is_zero() && z_degree(a, z) >= da && da >= db) {
            // no progress guard (cancellation should always lower the degree)
            throw error("z_pseudo_divrem: no progress");
        }
    }
    r = a;
}

MultiPoly prs_gcd_z(const PolyRing& R, MultiPoly a, MultiPoly b, int z,
                    std::vector<MultiPoly>& junk) {
    if (z_degree(a, z) < z_degree(b, z)) std::swap(a, b);
    while (!b.is_zero() && z_degree(b, z) > 0) {
        MultiPoly q, r;
        z_pseudo_divrem(R, a, b, z, q, r);
        junk.push_back(z_lead_coeff(R, b, z));
        a = b;
        b = r;
    }
    if (b.is_zero()) return a;
    // last nonzero remainder has z-degree 0: gcd in k(Y)[z] is 1
    junk.push_back(b);
    return mp_one(R);
}

Ideal radical_rec(const Ideal& I, int depth, int& degbound);

// add the squarefree parts of the univariate eliminants (the zero-dimensional
// Seidenberg step); `vars_all` reports whether every variable had one
Ideal seidenberg_augment(const Ideal& I, bool& vars_all, int& degbound) {
    const PolyRing& R = I.ring;
    std::vector<MultiPoly> gens = I.gens;
    vars_all = true;
    for (int v = 0; v < R.nvars(); ++v) {
        UPoly g = univariate_eliminant(I, v);
        if (g.is_zero()) {
            vars_all = false;
            continue;
        }
        degbound = std::max(degbound, g.deg());
        UPoly s = up_squarefree_part(R.k, g);
        MultiPoly m;
        for (int i = 0; i <= s.deg(); ++i) {
            if (s.coeff(i).is_zero()) continue;
            ExpVec e(static_cast<size_t>(R.nvars()), 0);
            e[static_cast<size_t>(v)] = i;
            m.terms.emplace(std::move(e), s.coeff(i));
        }
        gens.push_back(std::move(m));
    }
    return make_ideal(R, std::move(gens));
}

Ideal radical_rec(const Ideal& I, int depth, int& degbound) {
    const PolyRing& R = I.ring;
    if (I.gens.empty()) return I;
    if (contains_one(I)) return make_ideal(R, {mp_one(R)});
    if (depth <= 0) throw error("radical: recursion cap exceeded");
    for (const auto& g : I.gens) degbound = std::max(degbound, g.total_degree());

    if (all_monomial(I)) {
        std::vector<MultiPoly> gens;
        for (const auto& g : I.gens) gens.push_back(monomial_squarefree(R, g));
        return make_ideal(R, std::move(gens));
    }

    bool zero_dim = false;
    Ideal J = seidenberg_augment(I, zero_dim, degbound);
    if (zero_dim) {
        // Seidenberg: squarefree separable univariates in every variable
        auto gb = groebner_basis(J, MonomialOrder::grevlex());
        return make_ideal(R, gb);
    }

    long p = R.k.characteristic();
    if (p != 0 && p <= degbound)
        throw error("radical: characteristic " + std::to_string(p) +
                    " does not exceed the degree bound " + std::to_string(degbound) +
                    " (outside the validity window)");

    // positive-dimensional Krick-Logar step over a maximal independent set
    std::vector<int> Y = independent_set(I);
    std::vector<char> inY(static_cast<size_t>(R.nvars()), 0);
    for (int v : Y) inY[static_cast<size_t>(v)] = 1;

    std::vector<MultiPoly> sq_parts;
    std::vector<MultiPoly> hs;
    for (int z = 0; z < R.nvars(); ++z) {
        if (inY[static_cast<size_t>(z)]) continue;
        // parametric eliminant in k[Y][z]
        std::vector<int> drop;
        for (int v = 0; v < R.nvars(); ++v)
            if (v != z && !inY[static_cast<size_t>(v)]) drop.push_back(v);
        Ideal E = eliminate(I, drop);
        MultiPoly g;
        int bestdeg = -1;
        for (const auto& f : E.gens) {
            int d = z_degree(f, z);
            if (d <= 0) continue;
            if (bestdeg < 0 || d < bestdeg) {
                bestdeg = d;
                g = f;
            }
        }
        if (bestdeg < 0)
            throw error("radical: dependent variable without parametric eliminant");
        degbound = std::max(degbound, g.total_degree());
        if (p != 0 && p <= degbound)
            throw error("radical: characteristic " + std::to_string(p) +
                        " does not exceed the degree bound " + std::to_string(degbound) +
                        " (outside the validity window)");
        MultiPoly dg = mp_derivative(R, g, z);
        std::vector<MultiPoly> junk;
        MultiPoly s;
        if (dg.is_zero()) {
            throw error("radical: inseparable parametric eliminant (characteristic window)");
        }
        MultiPoly gz = prs_gcd_z(R, g, dg, z, junk);
        if (z_degree(gz, z) == 0) {
            s = g;
        } else {
            MultiPoly q, r;
            z_pseudo_divrem(R, g, gz, z, q, r);
            junk.push_back(z_lead_coeff(R, gz, z));
            s = q;  // squarefree part up to a k[Y]-content
            if (s.is_zero()) throw error("radical: vanishing squarefree part");
        }
        sq_parts.push_back(s);
        hs.push_back(z_lead_coeff(R, g, z));
        for (auto& j : junk)
            if (!j.is_zero() && j.total_degree() > 0) hs.push_back(j);
    }

    std::vector<MultiPoly> gens = I.gens;
    for (auto& s : sq_parts) gens.push_back(s);
    Ideal I1 = make_ideal(R, gens);
    MultiPoly h = mp_one(R);
    for (const auto& f : hs)
        if (!f.is_zero() && f.total_degree() > 0) h = mp_mul(R, h, f);
    if (h.total_degree() <= 0) {
        // unit denominators: no contraction step is needed
        auto gb = groebner_basis(I1, MonomialOrder::grevlex());
        return make_ideal(R, gb);
    }
    Ideal J0 = saturate(I1, h);
    std::vector<MultiPoly> gens2 = I.gens;
    gens2.push_back(h);
    Ideal Ih = make_ideal(R, gens2);
    Ideal r2 = radical_rec(Ih, depth - 1, degbound);
    Ideal out = intersect(J0, r2);
    auto gb = groebner_basis(out, MonomialOrder::grevlex());
    return make_ideal(R, gb);
}

}  // namespace

Ideal radical(const Ideal& I) {
    // iterate to the fixed point; each pass only adds elements of the radical
    Ideal J = I;
    for (int pass = 0; pass < 8; ++pass) {
        int degbound = 0;
        Ideal J2 = radical_rec(J, 12, degbound);
        if (ideal_contains(J, J2) && ideal_contains(J2, J)) {
            for (const auto& g : J2.gens)
                if (!radical_membership(g, I))
                    throw error("radical: output generator fails the Rabinowitsch check");
            return J2;
        }
        J = J2;
    }
    throw error("radical: no fixed point within the iteration cap");
}

}  // namespace gal
