#include "gal/cech.hpp"

#include <algorithm>

namespace gal {

int CechComplex::coord(int p, int s, int basis_pos) const {
    return offsets[static_cast<size_t>(p)][static_cast<size_t>(s)] + basis_pos;
}

namespace {

// enumerate chart-exponent tuples with total degree <= cap
void enum_tuples(int nvars, int cap, std::vector<int>& cur, int pos,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == nvars) {
        emit(cur);
        return;
    }
    int used = 0;
    for (int i = 0; i < pos; ++i) used += cur[static_cast<size_t>(i)];
    for (int v = 0; v + used <= cap; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        enum_tuples(nvars, cap, cur, pos + 1, emit);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

// smallest multiplier mu such that g + mu * inv lies in the chart cone;
// -1 when impossible
int needed_multiplier(const ModelCover& M, int chart, const ExpVec& g, const ExpVec& inv_sum) {
    auto a = chart_coords(M, chart, g);
    if (!a) return -1;
    auto b = chart_coords(M, chart, inv_sum);
    if (!b) return -1;
    int mu = 0;
    for (size_t l = 0; l < a->size(); ++l) {
        if ((*a)[l] >= 0) continue;
        if ((*b)[l] <= 0) return -1;
        int need = (-(*a)[l] + (*b)[l] - 1) / (*b)[l];
        mu = std::max(mu, need);
    }
    return mu;
}

void enumerate_spot(const ModelCover& M, Spot& sp, int N, bool with_t, int nu_lo) {
    const CoverChart& C = M.charts[static_cast<size_t>(sp.base)];
    sp.monos.clear();
    sp.mono_index.clear();
    ExpVec denom(static_cast<size_t>(M.n_global()), 0);
    for (int r = 0; r < sp.mult; ++r) denom = ev_add(denom, sp.inv_sum);
    std::vector<int> cur(static_cast<size_t>(C.nvars()), 0);
    std::vector<MonoKey> keys;
    enum_tuples(C.nvars(), sp.cap, cur, 0, [&](const std::vector<int>& c) {
        ExpVec g(static_cast<size_t>(M.n_global()), 0);
        for (size_t l = 0; l < c.size(); ++l)
            for (int rep = 0; rep < c[l]; ++rep) g = ev_add(g, C.var_global[l]);
        g = ev_sub(g, denom);
        if (with_t) {
            for (int nu = nu_lo; nu < N; ++nu) keys.push_back(MonoKey{g, nu});
        } else {
            keys.push_back(MonoKey{g, 0});
        }
    });
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    sp.monos = std::move(keys);
    for (size_t i = 0; i < sp.monos.size(); ++i)
        sp.mono_index.emplace(sp.monos[i], static_cast<int>(i));
}

// terms of a chart polynomial as (global exponent delta, t-degree, coeff)
struct GenTerm {
    ExpVec dg;
    int dt;
    FElem c;
};

std::vector<GenTerm> gen_terms(const ModelCover& M, int chart, const MultiPoly& f) {
    const CoverChart& C = M.charts[static_cast<size_t>(chart)];
    std::vector<GenTerm> out;
    for (const auto& [e, coef] : f.terms) {
        ExpVec g(static_cast<size_t>(M.n_global()), 0);
        for (int l = 0; l < C.nvars(); ++l)
            for (int rep = 0; rep < e[static_cast<size_t>(l + 1)]; ++rep)
                g = ev_add(g, C.var_global[static_cast<size_t>(l)]);
        out.push_back(GenTerm{std::move(g), e[0], coef});
    }
    return out;
}

void build_relations(const ModelCover& M, Spot& sp, int N, bool with_t, int nu_lo) {
    const CoverChart& C = M.charts[static_cast<size_t>(sp.base)];
    sp.rel = KMat();
    sp.rel_pivots.clear();
    sp.basis.clear();
    if (C.ideal_gens.empty()) {
        for (size_t i = 0; i < sp.monos.size(); ++i) sp.basis.push_back(static_cast<int>(i));
        return;
    }
    const BaseField& k = M.k;
    std::vector<std::vector<FElem>> rows;
    std::set<std::pair<ExpVec, int>> seen_shift;
    for (const auto& gen : C.ideal_gens) {
        auto terms = gen_terms(M, sp.base, gen);
        if (terms.empty()) continue;
        for (const auto& mk : sp.monos) {
            for (const auto& anchor : terms) {
                ExpVec shift_g = ev_sub(mk.g, anchor.dg);
                int shift_t = mk.nu - anchor.dt;
                if (with_t && shift_t < nu_lo) continue;
                if (!with_t) shift_t = 0;
                if (!seen_shift.emplace(shift_g, shift_t).second) continue;
                // candidate instance: shift * gen; all terms must fit the cone
                std::vector<FElem> row(sp.monos.size(), k.zero());
                bool ok = true, nonzero = false;
                for (const auto& tm : terms) {
                    ExpVec g = ev_add(shift_g, tm.dg);
                    int nu = with_t ? shift_t + tm.dt : 0;
                    if (with_t && nu >= N) continue;  // truncated away
                    auto it = sp.mono_index.find(MonoKey{g, nu});
                    if (it == sp.mono_index.end()) {
                        ok = false;
                        break;
                    }
                    row[static_cast<size_t>(it->second)] =
                        k.add(row[static_cast<size_t>(it->second)], tm.c);
                    nonzero = true;
                }
                if (!ok || !nonzero) continue;
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) {
        for (size_t i = 0; i < sp.monos.size(); ++i) sp.basis.push_back(static_cast<int>(i));
        return;
    }
    KMat Rm(static_cast<int>(rows.size()), static_cast<int>(sp.monos.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) Rm.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    sp.rel_pivots = km_rref(k, Rm);
    // keep only the nonzero rows
    KMat red(static_cast<int>(sp.rel_pivots.size()), Rm.cols);
    for (int i = 0; i < red.rows; ++i)
        for (int j = 0; j < Rm.cols; ++j) red.at(i, j) = Rm.at(i, j);
    sp.rel = std::move(red);
    std::vector<char> is_pivot(sp.monos.size(), 0);
    for (int p : sp.rel_pivots) is_pivot[static_cast<size_t>(p)] = 1;
    for (size_t i = 0; i < sp.monos.size(); ++i)
        if (!is_pivot[i]) sp.basis.push_back(static_cast<int>(i));
}

}  // namespace

bool spot_reduce(const CechComplex& C, int p, int s,
                 const std::vector<std::pair<MonoKey, FElem>>& terms, std::vector<FElem>& out) {
    const Spot& sp = C.levels[static_cast<size_t>(p)][static_cast<size_t>(s)];
    const BaseField& k = C.M.k;
    std::vector<FElem> full(sp.monos.size(), k.zero());
    for (const auto& [mk, c] : terms) {
        if (C.with_t && mk.nu >= C.win.N) continue;  // truncated
        auto it = sp.mono_index.find(mk);
        if (it == sp.mono_index.end()) return false;
        full[static_cast<size_t>(it->second)] = k.add(full[static_cast<size_t>(it->second)], c);
    }
    if (!sp.rel_pivots.empty()) full = km_reduce_against(k, sp.rel, sp.rel_pivots, full);
    out.assign(sp.basis.size(), k.zero());
    for (size_t b = 0; b < sp.basis.size(); ++b) out[b] = full[static_cast<size_t>(sp.basis[b])];
    return true;
}

CechComplex build_cech(const ModelCover& M, Window win, bool with_t, int nu_lo) {
    CechComplex C;
    C.M = M;
    C.win = win;
    C.with_t = with_t;
    C.nu_lo = nu_lo;
    int n = M.n_charts();
    if (n > 12) throw error("build_cech: too many charts");
    // spots: nonempty subsets, grouped by size, each lexicographically sorted
    C.levels.assign(static_cast<size_t>(n), {});
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Spot sp;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) sp.S.push_back(i);
        sp.base = sp.S[0];
        sp.inv_sum.assign(static_cast<size_t>(M.n_global()), 0);
        for (size_t a = 1; a < sp.S.size(); ++a)
            sp.inv_sum = ev_add(sp.inv_sum, overlap_inverter(M, sp.base, sp.S[a]));
        sp.mult = win.D;
        auto b = chart_coords(M, sp.base, sp.inv_sum);
        int invdeg = 0;
        for (int x : *b) invdeg += x;
        sp.cap = win.D * invdeg + win.D;
        C.levels[sp.S.size() - 1].push_back(std::move(sp));
    }
    for (auto& lvl : C.levels)
        std::sort(lvl.begin(), lvl.end(), [](const Spot& a, const Spot& b) { return a.S < b.S; });

    // enumerate and grow until restriction-closed
    for (auto& lvl : C.levels)
        for (auto& sp : lvl) enumerate_spot(M, sp, win.N, with_t, nu_lo);
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 50) throw error("build_cech: window closure did not stabilize");
        changed = false;
        for (int p = 0; p + 1 < C.nlevels(); ++p) {
            for (auto& target : C.levels[static_cast<size_t>(p + 1)]) {
                for (const auto& src : C.levels[static_cast<size_t>(p)]) {
                    if (!std::includes(target.S.begin(), target.S.end(), src.S.begin(), src.S.end()))
                        continue;
                    for (const auto& mk : src.monos) {
                        if (target.mono_index.count(mk)) continue;
                        int mu = needed_multiplier(M, target.base, mk.g, target.inv_sum);
                        if (mu < 0)
                            throw error("build_cech: restriction leaves the localized cone");
                        ExpVec denom(static_cast<size_t>(M.n_global()), 0);
                        int m2 = std::max(target.mult, mu);
                        for (int r0 = 0; r0 < m2; ++r0) denom = ev_add(denom, target.inv_sum);
                        auto cc = chart_coords(M, target.base, ev_add(mk.g, denom));
                        if (!cc) throw error("build_cech: inconsistent chart lattice");
                        int deg = 0;
                        for (int x : *cc) deg += x;
                        bool grow = false;
                        if (m2 > target.mult) {
                            target.mult = m2;
                            grow = true;
                        }
                        if (deg > target.cap) {
                            target.cap = deg;
                            grow = true;
                        }
                        if (grow) {
                            enumerate_spot(M, target, win.N, with_t, nu_lo);
                            changed = true;
                        }
                    }
                }
            }
        }
    }

    // relations, dimensions, offsets
    C.dims.assign(static_cast<size_t>(C.nlevels()), 0);
    C.offsets.assign(static_cast<size_t>(C.nlevels()), {});
    for (int p = 0; p < C.nlevels(); ++p) {
        int off = 0;
        for (auto& sp : C.levels[static_cast<size_t>(p)]) {
            build_relations(M, sp, win.N, with_t, nu_lo);
            C.offsets[static_cast<size_t>(p)].push_back(off);
            off += sp.dim();
        }
        C.dims[static_cast<size_t>(p)] = off;
    }

    const BaseField& k = M.k;
    // differentials
    for (int p = 0; p + 1 < C.nlevels(); ++p) {
        KMat D(C.dims[static_cast<size_t>(p + 1)], C.dims[static_cast<size_t>(p)]);
        const auto& src_lvl = C.levels[static_cast<size_t>(p)];
        const auto& dst_lvl = C.levels[static_cast<size_t>(p + 1)];
        for (size_t tsp = 0; tsp < dst_lvl.size(); ++tsp) {
            const Spot& T = dst_lvl[tsp];
            for (size_t a = 0; a < T.S.size(); ++a) {
                std::vector<int> sub;
                for (size_t b = 0; b < T.S.size(); ++b)
                    if (b != a) sub.push_back(T.S[b]);
                int ssp = -1;
                for (size_t q = 0; q < src_lvl.size(); ++q)
                    if (src_lvl[q].S == sub) {
                        ssp = static_cast<int>(q);
                        break;
                    }
                if (ssp < 0) throw error("build_cech: missing face spot");
                FElem sign = (a % 2 == 0) ? k.one() : k.neg(k.one());
                const Spot& Ssp = src_lvl[static_cast<size_t>(ssp)];
                for (size_t bpos = 0; bpos < Ssp.basis.size(); ++bpos) {
                    const MonoKey& mk = Ssp.monos[static_cast<size_t>(Ssp.basis[bpos])];
                    std::vector<FElem> red;
                    if (!spot_reduce(C, p + 1, static_cast<int>(tsp), {{mk, sign}}, red))
                        throw error("build_cech: restriction image left the window");
                    int col = C.coord(p, ssp, static_cast<int>(bpos));
                    int rowoff = C.offsets[static_cast<size_t>(p + 1)][tsp];
                    for (size_t rr = 0; rr < red.size(); ++rr) {
                        if (red[rr].is_zero()) continue;
                        D.at(rowoff + static_cast<int>(rr), col) =
                            k.add(D.at(rowoff + static_cast<int>(rr), col), red[rr]);
                    }
                }
            }
        }
        C.d.push_back(std::move(D));
    }

    // t-action
    if (with_t) {
        for (int p = 0; p < C.nlevels(); ++p) {
            KMat T(C.dims[static_cast<size_t>(p)], C.dims[static_cast<size_t>(p)]);
            const auto& lvl = C.levels[static_cast<size_t>(p)];
            for (size_t s = 0; s < lvl.size(); ++s) {
                const Spot& sp = lvl[s];
                for (size_t bpos = 0; bpos < sp.basis.size(); ++bpos) {
                    MonoKey mk = sp.monos[static_cast<size_t>(sp.basis[bpos])];
                    mk.nu += 1;
                    std::vector<FElem> red;
                    if (mk.nu >= C.win.N) continue;  // truncated to zero
                    if (!spot_reduce(C, p, static_cast<int>(s), {{mk, k.one()}}, red))
                        throw error("build_cech: t-action left the window");
                    int col = C.coord(p, static_cast<int>(s), static_cast<int>(bpos));
                    int rowoff = C.offsets[static_cast<size_t>(p)][s];
                    for (size_t rr = 0; rr < red.size(); ++rr)
                        if (!red[rr].is_zero()) T.at(rowoff + static_cast<int>(rr), col) = red[rr];
                }
            }
            C.tact.push_back(std::move(T));
        }
    }
    return C;
}

SheafSpan t_power_span(const CechComplex& C, long power) {
    SheafSpan span;
    const BaseField& k = C.M.k;
    for (int p = 0; p < C.nlevels(); ++p) {
        const auto& lvl = C.levels[static_cast<size_t>(p)];
        std::vector<std::vector<FElem>> cols;
        for (size_t s = 0; s < lvl.size(); ++s) {
            const Spot& sp = lvl[s];
            for (int b : sp.basis) {
                const MonoKey& mk = sp.monos[static_cast<size_t>(b)];
                if (!C.with_t) {
                    // t-free mode: every monomial spans (the shift is implicit)
                    continue;
                }
                if (mk.nu < power + C.nu_lo - C.nu_lo) continue;
                if (mk.nu < power) continue;
                std::vector<FElem> col(static_cast<size_t>(C.dims[static_cast<size_t>(p)]), k.zero());
                std::vector<FElem> red;
                spot_reduce(C, p, static_cast<int>(s), {{mk, k.one()}}, red);
                int off = C.offsets[static_cast<size_t>(p)][s];
                for (size_t rr = 0; rr < red.size(); ++rr)
                    col[static_cast<size_t>(off) + rr] = red[rr];
                cols.push_back(std::move(col));
            }
        }
        KMat E(C.dims[static_cast<size_t>(p)], static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < E.rows; ++i) E.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
        span.cols.push_back(std::move(E));
    }
    return span;
}

SheafSpan ga_span(const CechComplex& C, long r, const std::vector<std::vector<MultiPoly>>& gens,
                  const std::vector<long>& shifts) {
    SheafSpan span;
    const BaseField& k = C.M.k;
    for (int p = 0; p < C.nlevels(); ++p) {
        const auto& lvl = C.levels[static_cast<size_t>(p)];
        std::vector<std::vector<FElem>> cols;
        for (size_t s = 0; s < lvl.size(); ++s) {
            const Spot& sp = lvl[s];
            const auto& chart_gens = gens[static_cast<size_t>(sp.base)];
            long shift = shifts[static_cast<size_t>(sp.base)];
            for (const auto& q : chart_gens) {
                auto terms = gen_terms(C.M, sp.base, q);
                // multiply by every window monomial of the spot
                for (const auto& mk : sp.monos) {
                    std::vector<std::pair<MonoKey, FElem>> prods;
                    bool ok = true;
                    for (const auto& tm : terms) {
                        MonoKey key;
                        key.g = ev_add(mk.g, tm.dg);
                        key.nu = mk.nu + tm.dt - static_cast<int>(shift);
                        if (key.nu >= C.win.N) continue;
                        if (key.nu < C.nu_lo) {
                            ok = false;
                            break;
                        }
                        prods.emplace_back(std::move(key), tm.c);
                    }
                    if (!ok || prods.empty()) continue;
                    std::vector<FElem> red;
                    if (!spot_reduce(C, p, static_cast<int>(s), prods, red)) continue;
                    bool nz = false;
                    for (const auto& x : red)
                        if (!x.is_zero()) nz = true;
                    if (!nz) continue;
                    std::vector<FElem> col(static_cast<size_t>(C.dims[static_cast<size_t>(p)]), k.zero());
                    int off = C.offsets[static_cast<size_t>(p)][s];
                    for (size_t rr = 0; rr < red.size(); ++rr)
                        col[static_cast<size_t>(off) + rr] = red[rr];
                    cols.push_back(std::move(col));
                }
            }
        }
        KMat E(C.dims[static_cast<size_t>(p)], static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < E.rows; ++i) E.at(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
        span.cols.push_back(std::move(E));
    }
    (void)r;
    return span;
}

SubComplex restrict_to_span(const CechComplex& C, const SheafSpan& span) {
    SubComplex sub;
    const BaseField& k = C.M.k;
    // reduce the span columns to a basis per level
    for (int p = 0; p < C.nlevels(); ++p) {
        KMat cols = span.cols[static_cast<size_t>(p)];
        // column-reduce: transpose, rref, keep independent rows
        KMat tr(cols.cols, cols.rows);
        for (int i = 0; i < cols.rows; ++i)
            for (int j = 0; j < cols.cols; ++j) tr.at(j, i) = cols.at(i, j);
        KMat rr = tr;
        auto piv = km_rref(k, rr);
        KMat E(cols.rows, static_cast<int>(piv.size()));
        for (size_t q = 0; q < piv.size(); ++q)
            for (int i = 0; i < cols.rows; ++i) E.at(i, static_cast<int>(q)) = rr.at(static_cast<int>(q), i);
        sub.embed.push_back(std::move(E));
        sub.dims.push_back(static_cast<int>(piv.size()));
    }
    auto solve_cols = [&](const KMat& E, const KMat& image) {
        KMat X(E.cols, image.cols);
        for (int j = 0; j < image.cols; ++j) {
            std::vector<FElem> b(static_cast<size_t>(image.rows));
            for (int i = 0; i < image.rows; ++i) b[static_cast<size_t>(i)] = image.at(i, j);
            std::vector<FElem> x;
            if (!km_solve(k, E, b, x))
                throw error("restrict_to_span: span is not stable (not a subcomplex)");
            for (int i = 0; i < E.cols; ++i) X.at(i, j) = x[static_cast<size_t>(i)];
        }
        return X;
    };
    for (int p = 0; p + 1 < C.nlevels(); ++p) {
        KMat img = km_mul(k, C.d[static_cast<size_t>(p)], sub.embed[static_cast<size_t>(p)]);
        sub.d.push_back(solve_cols(sub.embed[static_cast<size_t>(p + 1)], img));
    }
    if (C.with_t) {
        for (int p = 0; p < C.nlevels(); ++p) {
            KMat img = km_mul(k, C.tact[static_cast<size_t>(p)], sub.embed[static_cast<size_t>(p)]);
            sub.tact.push_back(solve_cols(sub.embed[static_cast<size_t>(p)], img));
        }
    }
    return sub;
}

}  // namespace gal
