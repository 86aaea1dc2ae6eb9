#include "gal/model.hpp"

#include <algorithm>
#include <map>

namespace gal {

Chart CoverChart::as_chart() const {
    Chart c;
    c.name = name;
    c.ring = ring;
    c.presentation = make_ideal(ring, ideal_gens);
    c.domain_asserted = true;  // supported model classes have integral charts
    return c;
}

bool ModelCover::ideal_free() const {
    for (const auto& c : charts)
        if (!c.ideal_gens.empty()) return false;
    return true;
}

bool ModelCover::t_free_ideals() const {
    for (const auto& c : charts) {
        int ti = c.ring.var_index("t");
        for (const auto& g : c.ideal_gens)
            if (mp_depends_on(g, ti)) return false;
    }
    return true;
}

std::optional<std::vector<int>> chart_coords(const ModelCover& M, int chart, const ExpVec& g) {
    const CoverChart& C = M.charts[static_cast<size_t>(chart)];
    int n = M.n_global();
    int m = C.nvars();
    // solve sum_l a_l * v_l = g over Q by Gaussian elimination
    std::vector<std::vector<Rat>> A(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(m) + 1, Rat(0)));
    for (int l = 0; l < m; ++l)
        for (int r = 0; r < n; ++r)
            A[static_cast<size_t>(r)][static_cast<size_t>(l)] = C.var_global[static_cast<size_t>(l)][static_cast<size_t>(r)];
    for (int r = 0; r < n; ++r) A[static_cast<size_t>(r)][static_cast<size_t>(m)] = g[static_cast<size_t>(r)];
    int row = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < m && row < n; ++c) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (A[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[static_cast<size_t>(p)], A[static_cast<size_t>(row)]);
        Rat inv = Rat(1) / A[static_cast<size_t>(row)][static_cast<size_t>(c)];
        for (int j = c; j <= m; ++j) A[static_cast<size_t>(row)][static_cast<size_t>(j)] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            Rat f = A[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j <= m; ++j)
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * A[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++row;
    }
    // consistency: zero rows must have zero rhs
    for (int i = row; i < n; ++i)
        if (A[static_cast<size_t>(i)][static_cast<size_t>(m)] != 0) return std::nullopt;
    std::vector<int> coords(static_cast<size_t>(m), 0);
    for (size_t pi = 0; pi < pivot_col.size(); ++pi) {
        Rat v = A[pi][static_cast<size_t>(m)];
        if (denominator(v) != 1) return std::nullopt;
        Int num = numerator(v);
        coords[static_cast<size_t>(pivot_col[pi])] = static_cast<int>(num);
    }
    return coords;
}

ExpVec overlap_inverter(const ModelCover& M, int i, int j) {
    const CoverChart& Ci = M.charts[static_cast<size_t>(i)];
    const CoverChart& Cj = M.charts[static_cast<size_t>(j)];
    std::vector<char> needed(static_cast<size_t>(Ci.nvars()), 0);
    for (const auto& w : Cj.var_global) {
        auto a = chart_coords(M, i, w);
        if (!a) throw error("overlap_inverter: non-integral transition between charts " +
                            Ci.name + " and " + Cj.name);
        for (size_t l = 0; l < a->size(); ++l)
            if ((*a)[l] < 0) needed[l] = 1;
    }
    ExpVec g(static_cast<size_t>(M.n_global()), 0);
    for (size_t l = 0; l < needed.size(); ++l)
        if (needed[l]) g = ev_add(g, Ci.var_global[l]);
    return g;
}

void validate_cover(const ModelCover& M) {
    int n = M.n_charts();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (const auto& w : M.charts[static_cast<size_t>(j)].var_global)
                if (!chart_coords(M, i, w))
                    throw error("validate_cover: transition " + std::to_string(i) + "->" +
                                std::to_string(j) + " is not monomial-integral");
        }
    // transitions on triple overlaps compose by construction in the global
    // frame; check the exponent identity explicitly on the generators
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                if (i == j || j == l || i == l) continue;
                for (const auto& w : M.charts[static_cast<size_t>(l)].var_global) {
                    auto via_j = chart_coords(M, j, w);
                    auto direct = chart_coords(M, i, w);
                    if (!via_j || !direct) continue;
                    // compose: express chart-j coordinates in chart i
                    ExpVec acc(static_cast<size_t>(M.n_global()), 0);
                    for (size_t s = 0; s < via_j->size(); ++s)
                        for (int rep = 0; rep < std::abs((*via_j)[s]); ++rep)
                            acc = (*via_j)[s] > 0
                                      ? ev_add(acc, M.charts[static_cast<size_t>(j)].var_global[s])
                                      : ev_sub(acc, M.charts[static_cast<size_t>(j)].var_global[s]);
                    if (acc != w)
                        throw error("validate_cover: triple-overlap composition mismatch");
                }
            }
}

namespace {

int t_degree_of(const MultiPoly& f, int ti) {
    int d = 0;
    for (const auto& [e, c] : f.terms) d = std::max(d, e[static_cast<size_t>(ti)]);
    return d;
}

// total degree in the global variables (t excluded)
int T_degree(const MultiPoly& f, int ti) {
    int d = -1;
    for (const auto& [e, c] : f.terms) {
        int s = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != ti) s += e[i];
        if (d >= 0 && s != d) return -2;  // mixed degrees
        d = s;
    }
    return d;
}

}  // namespace

ModelCover build_proj_model(const std::string& name, const BaseField& k,
                            const std::vector<std::string>& global_vars,
                            const PolyRing& graded_ring,
                            const std::vector<MultiPoly>& homogeneous_ideal) {
    if (global_vars.size() < 2) throw error("build_proj_model: need at least 2 graded variables");
    int ti = graded_ring.var_index("t");
    if (ti < 0) throw error("build_proj_model: graded ring lacks t");
    for (const auto& f : homogeneous_ideal) {
        if (f.is_zero()) continue;
        if (T_degree(f, ti) == -2)
            throw error("build_proj_model: non-homogeneous ideal generator");
    }
    // t-flatness: the ideal must be saturated at t
    if (!homogeneous_ideal.empty()) {
        Ideal I = make_ideal(graded_ring, homogeneous_ideal);
        if (!I.gens.empty()) {
            Ideal sat = saturate(I, mp_var(graded_ring, ti));
            if (!ideal_eq(sat, I)) throw error("build_proj_model: ideal has t-torsion");
        }
    }

    ModelCover M;
    M.name = name;
    M.k = k;
    M.global_names = global_vars;
    M.is_proj = true;
    int m = static_cast<int>(global_vars.size());
    for (int i = 0; i < m; ++i) {
        CoverChart C;
        C.name = name + "_U" + std::to_string(i);
        C.homog.assign(static_cast<size_t>(m), 0);
        C.homog[static_cast<size_t>(i)] = 1;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            C.var_names.push_back(global_vars[static_cast<size_t>(j)] + "_" +
                                  global_vars[static_cast<size_t>(i)]);
            ExpVec v(static_cast<size_t>(m), 0);
            v[static_cast<size_t>(j)] = 1;
            v[static_cast<size_t>(i)] = -1;
            C.var_global.push_back(std::move(v));
        }
        std::vector<std::string> ringvars = {"t"};
        for (const auto& vn : C.var_names) ringvars.push_back(vn);
        C.ring = PolyRing{k, ringvars};
        // dehomogenize the ideal generators on D+(T_i)
        for (const auto& f : homogeneous_ideal) {
            if (f.is_zero()) continue;
            MultiPoly g;
            for (const auto& [e, coef] : f.terms) {
                ExpVec e2(static_cast<size_t>(C.ring.nvars()), 0);
                e2[0] = e[static_cast<size_t>(ti)];
                int pos = 1;
                for (int j = 0; j < m; ++j) {
                    int idx = graded_ring.var_index(global_vars[static_cast<size_t>(j)]);
                    if (j == i) continue;
                    e2[static_cast<size_t>(pos)] = e[static_cast<size_t>(idx)];
                    ++pos;
                }
                auto it = g.terms.find(e2);
                if (it == g.terms.end()) g.terms.emplace(std::move(e2), coef);
                else it->second = k.add(it->second, coef);
            }
            // drop zero coefficients created by merging
            for (auto it = g.terms.begin(); it != g.terms.end();) {
                if (it->second.is_zero()) it = g.terms.erase(it);
                else ++it;
            }
            if (!g.is_zero()) C.ideal_gens.push_back(std::move(g));
        }
        M.charts.push_back(std::move(C));
    }
    validate_cover(M);
    return M;
}

ModelCover blowup_model(const ModelCover& M, const std::vector<MultiPoly>& center,
                        const PolyRing& graded_ring) {
    if (center.empty()) throw error("blowup_model: empty center generator list");
    int ti = graded_ring.var_index("t");
    // unit ideal: identity
    for (const auto& h : center)
        if (!h.is_zero() && h.total_degree() == 0) return M;
    // supported centers: distinct degree-one global variables
    std::vector<int> cvars;
    for (const auto& h : center) {
        if (h.is_zero()) throw error("blowup_model: zero center generator");
        if (mp_depends_on(h, ti)) throw error("blowup_model: center with t-torsion");
        if (h.terms.size() != 1 || ev_total(h.terms.begin()->first) != 1)
            throw error("blowup_model: only coordinate-point centers are supported");
        const ExpVec& e = h.terms.begin()->first;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) {
                int gi = -1;
                for (int g = 0; g < M.n_global(); ++g)
                    if (graded_ring.var_index(M.global_names[static_cast<size_t>(g)]) ==
                        static_cast<int>(i))
                        gi = g;
                if (gi < 0) throw error("blowup_model: center variable not in the model");
                cvars.push_back(gi);
            }
    }
    std::sort(cvars.begin(), cvars.end());
    if (std::adjacent_find(cvars.begin(), cvars.end()) != cvars.end())
        throw error("blowup_model: repeated center generator");

    ModelCover B;
    B.name = M.name + "_bl";
    B.k = M.k;
    B.global_names = M.global_names;
    B.is_proj = false;
    for (int i = 0; i < M.n_charts(); ++i) {
        const CoverChart& C = M.charts[static_cast<size_t>(i)];
        // center restricted to the chart: global vectors of the generators
        // relative to the chart lattice
        std::vector<std::vector<int>> ccoords;
        bool unit_on_chart = false;
        for (int cv : cvars) {
            ExpVec g(static_cast<size_t>(M.n_global()), 0);
            g[static_cast<size_t>(cv)] = 1;
            g = ev_sub(g, C.homog);  // dehomogenize: T_cv / (chart monomial)
            auto a = chart_coords(M, i, g);
            if (!a)
                throw error("blowup_model: center generator is not monomial on chart " + C.name);
            bool nonneg = true;
            int total = 0;
            for (int x : *a) {
                if (x < 0) nonneg = false;
                total += std::abs(x);
            }
            if (!nonneg) throw error("blowup_model: center generator not regular on " + C.name);
            if (total == 0) unit_on_chart = true;
            ccoords.push_back(*a);
        }
        if (unit_on_chart) {
            B.charts.push_back(C);  // blowup is an isomorphism over this chart
            continue;
        }
        if (ccoords.size() != 2)
            throw error("blowup_model: only two-generator centers are supported");
        // both generators must be single chart coordinates
        auto coord_index = [&](const std::vector<int>& a) -> int {
            int idx = -1;
            for (size_t l = 0; l < a.size(); ++l) {
                if (a[l] == 0) continue;
                if (a[l] != 1 || idx >= 0) return -1;
                idx = static_cast<int>(l);
            }
            return idx;
        };
        int la = coord_index(ccoords[0]);
        int lb = coord_index(ccoords[1]);
        if (la < 0 || lb < 0 || la == lb)
            throw error("blowup_model: center is not a pair of chart coordinates on " + C.name);
        if (!C.ideal_gens.empty())
            throw error("blowup_model: Rees charts on non-free chart ideals are unsupported");
        // two Rees charts: keep x_a, replace x_b by x_b/x_a, and symmetrically
        for (int which = 0; which < 2; ++which) {
            int keep = which == 0 ? la : lb;
            int repl = which == 0 ? lb : la;
            CoverChart R;
            R.name = C.name + "_bl" + std::to_string(which);
            R.var_names = C.var_names;
            R.var_global = C.var_global;
            R.homog = C.homog;
            R.var_names[static_cast<size_t>(repl)] =
                C.var_names[static_cast<size_t>(repl)] + "_over_" + C.var_names[static_cast<size_t>(keep)];
            R.var_global[static_cast<size_t>(repl)] =
                ev_sub(C.var_global[static_cast<size_t>(repl)], C.var_global[static_cast<size_t>(keep)]);
            std::vector<std::string> ringvars = {"t"};
            for (const auto& vn : R.var_names) ringvars.push_back(vn);
            R.ring = PolyRing{B.k, ringvars};
            B.charts.push_back(std::move(R));
        }
    }
    validate_cover(B);
    return B;
}

ModelCover product_model(const ModelCover& A, const ModelCover& B) {
    if (!A.k.eq(B.k)) throw error("product_model: field mismatch");
    ModelCover P;
    P.name = A.name + "x" + B.name;
    P.k = A.k;
    P.global_names = A.global_names;
    for (const auto& n : B.global_names) P.global_names.push_back(n + "'");
    int na = A.n_global(), nb = B.n_global();
    for (const auto& CA : A.charts)
        for (const auto& CB : B.charts) {
            CoverChart C;
            C.name = CA.name + "x" + CB.name;
            C.homog.assign(static_cast<size_t>(na + nb), 0);
            for (int r = 0; r < na; ++r) C.homog[static_cast<size_t>(r)] = CA.homog[static_cast<size_t>(r)];
            for (int r = 0; r < nb; ++r) C.homog[static_cast<size_t>(na + r)] = CB.homog[static_cast<size_t>(r)];
            C.var_names = CA.var_names;
            for (const auto& vn : CB.var_names) C.var_names.push_back(vn + "'");
            for (const auto& v : CA.var_global) {
                ExpVec e(static_cast<size_t>(na + nb), 0);
                for (int r = 0; r < na; ++r) e[static_cast<size_t>(r)] = v[static_cast<size_t>(r)];
                C.var_global.push_back(std::move(e));
            }
            for (const auto& v : CB.var_global) {
                ExpVec e(static_cast<size_t>(na + nb), 0);
                for (int r = 0; r < nb; ++r) e[static_cast<size_t>(na + r)] = v[static_cast<size_t>(r)];
                C.var_global.push_back(std::move(e));
            }
            std::vector<std::string> ringvars = {"t"};
            for (const auto& vn : C.var_names) ringvars.push_back(vn);
            C.ring = PolyRing{P.k, ringvars};
            // transport both ideals
            auto lift_gens = [&](const CoverChart& src, int offset) {
                for (const auto& g : src.ideal_gens) {
                    std::vector<int> vmap(static_cast<size_t>(src.ring.nvars()));
                    vmap[0] = 0;  // t
                    for (int l = 0; l < src.nvars(); ++l)
                        vmap[static_cast<size_t>(l + 1)] = 1 + offset + l;
                    C.ideal_gens.push_back(mp_lift(g, vmap, C.ring.nvars()));
                }
            };
            lift_gens(CA, 0);
            lift_gens(CB, CA.nvars());
            P.charts.push_back(std::move(C));
        }
    validate_cover(P);
    return P;
}

void validate_morphism(const ModelCover& M, const GradedMorphism& f, const PolyRing& graded_ring,
                       const std::vector<MultiPoly>& homogeneous_ideal) {
    int m = M.n_global();
    if (static_cast<int>(f.perm.size()) != m || static_cast<int>(f.coeff.size()) != m)
        throw error("morphism " + f.name + ": arity mismatch");
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int r = 0; r < m; ++r) {
        if (f.perm[static_cast<size_t>(r)] < 0 || f.perm[static_cast<size_t>(r)] >= m)
            throw error("morphism " + f.name + ": bad image index");
        if (f.coeff[static_cast<size_t>(r)].is_zero())
            throw error("morphism " + f.name + ": zero coefficient");
        seen[static_cast<size_t>(f.perm[static_cast<size_t>(r)])] = 1;
    }
    for (char s : seen)
        if (!s) throw error("morphism " + f.name + ": not a coordinate permutation");
    if (homogeneous_ideal.empty()) return;
    // the substitution must map the ideal into itself
    std::vector<MultiPoly> images(static_cast<size_t>(graded_ring.nvars()));
    for (int i = 0; i < graded_ring.nvars(); ++i) images[static_cast<size_t>(i)] = mp_var(graded_ring, i);
    for (int r = 0; r < m; ++r) {
        int src = graded_ring.var_index(M.global_names[static_cast<size_t>(r)]);
        int dst = graded_ring.var_index(M.global_names[static_cast<size_t>(f.perm[static_cast<size_t>(r)])]);
        images[static_cast<size_t>(src)] =
            mp_scale(graded_ring, mp_var(graded_ring, dst), f.coeff[static_cast<size_t>(r)]);
    }
    Ideal I = make_ideal(graded_ring, homogeneous_ideal);
    for (const auto& g : homogeneous_ideal) {
        MultiPoly img = mp_subst(graded_ring, g, graded_ring, images);
        if (!ideal_membership(img, I))
            throw error("morphism " + f.name + ": does not preserve the model ideal");
    }
}

}  // namespace gal
