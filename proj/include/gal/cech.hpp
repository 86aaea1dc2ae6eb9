#pragma once

#include "gal/kmat.hpp"
#include "gal/model.hpp"

namespace gal {

struct Window {
    int D = 2;
    int N = 3;
};

// A monomial section on an overlap: global Laurent exponent and t-exponent.
struct MonoKey {
    ExpVec g;
    int nu = 0;

    bool operator<(const MonoKey& o) const {
        if (g != o.g) return g < o.g;
        return nu < o.nu;
    }
    bool operator==(const MonoKey& o) const { return g == o.g && nu == o.nu; }
};

// One Čech spot: the section space of the overlap of the charts in S,
// presented on the base (minimal) chart with a bounded denominator.
struct Spot {
    std::vector<int> S;
    int base = 0;
    ExpVec inv_sum;   // sum of the overlap inverter exponents (global)
    int mult = 0;     // denominator multiplier (>= D, grown to closure)
    int cap = 0;      // chart-degree cap for numerators
    std::vector<MonoKey> monos;          // full monomial window, sorted
    std::map<MonoKey, int> mono_index;
    // relation reduction modulo the chart ideal (empty if the ideal is 0)
    KMat rel;                     // rref rows over the monomial coordinates
    std::vector<int> rel_pivots;  // pivot monomial positions
    std::vector<int> basis;       // non-pivot monomial positions

    int dim() const { return static_cast<int>(basis.size()); }
};

// Truncated Čech complex of the structure sheaf on the cover nerve. In
// t-mode the spaces are reduced mod t^N and carry the t-action; in T-mode
// the t-direction is left free (used when the chart ideals are t-free).
struct CechComplex {
    ModelCover M;
    Window win;
    bool with_t = true;
    int nu_lo = 0;  // smallest t-exponent carried (negative for twists below 0)
    std::vector<std::vector<Spot>> levels;  // levels[p]: spots with |S| = p+1
    std::vector<int> dims;                  // total dimension per level
    std::vector<std::vector<int>> offsets;  // offset of each spot inside its level
    std::vector<KMat> d;                    // d[p]: C^p -> C^{p+1}
    std::vector<KMat> tact;                 // t-action per level (t-mode only)

    int nlevels() const { return static_cast<int>(levels.size()); }
    // coordinates of a monomial section of spot (p, s) inside level p
    int coord(int p, int s, int basis_pos) const;
};

CechComplex build_cech(const ModelCover& M, Window win, bool with_t, int nu_lo);

// Columns spanning a subsheaf's windowed sections inside each level of C.
struct SheafSpan {
    std::vector<KMat> cols;  // per level: dim(level) x spandim
};

// t^(r+1) * structure subspace (the Ga spaces on reduced special fibers).
SheafSpan t_power_span(const CechComplex& C, long power);

// General Ga(r) span from per-chart section-module generators. gens[i] are
// numerators on chart i with the common t-shift shifts[i]; the instance
// vectors are reduced modulo the chart relations.
SheafSpan ga_span(const CechComplex& C, long r, const std::vector<std::vector<MultiPoly>>& gens,
                  const std::vector<long>& shifts);

// Restrict the complex differentials (and t-action) to a span; checks the
// span is d-stable and t-stable, i.e. a subcomplex.
struct SubComplex {
    std::vector<int> dims;
    std::vector<KMat> d;
    std::vector<KMat> tact;
    std::vector<KMat> embed;  // columns: basis of the span in ambient coordinates
};

SubComplex restrict_to_span(const CechComplex& C, const SheafSpan& span);

// Reduce an arbitrary monomial combination into spot coordinates (joint index
// into level p); entries outside the window are rejected.
bool spot_reduce(const CechComplex& C, int p, int s,
                 const std::vector<std::pair<MonoKey, FElem>>& terms, std::vector<FElem>& out);

}  // namespace gal
