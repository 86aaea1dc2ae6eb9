#pragma once

#include <optional>

#include "gal/groebner.hpp"
#include "gal/newton.hpp"

namespace gal {

enum class TriState { Yes, No, Unknown };

// Affine chart of a flat R-model: A = k[t, x1..xn]/I with U = Spec A[1/t].
struct Chart {
    std::string name;
    PolyRing ring;  // contains the variable "t"
    Ideal presentation;
    bool domain_asserted = false;

    int t_index() const { return ring.var_index("t"); }
};

Chart make_chart(std::string name, PolyRing ring, std::vector<MultiPoly> gens,
                 bool domain_asserted = false);

struct ChartDiagnostics {
    bool t_torsion_free = false;
    TriState generic_fiber_smooth = TriState::Unknown;
    int fiber_codim = 0;
};

// Flatness via saturation at t, generic-fiber smoothness via the Jacobian
// criterion (derivatives in the chart variables, t inverted).
ChartDiagnostics verify_chart(const Chart& c);

// Integral closure data produced by the Grauert-Remmert loop. The closure is
// A[w_1..w_s]/ext_ideal; each module generator is a fraction num/den over A.
struct NormalizationData {
    PolyRing ext_ring;
    Ideal ext_ideal;
    int n_new_vars = 0;
    int rounds = 0;
    // A-module generators of the closure, as fractions over the chart ring
    std::vector<MultiPoly> module_numerators;
    MultiPoly module_denominator;
    // monic integral equation for each adjoined variable, in ext_ring
    std::vector<MultiPoly> monic_equations;
    Ideal conductor_witness;  // test ideal at exit, in ext_ring

    bool trivial() const { return n_new_vars == 0; }
};

// Grauert-Remmert normalization loop: test ideal J = radical of the singular
// locus, enlarge A to Hom(J, J) until stable. Requires a domain chart.
NormalizationData normalize(const Chart& c, int round_cap = 16);

// Re-check Hom(J, J) = closure for a computed normalization.
bool grauert_remmert_verified(const Chart& c, const NormalizationData& nd);

// Sections of G_a(r) on a chart with integer twist r: the A-module
// t^r * sqrt(t*Abar) given by ideal generators in the closure presentation
// together with a t-power shift (negative twists are fractions over t).
struct GaSectionModule {
    Chart chart;
    long twist = 0;
    PolyRing pres_ring;                 // presentation ring of the closure
    Ideal pres_ideal;                   // its ideal
    std::vector<MultiPoly> generators;  // numerators, in pres_ring
    long tshift = 0;                    // generator = numerator / t^tshift
};

GaSectionModule ga_sections(const Chart& c, long r);

// Membership certificate for a in G_a(n/m) on the chart.
struct GaCertificate {
    bool member = false;
    bool integral = false;       // a^m/t^n lies in the closure at all
    int exponent = 0;            // smallest e <= cap with Q^e in t*Abar (0 = none found)
    bool rabinowitsch = false;   // membership decided by the Rabinowitsch trick
    std::string detail;
};

// a is given as numerator/t^tshift with numerator in the chart ring.
GaCertificate ga_membership(const MultiPoly& numerator, long tshift, const Chart& c, long n,
                            long m);

// An integral K'-point of the chart (an R'-algebra map, K' = k((t^(1/e)))),
// recorded as truncated series per chart variable, together with the
// valuation of the tested element.
struct PlaceWitness {
    int ram = 1;
    std::vector<TruncatedSeries> coordinates;  // one per non-t chart variable
    Rat value = 0;                             // v_x(a)
    bool verified = false;
};

struct WitnessSearchResult {
    std::optional<PlaceWitness> witness;
    bool exhausted_bounds = false;  // search space fully swept (still bounded)
};

// Search for a closed point x with v_x(a) <= r on a curve-type chart
// (at most 2 chart variables, ideal empty or principal).
WitnessSearchResult place_witness_search(const MultiPoly& numerator, long tshift, const Chart& c,
                                         const Rat& r, int e_max);

// Chart with one element inverted (fresh variable + relation z*f = 1).
Chart chart_localize(const Chart& c, const MultiPoly& f, const std::string& varname);

}  // namespace gal
