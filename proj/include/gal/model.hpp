#pragma once

#include "gal/integral.hpp"

namespace gal {

// One affine chart of a proper model. The chart coordinates are Laurent
// monomials in the global homogeneous variables; their exponent vectors form
// a basis of the degree-zero monomial lattice, which makes every transition
// map a monomial substitution.
struct CoverChart {
    std::string name;
    std::vector<std::string> var_names;  // chart coordinates, t excluded
    std::vector<ExpVec> var_global;      // global Laurent exponents per coordinate
    PolyRing ring;                       // k[t, var_names...]
    std::vector<MultiPoly> ideal_gens;   // chart ideal in `ring`
    ExpVec homog;                        // global exponent of the chart's homogenizing monomial

    int nvars() const { return static_cast<int>(var_names.size()); }
    Chart as_chart() const;
};

struct ModelCover {
    std::string name;
    BaseField k;
    std::vector<std::string> global_names;
    std::vector<CoverChart> charts;
    bool is_proj = false;  // standard Proj cover (blowups refine these)

    int n_global() const { return static_cast<int>(global_names.size()); }
    int n_charts() const { return static_cast<int>(charts.size()); }
    bool ideal_free() const;
    bool t_free_ideals() const;
};

// Chart coordinates of a global Laurent vector; nullopt when the monomial is
// not integral over the chart lattice (cannot happen for valid covers).
std::optional<std::vector<int>> chart_coords(const ModelCover& M, int chart, const ExpVec& g);

// Global exponent of the localization monomial inverted on chart i to reach
// the overlap with chart j (product of the chart-i coordinates that occur
// with negative exponents in chart j's coordinates).
ExpVec overlap_inverter(const ModelCover& M, int i, int j);

// Checks lattice integrality of all transitions and composes them over
// triple overlaps; throws on inconsistent gluing data.
void validate_cover(const ModelCover& M);

// Standard Proj cover of Proj k[t][T_0..T_m] / I with unit weights.
// The ideal generators must be T-homogeneous; t-torsion is rejected.
ModelCover build_proj_model(const std::string& name, const BaseField& k,
                            const std::vector<std::string>& global_vars,
                            const PolyRing& graded_ring,  // k[t, T_0..T_m]
                            const std::vector<MultiPoly>& homogeneous_ideal);

// Blowup in a monomial center (distinct degree-one coordinates, e.g. (X, Y)).
// Charts where the center restricts to the unit ideal are kept as they are;
// the others split into Rees charts. The unit ideal returns M unchanged.
ModelCover blowup_model(const ModelCover& M, const std::vector<MultiPoly>& center,
                        const PolyRing& graded_ring);

// Product with a second Proj-type cover (used for P^1 x M).
ModelCover product_model(const ModelCover& A, const ModelCover& B);

// Graded endomorphism T_r -> coeff_r * T_{perm_r} (a monomial-linear
// substitution); the supported morphism class for action computations.
struct GradedMorphism {
    std::string name;
    std::vector<int> perm;
    std::vector<FElem> coeff;
};

// Validate that the morphism maps the homogeneous ideal into itself.
void validate_morphism(const ModelCover& M, const GradedMorphism& f, const PolyRing& graded_ring,
                       const std::vector<MultiPoly>& homogeneous_ideal);

}  // namespace gal
