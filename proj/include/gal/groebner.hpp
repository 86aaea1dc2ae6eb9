#pragma once

#include "gal/multipoly.hpp"
#include "gal/upoly.hpp"

namespace gal {

// Monomial order whose dominant block is an arbitrary variable subset.
struct MaskOrder {
    std::vector<char> mask;  // 1 = dominant
    int cmp(const ExpVec& a, const ExpVec& b) const;
};

struct Lead {
    ExpVec exp;
    FElem coeff;
};

Lead mp_lead(const MultiPoly& f, const MonomialOrder& ord);

// Finitely generated ideal with a per-order cache of reduced Groebner bases.
struct Ideal {
    PolyRing ring;
    std::vector<MultiPoly> gens;
    mutable std::map<std::string, std::vector<MultiPoly>> gb_cache;

    Ideal() = default;
    Ideal(PolyRing r, std::vector<MultiPoly> g) : ring(std::move(r)), gens(std::move(g)) {}
};

Ideal make_ideal(const PolyRing& R, std::vector<MultiPoly> gens);

// Reduced Groebner basis (unique for the order); cached on the ideal.
const std::vector<MultiPoly>& groebner_basis(const Ideal& I, const MonomialOrder& ord);

MultiPoly normal_form(const PolyRing& R, MultiPoly f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord);
// Division with cofactors: f = sum_i cof[i]*basis[i] + r.
MultiPoly normal_form_cof(const PolyRing& R, MultiPoly f, const std::vector<MultiPoly>& basis,
                          const MonomialOrder& ord, std::vector<MultiPoly>& cof);

bool ideal_membership(const MultiPoly& f, const Ideal& I);
bool contains_one(const Ideal& I);
bool ideal_eq(const Ideal& I, const Ideal& J);
bool ideal_contains(const Ideal& I, const Ideal& J);  // J subset of I

// I cap k[vars outside `drop`], returned in the same ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop);
Ideal saturate(const Ideal& I, const MultiPoly& f);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const MultiPoly& f);       // I : f
Ideal quotient_ideal(const Ideal& I, const Ideal& J);     // I : J

// Rabinowitsch membership in the radical; valid in any characteristic.
bool radical_membership(const MultiPoly& f, const Ideal& I);

// Krick-Logar radical: iterated elimination plus univariate squarefree parts.
// Refuses in small positive characteristic relative to the degrees met.
Ideal radical(const Ideal& I);

// Krull dimension of R/I (-1 for the unit ideal).
int krull_dimension(const Ideal& I);
// Lexicographically first maximal independent variable set modulo LT(I).
std::vector<int> independent_set(const Ideal& I);

// Generator of I cap k[var] (zero polynomial when the intersection is 0).
UPoly univariate_eliminant(const Ideal& I, int var);

// Squarefree part of a univariate polynomial over a perfect field.
UPoly up_squarefree_part(const BaseField& k, const UPoly& f);

MultiPoly mp_quo_exact(const PolyRing& R, const MultiPoly& f, const MultiPoly& g);

}  // namespace gal
