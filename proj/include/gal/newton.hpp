#pragma once

#include "gal/scalar.hpp"

namespace gal {

// Univariate polynomial over K = k((t)), dense in the main variable.
using KPoly = std::vector<Scalar>;

KPoly kp_trim(const ScalarRing& S, KPoly f);
int kp_deg(const KPoly& f);
KPoly kp_add(const ScalarRing& S, const KPoly& a, const KPoly& b);
KPoly kp_mul(const ScalarRing& S, const KPoly& a, const KPoly& b);
KPoly kp_derivative(const ScalarRing& S, const KPoly& f);
Scalar kp_eval(const ScalarRing& S, const KPoly& f, const Scalar& x);
std::string kp_str(const ScalarRing& S, const KPoly& f, const std::string& var = "z");

struct NewtonSegment {
    Rat slope;
    int length = 0;
};

// Lower convex hull of the coefficient valuations, excluding the order of
// vanishing at 0 (reported separately); slopes strictly increasing.
struct NewtonPolygon {
    std::vector<NewtonSegment> segments;
    int ord0 = 0;

    int total_length() const {
        int n = 0;
        for (const auto& s : segments) n += s.length;
        return n;
    }
};

NewtonPolygon newton_polygon(const ScalarRing& S, const KPoly& f);

// Root valuations over an algebraic closure: negated hull slopes with
// multiplicity, plus +inf with multiplicity ord0.
std::vector<std::pair<Val, int>> root_valuations(const NewtonPolygon& np);

// A Puiseux root of f to finite precision: series in u = t^(1/ram).
struct PuiseuxRoot {
    TruncatedSeries series;  // exponents are u-powers, u = t^(1/ram)
    int ram = 1;
    int multiplicity = 1;
    Val valuation = Val::infinity();  // t-adic valuation of the root
};

// Newton-polygon-guided series lifting of the roots of f whose coefficients
// lie in k (no residue field extension at this layer). Roots requiring
// ramification beyond e_max, non-k residual roots, or wild slopes
// (denominator divisible by char k) are skipped; `complete` reports whether
// every root was captured.
struct PuiseuxResult {
    std::vector<PuiseuxRoot> roots;
    bool complete = true;
};

PuiseuxResult puiseux_roots(const ScalarRing& S, const KPoly& f, int prec, int e_max);

// Roots of a univariate polynomial over k itself (brute force over F_p,
// rational-root search over Q). Returns (root, multiplicity) pairs; sets
// `complete` to false when the search is only partial.
std::vector<std::pair<FElem, int>> field_roots(const BaseField& k, const UPoly& f, bool& complete);

}  // namespace gal
