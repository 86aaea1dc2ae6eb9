#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gal/field.hpp"

namespace gal {

using ExpVec = std::vector<int>;

ExpVec ev_add(const ExpVec& a, const ExpVec& b);
ExpVec ev_sub(const ExpVec& a, const ExpVec& b);
ExpVec ev_lcm(const ExpVec& a, const ExpVec& b);
bool ev_divides(const ExpVec& a, const ExpVec& b);  // a | b componentwise
bool ev_disjoint(const ExpVec& a, const ExpVec& b);
int ev_total(const ExpVec& a);

// Polynomial ring k[vars]; t is an ordinary variable wherever it occurs.
struct PolyRing {
    BaseField k;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const;  // -1 when absent
    bool eq(const PolyRing& o) const;
};

PolyRing ring_extend(const PolyRing& R, const std::vector<std::string>& extra);

// Sparse multivariate polynomial; the map keeps no zero coefficients and
// iterates exponent tuples lexicographically (canonical across runs).
struct MultiPoly {
    std::map<ExpVec, FElem> terms;

    bool is_zero() const { return terms.empty(); }
    int total_degree() const;
};

MultiPoly mp_zero();
MultiPoly mp_const(const PolyRing& R, const FElem& a);
inline MultiPoly mp_one(const PolyRing& R) { return mp_const(R, R.k.one()); }
MultiPoly mp_var(const PolyRing& R, int i, int e = 1);
MultiPoly mp_monomial(const PolyRing& R, const ExpVec& e, const FElem& c);
MultiPoly mp_add(const PolyRing& R, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_sub(const PolyRing& R, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_neg(const PolyRing& R, const MultiPoly& a);
MultiPoly mp_mul(const PolyRing& R, const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul_term(const PolyRing& R, const MultiPoly& a, const ExpVec& e, const FElem& c);
MultiPoly mp_scale(const PolyRing& R, const MultiPoly& a, const FElem& c);
MultiPoly mp_pow(const PolyRing& R, const MultiPoly& a, long e);
bool mp_eq(const MultiPoly& a, const MultiPoly& b);
// substitute vars[i] -> images[i] (images in ring R2)
MultiPoly mp_subst(const PolyRing& R, const MultiPoly& a, const PolyRing& R2,
                   const std::vector<MultiPoly>& images);
MultiPoly mp_derivative(const PolyRing& R, const MultiPoly& a, int var);
bool mp_depends_on(const MultiPoly& a, int var);
// lift along an injective variable map old index -> new index
MultiPoly mp_lift(const MultiPoly& a, const std::vector<int>& var_map, int new_nvars);
std::string mp_str(const PolyRing& R, const MultiPoly& a);

struct MonomialOrder {
    enum class Kind { Lex, Grevlex, Elim, Weighted };
    Kind kind = Kind::Grevlex;
    int elim_block = 0;          // Elim: vars [0, elim_block) dominate
    std::vector<int> weights;    // Weighted

    static MonomialOrder lex() { return MonomialOrder{Kind::Lex, 0, {}}; }
    static MonomialOrder grevlex() { return MonomialOrder{Kind::Grevlex, 0, {}}; }
    static MonomialOrder elim(int block) { return MonomialOrder{Kind::Elim, block, {}}; }
    static MonomialOrder weighted(std::vector<int> w) {
        return MonomialOrder{Kind::Weighted, 0, std::move(w)};
    }

    // total order: negative when a < b, 0 when equal, positive when a > b
    int cmp(const ExpVec& a, const ExpVec& b) const;
    std::string key() const;  // cache key
};

}  // namespace gal
