#include "gal/multipoly.hpp"

#include <algorithm>

namespace gal {

ExpVec ev_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec ev_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec ev_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool ev_divides(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool ev_disjoint(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

int ev_total(const ExpVec& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::eq(const PolyRing& o) const { return k.eq(o.k) && vars == o.vars; }

PolyRing ring_extend(const PolyRing& R, const std::vector<std::string>& extra) {
    PolyRing R2 = R;
    for (const auto& v : extra) {
        if (R2.var_index(v) >= 0) throw error("ring_extend: duplicate variable " + v);
        R2.vars.push_back(v);
    }
    return R2;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, ev_total(e));
    return d;
}

MultiPoly mp_zero() { return MultiPoly{}; }

MultiPoly mp_const(const PolyRing& R, const FElem& a) {
    MultiPoly p;
    if (!a.is_zero()) p.terms.emplace(ExpVec(static_cast<size_t>(R.nvars()), 0), a);
    return p;
}

MultiPoly mp_var(const PolyRing& R, int i, int e) {
    if (i < 0 || i >= R.nvars()) throw error("mp_var: bad index");
    MultiPoly p;
    ExpVec ev(static_cast<size_t>(R.nvars()), 0);
    ev[static_cast<size_t>(i)] = e;
    p.terms.emplace(std::move(ev), R.k.one());
    return p;
}

MultiPoly mp_monomial(const PolyRing& R, const ExpVec& e, const FElem& c) {
    MultiPoly p;
    if (static_cast<int>(e.size()) != R.nvars()) throw error("mp_monomial: bad exponent width");
    if (!c.is_zero()) p.terms.emplace(e, c);
    return p;
}

MultiPoly mp_add(const PolyRing& R, const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms.emplace(e, c);
        } else {
            FElem s = R.k.add(it->second, c);
            if (s.is_zero()) r.terms.erase(it);
            else it->second = s;
        }
    }
    return r;
}

MultiPoly mp_neg(const PolyRing& R, const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [e, c] : r.terms) c = R.k.neg(c);
    return r;
}

MultiPoly mp_sub(const PolyRing& R, const MultiPoly& a, const MultiPoly& b) {
    return mp_add(R, a, mp_neg(R, b));
}

MultiPoly mp_mul_term(const PolyRing& R, const MultiPoly& a, const ExpVec& e, const FElem& c) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms) r.terms.emplace(ev_add(ea, e), R.k.mul(ca, c));
    return r;
}

MultiPoly mp_mul(const PolyRing& R, const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            ExpVec e = ev_add(ea, eb);
            FElem c = R.k.mul(ca, cb);
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                if (!c.is_zero()) r.terms.emplace(std::move(e), c);
            } else {
                FElem s = R.k.add(it->second, c);
                if (s.is_zero()) r.terms.erase(it);
                else it->second = s;
            }
        }
    }
    return r;
}

MultiPoly mp_scale(const PolyRing& R, const MultiPoly& a, const FElem& c) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, ca] : a.terms) r.terms.emplace(e, R.k.mul(ca, c));
    return r;
}

MultiPoly mp_pow(const PolyRing& R, const MultiPoly& a, long e) {
    MultiPoly r = mp_one(R), b = a;
    while (e > 0) {
        if (e & 1) r = mp_mul(R, r, b);
        b = mp_mul(R, b, b);
        e >>= 1;
    }
    return r;
}

bool mp_eq(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    auto it = a.terms.begin(), jt = b.terms.begin();
    for (; it != a.terms.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

MultiPoly mp_subst(const PolyRing& R, const MultiPoly& a, const PolyRing& R2,
                   const std::vector<MultiPoly>& images) {
    if (static_cast<int>(images.size()) != R.nvars()) throw error("mp_subst: arity mismatch");
    MultiPoly r = mp_zero();
    for (const auto& [e, c] : a.terms) {
        MultiPoly m = mp_const(R2, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) m = mp_mul(R2, m, mp_pow(R2, images[i], e[i]));
        r = mp_add(R2, r, m);
    }
    return r;
}

MultiPoly mp_derivative(const PolyRing& R, const MultiPoly& a, int var) {
    MultiPoly r;
    for (const auto& [e, c] : a.terms) {
        int n = e[static_cast<size_t>(var)];
        if (n == 0) continue;
        FElem nc = R.k.mul(c, R.k.from_long(n));
        if (nc.is_zero()) continue;
        ExpVec e2 = e;
        e2[static_cast<size_t>(var)] -= 1;
        r.terms.emplace(std::move(e2), nc);
    }
    return r;
}

bool mp_depends_on(const MultiPoly& a, int var) {
    for (const auto& [e, c] : a.terms)
        if (e[static_cast<size_t>(var)] != 0) return true;
    return false;
}

MultiPoly mp_lift(const MultiPoly& a, const std::vector<int>& var_map, int new_nvars) {
    MultiPoly r;
    for (const auto& [e, c] : a.terms) {
        ExpVec e2(static_cast<size_t>(new_nvars), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            int j = var_map[i];
            if (j < 0) throw error("mp_lift: dropped variable occurs");
            e2[static_cast<size_t>(j)] = e[i];
        }
        r.terms.emplace(std::move(e2), c);
    }
    return r;
}

std::string mp_str(const PolyRing& R, const MultiPoly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : a.terms) {
        if (!first) s += " + ";
        first = false;
        bool unit = (c == R.k.one()) && ev_total(e) > 0;
        if (!unit) s += R.k.str(c);
        bool star = !unit;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) s += "*";
            star = true;
            s += R.vars[i];
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

int MonomialOrder::cmp(const ExpVec& a, const ExpVec& b) const {
    auto lex_cmp = [](const ExpVec& x, const ExpVec& y, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        return 0;
    };
    auto grevlex_cmp = [](const ExpVec& x, const ExpVec& y, size_t lo, size_t hi) {
        int dx = 0, dy = 0;
        for (size_t i = lo; i < hi; ++i) {
            dx += x[i];
            dy += y[i];
        }
        if (dx != dy) return dx < dy ? -1 : 1;
        for (size_t i = hi; i-- > lo;)
            if (x[i] != y[i]) return x[i] > y[i] ? -1 : 1;
        return 0;
    };
    switch (kind) {
        case Kind::Lex:
            return lex_cmp(a, b, 0, a.size());
        case Kind::Grevlex:
            return grevlex_cmp(a, b, 0, a.size());
        case Kind::Elim: {
            size_t s = static_cast<size_t>(elim_block);
            int c = grevlex_cmp(a, b, 0, s);
            if (c != 0) return c;
            return grevlex_cmp(a, b, s, a.size());
        }
        case Kind::Weighted: {
            long wa = 0, wb = 0;
            for (size_t i = 0; i < a.size(); ++i) {
                wa += static_cast<long>(weights[i]) * a[i];
                wb += static_cast<long>(weights[i]) * b[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            return grevlex_cmp(a, b, 0, a.size());
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: return "grevlex";
        case Kind::Elim: return "elim:" + std::to_string(elim_block);
        case Kind::Weighted: {
            std::string s = "w:";
            for (int w : weights) s += std::to_string(w) + ",";
            return s;
        }
    }
    return "?";
}

}  // namespace gal
