#include "gal/smat.hpp"

namespace gal {

SMat sm_mul(const ScalarRing& S, const SMat& A, const SMat& B) {
    if (A.cols != B.rows) throw error("sm_mul: shape mismatch");
    SMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int l = 0; l < A.cols; ++l) {
            if (A.at(i, l).is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                if (B.at(l, j).is_zero()) continue;
                C.at(i, j) = S.add(C.at(i, j), S.mul(A.at(i, l), B.at(l, j)));
            }
        }
    return C;
}

SMat sm_identity(const ScalarRing& S, int n) {
    SMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = S.one();
    return I;
}

bool sm_is_zero(const SMat& A) {
    for (const auto& x : A.a)
        if (!x.is_zero()) return false;
    return true;
}

bool sm_in_R(const SMat& A) {
    for (const auto& x : A.a)
        if (!x.is_zero() && x.shift < 0) return false;
    return true;
}

namespace {

std::vector<int> sm_rref(const ScalarRing& S, SMat& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int p = -1;
        for (int i = r; i < A.rows; ++i)
            if (!A.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(p, j), A.at(r, j));
        Scalar inv = S.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = S.mul(A.at(r, j), inv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || A.at(i, c).is_zero()) continue;
            Scalar f = A.at(i, c);
            for (int j = c; j < A.cols; ++j)
                A.at(i, j) = S.sub(A.at(i, j), S.mul(f, A.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int sm_rank(const ScalarRing& S, SMat A) { return static_cast<int>(sm_rref(S, A).size()); }

SMat sm_kernel(const ScalarRing& S, SMat A) {
    int n = A.cols;
    auto pivots = sm_rref(S, A);
    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    SMat K(n, static_cast<int>(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        K.at(fc, static_cast<int>(f)) = S.one();
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            K.at(pivots[pi], static_cast<int>(f)) = S.neg(A.at(static_cast<int>(pi), fc));
    }
    return K;
}

bool sm_solve(const ScalarRing& S, SMat A, const std::vector<Scalar>& b, std::vector<Scalar>& x) {
    int n = A.cols;
    SMat Ab(A.rows, n + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < n; ++j) Ab.at(i, j) = A.at(i, j);
        Ab.at(i, n) = b[static_cast<size_t>(i)];
    }
    auto pivots = sm_rref(S, Ab);
    for (int c : pivots)
        if (c == n) return false;
    x.assign(static_cast<size_t>(n), S.zero());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = Ab.at(static_cast<int>(pi), n);
    return true;
}

SmithResult sm_smith(const ScalarRing& S, SMat A) {
    if (!sm_in_R(A)) throw error("sm_smith: entries not integral over the local ring");
    SmithResult res;
    res.U = sm_identity(S, A.rows);
    res.V = sm_identity(S, A.cols);
    int n = std::min(A.rows, A.cols);
    int r = 0;
    for (; r < n; ++r) {
        // pivot: entry of minimal t-valuation in the remaining block
        int pi = -1, pj = -1;
        long best = 0;
        for (int i = r; i < A.rows; ++i)
            for (int j = r; j < A.cols; ++j) {
                const Scalar& x = A.at(i, j);
                if (x.is_zero()) continue;
                if (pi < 0 || x.shift < best) {
                    best = x.shift;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(pi, j), A.at(r, j));
        if (pi != r)
            for (int j = 0; j < res.U.cols; ++j) std::swap(res.U.at(pi, j), res.U.at(r, j));
        if (pj != r) {
            for (int i = 0; i < A.rows; ++i) std::swap(A.at(i, pj), A.at(i, r));
            for (int i = 0; i < res.V.rows; ++i) std::swap(res.V.at(i, pj), res.V.at(i, r));
        }
        // normalize the pivot to exactly t^e (divide the row by the unit part)
        Scalar piv = A.at(r, r);
        Scalar unit = S.mul(piv, S.t(-piv.shift));  // valuation-0 unit
        Scalar uinv = S.inv(unit);
        for (int j = 0; j < A.cols; ++j) A.at(r, j) = S.mul(A.at(r, j), uinv);
        for (int j = 0; j < res.U.cols; ++j) res.U.at(r, j) = S.mul(res.U.at(r, j), uinv);
        // clear the column and the row; pivot has minimal valuation so the
        // quotients stay in R
        for (int i = r + 1; i < A.rows; ++i) {
            if (A.at(i, r).is_zero()) continue;
            Scalar f = S.mul(A.at(i, r), S.t(-piv.shift));
            for (int j = 0; j < A.cols; ++j)
                A.at(i, j) = S.sub(A.at(i, j), S.mul(f, A.at(r, j)));
            for (int j = 0; j < res.U.cols; ++j)
                res.U.at(i, j) = S.sub(res.U.at(i, j), S.mul(f, res.U.at(r, j)));
        }
        for (int j = r + 1; j < A.cols; ++j) {
            if (A.at(r, j).is_zero()) continue;
            Scalar f = S.mul(A.at(r, j), S.t(-piv.shift));
            for (int i = 0; i < A.rows; ++i)
                A.at(i, j) = S.sub(A.at(i, j), S.mul(f, A.at(i, r)));
            for (int i = 0; i < res.V.rows; ++i)
                res.V.at(i, j) = S.sub(res.V.at(i, j), S.mul(f, res.V.at(i, r)));
        }
        res.exps.push_back(piv.shift);
    }
    res.rank = r;
    // sort the exponents (column/row swaps would realize the order)
    std::sort(res.exps.begin(), res.exps.end());
    return res;
}

SMat sm_kernel_R(const ScalarRing& S, const SMat& A) {
    // Smith form gives a saturated kernel basis: columns of V beyond the rank
    SmithResult sr = sm_smith(S, A);
    int free = A.cols - sr.rank;
    SMat K(A.cols, free);
    for (int j = 0; j < free; ++j)
        for (int i = 0; i < A.cols; ++i) K.at(i, j) = sr.V.at(i, sr.rank + j);
    return K;
}

bool sm_solve_R(const ScalarRing& S, const SMat& A, const std::vector<Scalar>& b,
                std::vector<Scalar>& x) {
    // particular solution via Smith form: A = U^-1 D V^-1, solve D y = U b
    SmithResult sr = sm_smith(S, A);
    std::vector<Scalar> ub(static_cast<size_t>(A.rows), S.zero());
    for (int i = 0; i < A.rows; ++i) {
        Scalar acc = S.zero();
        for (int j = 0; j < A.rows; ++j)
            acc = S.add(acc, S.mul(sr.U.at(i, j), b[static_cast<size_t>(j)]));
        ub[static_cast<size_t>(i)] = acc;
    }
    // recompute the diagonal in unsorted order: redo elimination bookkeeping
    // by multiplying out D = U A V
    // (cheap relative to the smith computation itself)
    // D is diagonal with entries t^{e_i} in elimination order
    // Solve D y = ub
    std::vector<Scalar> y(static_cast<size_t>(A.cols), S.zero());
    // Recover D by applying the transforms
    // Note: sm_smith consumed its own copy; recompute D here.
    SMat D(A.rows, A.cols);
    {
        SMat tmp = sm_mul(S, sr.U, A);
        D = sm_mul(S, tmp, sr.V);
    }
    int n = std::min(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i) {
        Scalar rhs = ub[static_cast<size_t>(i)];
        if (i < n && !D.at(i, i).is_zero()) {
            if (rhs.is_zero()) continue;
            Scalar q = S.div(rhs, D.at(i, i));
            if (q.shift < 0) return false;  // not solvable over R
            y[static_cast<size_t>(i)] = q;
        } else if (!rhs.is_zero()) {
            return false;
        }
    }
    x.assign(static_cast<size_t>(A.cols), S.zero());
    for (int i = 0; i < A.cols; ++i) {
        Scalar acc = S.zero();
        for (int j = 0; j < A.cols; ++j)
            acc = S.add(acc, S.mul(sr.V.at(i, j), y[static_cast<size_t>(j)]));
        x[static_cast<size_t>(i)] = acc;
    }
    return true;
}

}  // namespace gal
