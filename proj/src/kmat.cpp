#include "gal/kmat.hpp"

namespace gal {

KMat km_mul(const BaseField& k, const KMat& A, const KMat& B) {
    if (A.cols != B.rows) throw error("km_mul: shape mismatch");
    KMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int l = 0; l < A.cols; ++l) {
            if (A.at(i, l).is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                if (B.at(l, j).is_zero()) continue;
                C.at(i, j) = k.add(C.at(i, j), k.mul(A.at(i, l), B.at(l, j)));
            }
        }
    return C;
}

KMat km_identity(const BaseField& k, int n) {
    KMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = k.one();
    return I;
}

bool km_eq(const KMat& A, const KMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) return false;
    for (size_t i = 0; i < A.a.size(); ++i)
        if (A.a[i] != B.a[i]) return false;
    return true;
}

bool km_is_zero(const KMat& A) {
    for (const auto& x : A.a)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<int> km_rref(const BaseField& k, KMat& A) {
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
        FElem inv = k.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = k.mul(A.at(r, j), inv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || A.at(i, c).is_zero()) continue;
            FElem f = A.at(i, c);
            for (int j = c; j < A.cols; ++j)
                A.at(i, j) = k.sub(A.at(i, j), k.mul(f, A.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int km_rank(const BaseField& k, KMat A) { return static_cast<int>(km_rref(k, A).size()); }

KMat km_kernel(const BaseField& k, KMat A) {
    int n = A.cols;
    auto pivots = km_rref(k, A);
    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    KMat Kmat(n, static_cast<int>(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        Kmat.at(fc, static_cast<int>(f)) = k.one();
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            Kmat.at(pivots[pi], static_cast<int>(f)) = k.neg(A.at(static_cast<int>(pi), fc));
    }
    return Kmat;
}

bool km_solve(const BaseField& k, KMat A, const std::vector<FElem>& b, std::vector<FElem>& x) {
    int n = A.cols;
    KMat Ab(A.rows, n + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < n; ++j) Ab.at(i, j) = A.at(i, j);
        Ab.at(i, n) = b[static_cast<size_t>(i)];
    }
    auto pivots = km_rref(k, Ab);
    for (int c : pivots)
        if (c == n) return false;  // inconsistent
    x.assign(static_cast<size_t>(n), k.zero());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = Ab.at(static_cast<int>(pi), n);
    return true;
}

std::vector<FElem> km_reduce_against(const BaseField& k, const KMat& rrefA,
                                     const std::vector<int>& pivots, std::vector<FElem> v) {
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        int c = pivots[pi];
        if (v[static_cast<size_t>(c)].is_zero()) continue;
        FElem f = v[static_cast<size_t>(c)];
        for (int j = 0; j < rrefA.cols; ++j)
            v[static_cast<size_t>(j)] = k.sub(v[static_cast<size_t>(j)],
                                              k.mul(f, rrefA.at(static_cast<int>(pi), j)));
    }
    return v;
}

}  // namespace gal
