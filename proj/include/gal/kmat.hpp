#pragma once

#include "gal/field.hpp"

#include <vector>

namespace gal {

// Dense matrix over the base field k.
struct KMat {
    int rows = 0, cols = 0;
    std::vector<FElem> a;

    KMat() = default;
    KMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), FElem{0, 1}) {}
    FElem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const FElem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

KMat km_mul(const BaseField& k, const KMat& A, const KMat& B);
KMat km_identity(const BaseField& k, int n);
bool km_eq(const KMat& A, const KMat& B);
bool km_is_zero(const KMat& A);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> km_rref(const BaseField& k, KMat& A);
int km_rank(const BaseField& k, KMat A);
// Basis of the right kernel (columns).
KMat km_kernel(const BaseField& k, KMat A);
// Solve A x = b; returns false when inconsistent.
bool km_solve(const BaseField& k, KMat A, const std::vector<FElem>& b, std::vector<FElem>& x);

// Row-space membership helper: reduce v against the rref rows of A (pivots
// from km_rref); returns the residual.
std::vector<FElem> km_reduce_against(const BaseField& k, const KMat& rrefA,
                                     const std::vector<int>& pivots, std::vector<FElem> v);

}  // namespace gal
