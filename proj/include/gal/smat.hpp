#pragma once

#include "gal/scalar.hpp"

#include <vector>

namespace gal {

// Dense matrix over K = k((t)) with exact Scalar entries. Entries of
// valuation >= 0 live in the local PID R = k[t]_(t), whose units are the
// scalars of valuation 0 (nonzero constant term).
struct SMat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    SMat() = default;
    SMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

SMat sm_mul(const ScalarRing& S, const SMat& A, const SMat& B);
SMat sm_identity(const ScalarRing& S, int n);
bool sm_is_zero(const SMat& A);
bool sm_in_R(const SMat& A);

// Gaussian elimination over the field K.
int sm_rank(const ScalarRing& S, SMat A);
SMat sm_kernel(const ScalarRing& S, SMat A);
bool sm_solve(const ScalarRing& S, SMat A, const std::vector<Scalar>& b, std::vector<Scalar>& x);

// Smith normal form over the local PID R: U*A*V = diag(t^{e_0} <= t^{e_1} <= ...)
// with U, V invertible over R (unit determinants). Entries must lie in R.
struct SmithResult {
    SMat U, V;                 // transforms
    std::vector<long> exps;    // t-exponents of the nonzero diagonal entries
    int rank = 0;              // number of nonzero diagonal entries
};

SmithResult sm_smith(const ScalarRing& S, SMat A);

// Kernel of A over R (a basis of the free module of solutions, as columns).
SMat sm_kernel_R(const ScalarRing& S, const SMat& A);
// Solve A x = b with x over R; returns false when no integral solution exists.
bool sm_solve_R(const ScalarRing& S, const SMat& A, const std::vector<Scalar>& b,
                std::vector<Scalar>& x);

}  // namespace gal
