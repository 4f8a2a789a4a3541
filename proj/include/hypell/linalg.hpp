#pragma once

// Small dense matrices over Cplx / Real.  Everything here is sized g <= 3
// in practice, so plain partially pivoted elimination is all we need.

#include "hypell/numbers.hpp"

#include <vector>

namespace hypell {

struct CMat {
    int n = 0;
    std::vector<Cplx> a;  // row-major n x n

    CMat() = default;
    explicit CMat(int size) : n(size), a(static_cast<size_t>(size) * size) {}

    Cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Cplx& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static CMat identity(int size) {
        CMat m(size);
        for (int i = 0; i < size; ++i) m(i, i) = Cplx(Real(1));
        return m;
    }
};

using CVec = std::vector<Cplx>;
using RVec = std::vector<Real>;

struct RMat {
    int n = 0;
    std::vector<Real> a;

    RMat() = default;
    explicit RMat(int size) : n(size), a(static_cast<size_t>(size) * size, Real(0)) {}

    Real& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Real& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

CMat mat_mul(const CMat& A, const CMat& B);
CVec mat_vec(const CMat& A, const CVec& v);
CVec vec_mat(const CVec& v, const CMat& A);  // row vector times matrix
Cplx mat_det(CMat A);
CMat mat_inverse(CMat A);                 // throws NonConvergenceError on singular
CVec mat_solve(CMat A, CVec b);           // A x = b
RVec rmat_solve(RMat A, RVec b);

// Cholesky of a symmetric matrix; returns std::nullopt unless positive definite.
std::optional<RMat> cholesky(const RMat& Y);

// smallest eigenvalue lower bound for a positive definite Y (via inverse infinity norm)
Real pd_min_eigen_lower_bound(const RMat& Y);

}  // namespace hypell
