#include "hypell/linalg.hpp"

namespace hypell {

CMat mat_mul(const CMat& A, const CMat& B) {
    CMat C(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            Cplx aik = A(i, k);
            for (int j = 0; j < A.n; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

CVec mat_vec(const CMat& A, const CVec& v) {
    CVec r(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) r[i] += A(i, j) * v[j];
    return r;
}

CVec vec_mat(const CVec& v, const CMat& A) {
    CVec r(A.n);
    for (int j = 0; j < A.n; ++j)
        for (int i = 0; i < A.n; ++i) r[j] += v[i] * A(i, j);
    return r;
}

namespace {

// returns permutation sign, or 0 if singular; A becomes U in-place with L below
int lu_decompose(CMat& A, std::vector<int>& perm) {
    int n = A.n;
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        Real best = norm(A(c, c));
        for (int r = c + 1; r < n; ++r) {
            Real m = norm(A(r, c));
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best == 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(A.a[static_cast<size_t>(piv) * n + j], A.a[static_cast<size_t>(c) * n + j]);
            std::swap(perm[piv], perm[c]);
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            Cplx f = A(r, c) / A(c, c);
            A(r, c) = f;
            for (int j = c + 1; j < n; ++j) A(r, j) -= f * A(c, j);
        }
    }
    return sign;
}

}  // namespace

Cplx mat_det(CMat A) {
    std::vector<int> perm;
    int sign = lu_decompose(A, perm);
    if (sign == 0) return Cplx(Real(0));
    Cplx d{Real(sign)};
    for (int i = 0; i < A.n; ++i) d *= A(i, i);
    return d;
}

CVec mat_solve(CMat A, CVec b) {
    std::vector<int> perm;
    int sign = lu_decompose(A, perm);
    if (sign == 0) throw NonConvergenceError("singular linear system");
    int n = A.n;
    CVec x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= A(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= A(i, j) * x[j];
        x[i] /= A(i, i);
    }
    return x;
}

CMat mat_inverse(CMat A) {
    int n = A.n;
    CMat inv(n);
    std::vector<int> perm;
    CMat lu = A;
    int sign = lu_decompose(lu, perm);
    if (sign == 0) throw NonConvergenceError("singular matrix");
    for (int col = 0; col < n; ++col) {
        CVec e(n);
        e[col] = Cplx(Real(1));
        CVec x(n);
        for (int i = 0; i < n; ++i) x[i] = e[perm[i]];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
            x[i] /= lu(i, i);
        }
        for (int i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return inv;
}

RVec rmat_solve(RMat A, RVec b) {
    int n = A.n;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        Real best = A(c, c) < 0 ? -A(c, c) : A(c, c);
        for (int r = c + 1; r < n; ++r) {
            Real m = A(r, c) < 0 ? -A(r, c) : A(r, c);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best == 0) throw NonConvergenceError("singular real system");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(A.a[static_cast<size_t>(piv) * n + j], A.a[static_cast<size_t>(c) * n + j]);
            std::swap(b[piv], b[c]);
        }
        for (int r = c + 1; r < n; ++r) {
            Real f = A(r, c) / A(c, c);
            for (int j = c; j < n; ++j) A(r, j) -= f * A(c, j);
            b[r] -= f * b[c];
        }
    }
    RVec x(n);
    for (int i = n - 1; i >= 0; --i) {
        Real s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
        x[i] = s / A(i, i);
    }
    return x;
}

std::optional<RMat> cholesky(const RMat& Y) {
    int n = Y.n;
    RMat L(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Real s = Y(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            if (i == j) {
                if (s <= 0) return std::nullopt;
                L(i, i) = sqrt(s);
            } else {
                L(i, j) = s / L(j, j);
            }
        }
    }
    return L;
}

Real pd_min_eigen_lower_bound(const RMat& Y) {
    // lambda_min >= 1 / ||Y^-1||_inf; good enough to size theta truncation
    int n = Y.n;
    Real worst(0);
    for (int col = 0; col < n; ++col) {
        RVec e(n, Real(0));
        e[col] = 1;
        RVec x = rmat_solve(Y, e);
        Real rowsum(0);
        for (const Real& v : x) rowsum += (v < 0 ? -v : v);
        if (rowsum > worst) worst = rowsum;
    }
    return Real(1) / worst;
}

}  // namespace hypell
