#pragma once

// Curve reconstruction from a bare normalized period matrix: algebraic period
// bases, canonical images of Weierstrass points, and the genus-2 / genus-3
// symmetric-model pipelines driven by Jacobian Nullwerte.

#include "hypell/periods.hpp"
#include "hypell/symmetric.hpp"
#include "hypell/theta.hpp"

#include <set>

namespace hypell {

struct AlgebraicPeriodBasis {
    std::vector<Char> odd;  // w_1 ... w_g
    Char even;              // w_0
    CMat Omega1;            // J[w_1..w_g] / (2 pi i theta[w_0])
    Real condition;
};

AlgebraicPeriodBasis algebraic_period_basis(const RiemannMatrix& Z, const std::vector<Char>& w_odd,
                                            const Char& w0, const Real& eps,
                                            const Real& condition_cap = Real(1e12));

// projective image of a Weierstrass point under the canonical map attached to
// g odd basis characteristics; aux holds the g-1 odd characteristics whose
// divisors contain the point.  Normalized so the largest coordinate is 1.
CVec canonical_weierstrass_image(const RiemannMatrix& Z, const std::vector<Char>& basis_w,
                                 const std::vector<Char>& aux, const Real& eps);

// ---------------------------------------------------------------------------
// genus 2

SymmetricModel genus2_symmetric_from_Z(const RiemannMatrix& Z, const Real& eps, const Real& tol);
Cplx genus2_discriminant_from_Z(const RiemannMatrix& Z, const Real& eps);

struct G2ThetaRoots {
    std::vector<Cplx> roots;          // l_{12k}, k = 3..6, signs resolved
    int distinct_even_count = 0;      // number of distinct even Nullwerte used
    int theta_evaluations = 0;        // counter for the quotient route
};
G2ThetaRoots genus2_roots_from_thetanullwerte(const RiemannMatrix& Z, const Real& eps, const Real& tol);

// ---------------------------------------------------------------------------
// genus 3

struct Genus3Labeling {
    // w(i, j) for 1 <= i < j <= 8 (0-based storage)
    std::array<std::array<Char, 8>, 8> w{};
    const Char& at(int i, int j) const;  // 1-based branch labels
};

struct HyperellipticityCheck {
    bool hyperelliptic = false;
    int vanishing_evens = 0;
    Real min_even_ratio;  // smallest |theta[e]| / max |theta[e]|
};

HyperellipticityCheck genus3_hyperelliptic_test(const ThetaTable& table, const Real& threshold);

Genus3Labeling genus3_label(const RiemannMatrix& Z, const Real& eps,
                            const Real& vanish_threshold = Real("1e-6"));

// double ratio of triple Jacobian Nullwerte, Eq.-style with auxiliary index t
Cplx genus3_mu(const Genus3Labeling& L, const ThetaTable& table, int m, int n, int r, int s, int t);

// mu with the smallest admissible t plus a verification pass at a second t
Cplx genus3_mu_checked(const Genus3Labeling& L, const ThetaTable& table, int m, int n, int r, int s,
                       const Real& tol);

SymmetricModel genus3_symmetric_from_Z(const RiemannMatrix& Z, const Real& eps, const Real& tol);

struct G3FrobeniusRoot {
    Cplx sixth_power;  // the product of twelve even Nullwerte quotients
    Cplx value;        // principal sixth root
    std::set<unsigned> even_chars_used;
};
// l_123 via even Thetanullwerte (Frobenius route)
G3FrobeniusRoot genus3_root123_from_thetanullwerte(const RiemannMatrix& Z, const Real& eps);

// sorted multiset of all cross-ratios of a branch set (Moebius invariant)
std::vector<Cplx> mu_multiset(const BranchSet& B);
Real mu_multiset_distance(const std::vector<Cplx>& a, const std::vector<Cplx>& b);

}  // namespace hypell
