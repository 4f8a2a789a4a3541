#pragma once

// Numerical checkers for the identity family relating Jacobian Nullwerte,
// Thetanullwerte, period determinants and branch-point discriminants.  Every
// checker evaluates both sides independently and reports a relative residual;
// root ambiguities are killed by comparing eighth or fourth powers or
// magnitudes.

#include "hypell/periods.hpp"
#include "hypell/reconstruct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypell {

struct IdentityReport {
    std::string identity;
    std::string params;
    Cplx lhs, rhs;
    Real residual;
    std::optional<Real> aux_residual;  // secondary check when the identity has one
    bool passed = false;
    Real tolerance;
};

Real relative_residual(const Cplx& lhs, const Cplx& rhs);

// ---------------------------------------------------------------------------
// Thomae family.  Partitions are given as 0-based labels into the sorted
// branch points of the period data (infinity = last label when present).

IdentityReport check_thomae_even(const PeriodData& P, const CharacteristicDictionary& D,
                                 const std::vector<int>& part, const Real& eps, const Real& tol);

IdentityReport check_thomae_jacobian(const PeriodData& P, const CharacteristicDictionary& D,
                                     const std::vector<int>& part, const Real& eps, const Real& tol);

IdentityReport check_thomae_quotient(const PeriodData& P, const CharacteristicDictionary& D,
                                     const std::vector<int>& odd_part, const std::vector<int>& even_part,
                                     const Real& eps, const Real& tol);

// ---------------------------------------------------------------------------
// pure-Z identities

IdentityReport check_rosenhain(const RiemannMatrix& Z, int odd_index_1, int odd_index_2,
                               const Real& eps, const Real& tol);

IdentityReport check_frobenius_g3(const PeriodData& P, const CharacteristicDictionary& D, int i,
                                  int j, int k, const Real& eps, const Real& tol,
                                  const ThetaTable* shared = nullptr);

IdentityReport check_igusa_product(const PeriodData& P, const CharacteristicDictionary& D,
                                   const std::vector<int>& labels, const Real& eps, const Real& tol,
                                   const ThetaTable* shared = nullptr);

IdentityReport check_jacobi_g1(const Cplx& tau, const Real& eps, const Real& tol);

// the eighth power of the normalized Nullwerte quotient against the value
// assembled from the branch points
IdentityReport check_eighth_power_rationality(const RationalBranchSet& B, const PeriodData& P,
                                              const CharacteristicDictionary& D,
                                              const std::vector<std::vector<int>>& odd_parts,
                                              const std::vector<std::vector<int>>& even_parts,
                                              const Real& eps, const Real& tol);

// hyperplane cut out by the theta gradient at the image of a degree g-1
// Weierstrass divisor contains the canonical images of its points
IdentityReport check_hyperplane(const PeriodData& P, const CharacteristicDictionary& D,
                                const std::vector<int>& divisor, const Real& eps, const Real& tol);

// ---------------------------------------------------------------------------
// suites (deterministic given the seed)

std::vector<IdentityReport> suite_jacobi(const Real& eps, const Real& tol);
std::vector<IdentityReport> suite_rosenhain(std::uint64_t seed, int count, const Real& eps, const Real& tol);
std::vector<IdentityReport> suite_thomae(const Real& eps, const Real& tol, std::uint64_t seed);
std::vector<IdentityReport> suite_frobenius(const Real& eps, const Real& tol);
std::vector<IdentityReport> suite_igusa_product(const Real& eps, const Real& tol);

// helper used by several suites and the acceptance tests
RiemannMatrix random_siegel_h2(SplitMix64& rng);
PeriodData test_curve_periods(int g, unsigned digits);  // 0,1,..,2g curves
std::vector<Real> test_curve_points(int g);

}  // namespace hypell
