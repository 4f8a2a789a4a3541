#pragma once

// Period matrices of hyperelliptic curves with real branch points, and the
// dictionary between Weierstrass-point labels and theta characteristics.
//
// Conventions (used by every identity test):
//   * finite branch points are sorted ascending; when one branch point is
//     infinite it carries the last label;
//   * the square root of f is continued along a path just above the real
//     axis, so on a segment with c finite branch points to its right the
//     branch is i^c sqrt(|f|);
//   * the a-cycle a_k loops around the cut [b_{2k-1}, b_{2k}] (1-based sorted
//     labels), the b-cycle b_k runs from that cut to the last one; both
//     periods reduce to doubled segment integrals of the continued branch;
//   * for genus 3 the basis is post-composed with a fixed symplectic
//     transformation, found by a deterministic search, that makes the
//     Abel-Jacobi images of the divisors W_i + W_j come out odd with zero
//     shift; this is what makes w_rs + w_st = w_rt hold verbatim.

#include "hypell/linalg.hpp"
#include "hypell/symmetric.hpp"
#include "hypell/theta.hpp"

#include <vector>

namespace hypell {

struct PeriodData {
    int g = 0;
    CMat Omega1, Omega2;  // rows: differentials x^j dx / y; columns: cycles
    RiemannMatrix Z;
    std::vector<Real> sorted_branch;  // finite branch points, ascending
    bool with_infinity = false;
    std::vector<Char> raw_half_periods;  // label -> characteristic of the
                                         // Abel-Jacobi image, base = label 0
    Real omega1_condition;               // crude condition estimate of Omega1
};

// Branch points must be real (and the finite ones distinct); genus 1..3.
PeriodData period_matrix(const BranchSet& B, unsigned digits);

struct CharacteristicDictionary {
    int g = 0;
    std::vector<Char> c;  // per-label half-period characteristics (base first)
    Char delta;           // shift found by the search

    // image of a Weierstrass divisor given by labels (with multiplicity);
    // labels of even multiplicity cancel
    Char pi_image(const std::vector<int>& labels) const;
    Char odd_image_g2(int i) const;         // Pi(W_i)
    Char odd_image_g3(int i, int j) const;  // Pi(W_i + W_j)
    int label_count() const { return static_cast<int>(c.size()); }
};

// base_label rebases the half-period integrals; the resulting images are
// base-independent, which the tests verify through this parameter
CharacteristicDictionary characteristic_dictionary(const PeriodData& P, int base_label = 0);

}  // namespace hypell
