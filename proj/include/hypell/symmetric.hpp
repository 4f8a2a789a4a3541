#pragma once

// Symmetric invariants of a hyperelliptic curve built from its branch points:
// symmetric ratios and roots, symmetric normal models, symmetric
// discriminants, cross-ratio (mu) invariants, reconstruction of a model from
// a mu family, and the set of primes where some symmetric discriminant has
// negative valuation.

#include "hypell/numbers.hpp"
#include "hypell/polynomial.hpp"

#include <map>
#include <set>
#include <vector>

namespace hypell {

// the 2g+2 branch points of Y^2 = f(X); at most one may be infinite
struct BranchSet {
    int g = 0;
    std::vector<PValue> points;

    BranchSet() = default;
    BranchSet(int genus, std::vector<PValue> pts);
    static BranchSet from_reals(const std::vector<Real>& finite, bool with_infinity);

    int size() const { return static_cast<int>(points.size()); }
    bool has_infinity() const;
    int infinity_index() const;  // -1 when absent
};

// monic model Y^2 = X^{2g+1} + G_1 X^{2g} + ... + G_{2g-1} X^2 +/- X
struct SymmetricModel {
    int g = 0;
    std::vector<Cplx> coefficients;  // G_1 ... G_{2g-1}
    int linear_sign = 1;
    std::vector<Cplx> roots;  // the 2g nonzero roots (0 is implicit)

    CPoly polynomial() const;  // degree 2g+1, lowest degree first
    BranchSet branch_set() const;  // roots plus 0 plus infinity
};

// difference alpha_i - alpha_k with the infinity convention (drop to 1)
Cplx branch_diff(const BranchSet& B, int i, int k);
// f'(alpha_i) = prod_{k != i} (alpha_i - alpha_k), infinite factors dropped
Cplx branch_derivative(const BranchSet& B, int i);

// zeta_t * (-f'(alpha_j)/f'(alpha_i))^(1/2g), zeta_t = exp(2 pi i t / 4g);
// t in 1..4g, t = 4g is the principal branch
Cplx symmetric_ratio(const BranchSet& B, int i, int j, int t);

// one value per k not in {i, j}, in input order
std::vector<Cplx> symmetric_roots(const BranchSet& B, int i, int j, int t);

SymmetricModel symmetric_model(const BranchSet& B, int i, int j, int t, const Real& tol);

// prod_{r<s} (l_r - l_s)^2 over the symmetric roots
Cplx symmetric_discriminant(const BranchSet& B, int i, int j, int t);
// closed rational form (alpha_i-alpha_j)^{2g(2g+1)} disc(f) / (f'_i f'_j)^{2g+1},
// sign not resolved; returned as evaluated
Cplx symmetric_discriminant_formula(const BranchSet& B, int i, int j);
Cplx model_discriminant(const SymmetricModel& m);  // over the nonzero roots

// exact branch data: finite rational points, optionally one point at infinity
struct RationalBranchSet {
    int g = 0;
    std::vector<Rat> finite;
    bool with_infinity = false;

    RationalBranchSet(int genus, std::vector<Rat> pts, bool inf);
    BranchSet to_numeric() const;
    QPoly poly() const;  // monic with the finite points as roots
    int size() const { return static_cast<int>(finite.size()) + (with_infinity ? 1 : 0); }
};

// exact symmetric discriminant, up to sign (the zeta twist contributes +/- 1):
// (-f'(alpha_j)/f'(alpha_i))^{2g-1} * prod_{r<s}(ratio_r - ratio_s)^2
Rat symmetric_discriminant_exact(const RationalBranchSet& B, int i, int j);

Cplx mu_invariant(const BranchSet& B, int i, int j, int r, int s);
Rat mu_invariant_exact(const RationalBranchSet& B, int i, int j, int r, int s);

// cross-ratio family for a fixed (i, j); key is the ordered pair (r, s)
struct MuFamily {
    int g = 0;
    int i = 0, j = 0;
    std::vector<int> universe;  // the indices k != i, j in order
    std::map<std::pair<int, int>, Cplx> mu;

    static MuFamily from_branch_set(const BranchSet& B, int i, int j);
    const Cplx& at(int r, int s) const;
};

// realizes the reconstruction: pivot root from the product of squared mu
// values, the rest propagated by exact ratios; throws BadInputError when the
// family is incoherent beyond tol
SymmetricModel symmetric_model_from_mu(const MuFamily& fam, int g, const Real& tol);

// primes p with v_p(D_ij) < 0 for some pair (i, j), exact arithmetic
std::set<Int> bad_reduction_locus_odd(const RationalBranchSet& B);

}  // namespace hypell
