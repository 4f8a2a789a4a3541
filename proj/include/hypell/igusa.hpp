#pragma once

// Genus-2 invariant theory: the forward polynomial map from symmetric
// coefficients to the weighted invariants (I2, I4, I6, I10), an independent
// root-difference evaluation used as a cross-check, and the inverse pipeline
// that recovers symmetric coefficients from a prescribed tuple by resultant
// elimination.

#include "hypell/polynomial.hpp"
#include "hypell/symmetric.hpp"

#include <array>
#include <optional>

namespace hypell {

struct SymmetricCoefficients2 {
    Rat G1, G2, G3;
    int linear_sign = 1;
};

struct IgusaClebschTuple {
    Rat I2, I4, I6, I10;
};

// equality of weighted ratios (I_{2k} ~ lambda^k I_{2k}); exact
bool weighted_equal(const IgusaClebschTuple& a, const IgusaClebschTuple& b);
IgusaClebschTuple weighted_rescale(const IgusaClebschTuple& t, const Rat& lambda);

// the four forward polynomials, evaluated exactly
IgusaClebschTuple igusa_from_symmetric(const SymmetricCoefficients2& c);
std::array<Cplx, 4> igusa_from_symmetric_numeric(const Cplx& G1, const Cplx& G2, const Cplx& G3);

// classical symmetrized root-difference evaluation over the six branch
// points; exact for rational branch sets, numeric otherwise
IgusaClebschTuple igusa_from_roots_oracle(const RationalBranchSet& B);
std::array<Cplx, 4> igusa_from_roots_oracle_numeric(const BranchSet& B);

// ---------------------------------------------------------------------------
// inverse pipeline

struct InverseCandidate {
    Cplx G1, G2, G3;
    Cplx r;
    bool exact = false;                          // true when the exact path verified
    std::optional<SymmetricCoefficients2> coeffs;  // set when exact
};

struct InverseOptions {
    Real tol = Real("1e-20");     // numeric match tolerance inside the pipeline
    unsigned digits = 0;          // 0: use the current working precision
};

// all candidates surviving forward verification; throws InversionError when
// none does or when I10 = 0
std::vector<InverseCandidate> symmetric_from_igusa(const IgusaClebschTuple& t,
                                                   const InverseOptions& opt = {});

// ---------------------------------------------------------------------------
// symbolic artifacts (exposed for cross-checks)

// forward polynomials in the variables VG1, VG2, VG3
const std::array<MPoly, 4>& igusa_forward_polynomials();

// the eliminated pair in Q[G2, r] with the invariants still symbolic,
// derived at runtime from the forward polynomials
struct EliminationSystem {
    MPoly s2_num;  // S2 = s2_num / 16
    MPoly u_num;   // S1^2 = u_num / u_den
    MPoly u_den;
    MPoly p6;   // vanish on consistent (G2, r, invariants)
    MPoly p10;
};
const EliminationSystem& elimination_system();

// transcriptions kept as cross-check artifacts
const std::array<MPoly, 2>& g2r_pair_transcribed();
const MPoly& eq_r_transcribed();

// specialize the derived pair at an exact tuple and eliminate G2
QPoly r_polynomial_for(const IgusaClebschTuple& t);
QPoly eq_r_transcribed_at(const IgusaClebschTuple& t);

// every coefficient of r^n in the transcribed equation is weighted
// homogeneous of degree 2n + 10 (weights 2, 4, 6, 10)
bool eq_r_weights_ok();

}  // namespace hypell
