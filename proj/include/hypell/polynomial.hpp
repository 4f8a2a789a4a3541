#pragma once

// Univariate polynomials over Cplx (numeric) and Rat (exact), a small sparse
// multivariate polynomial over Rat, root finding, resultants, discriminants,
// and Moebius maps on P^1.

#include "hypell/numbers.hpp"

#include <array>
#include <map>
#include <set>
#include <vector>

namespace hypell {

// ---------------------------------------------------------------------------
// complex polynomials, coefficients lowest degree first

struct CPoly {
    std::vector<Cplx> c;

    CPoly() = default;
    explicit CPoly(std::vector<Cplx> coeffs) : c(std::move(coeffs)) { trim(); }
    static CPoly constant(Cplx v) { return CPoly({std::move(v)}); }
    static CPoly from_roots(const std::vector<Cplx>& roots);  // monic

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().re == 0 && c.back().im == 0) c.pop_back();
    }

    Cplx eval(const Cplx& x) const;
    CPoly derivative() const;
    Real coeff_scale() const;  // max |c_i|
};

CPoly operator+(const CPoly& a, const CPoly& b);
CPoly operator-(const CPoly& a, const CPoly& b);
CPoly operator*(const CPoly& a, const CPoly& b);
CPoly operator*(const Cplx& s, const CPoly& a);

// Aberth-Ehrlich simultaneous iteration; deterministic start configuration,
// roots sorted lexicographically by (re, im).  Multiplicities appear as
// repeated values.  Throws RootSolveError when the residual target is missed.
struct RootSolveError : NonConvergenceError {
    std::vector<Cplx> partial;
    explicit RootSolveError(std::string msg, std::vector<Cplx> roots)
        : NonConvergenceError(std::move(msg)), partial(std::move(roots)) {}
};

std::vector<Cplx> poly_roots(const CPoly& p, const Real& tol);

// discriminant from the numeric roots: lead^(2n-2) * prod_{r<s}(x_r - x_s)^2
Cplx poly_discriminant_numeric(const CPoly& p, const Real& tol);

// ---------------------------------------------------------------------------
// exact rational polynomials

struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static QPoly constant(Rat v) { return QPoly({std::move(v)}); }
    static QPoly monomial(int deg, Rat v = Rat(1));
    static QPoly from_roots(const std::vector<Rat>& roots);  // monic

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    Rat eval(const Rat& x) const;
    QPoly derivative() const;
    CPoly to_cpoly() const;
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rat& s, const QPoly& a);
bool operator==(const QPoly& a, const QPoly& b);

// division with remainder; requires b != 0
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
QPoly qpoly_gcd(QPoly a, QPoly b);  // monic gcd

Rat qpoly_resultant(const QPoly& a, const QPoly& b);  // Sylvester determinant
Rat qpoly_discriminant(const QPoly& p);               // degree >= 2
QPoly qpoly_squarefree(const QPoly& p);               // p / gcd(p, p')

// Rational univariate polynomials with polynomial coefficients: an element of
// Q[v][u], used for resultant elimination.  coeff[k] is the v-polynomial
// multiplying u^k.
struct QPoly2 {
    std::vector<QPoly> c;

    QPoly2() = default;
    explicit QPoly2(std::vector<QPoly> coeffs) : c(std::move(coeffs)) { trim(); }
    int degree_u() const { return static_cast<int>(c.size()) - 1; }
    int degree_v() const;
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    QPoly eval_u(const QPoly& val) const;   // substitute u := val(v)
    QPoly specialize_v(const Rat& v) const; // polynomial in u with v fixed
};

// Res_u(p, q) as a polynomial in v, by evaluation / interpolation of the
// Sylvester determinant (formal u-degrees are fixed by the inputs, so
// specialization commutes with the determinant).
QPoly resultant_eliminate(const QPoly2& p, const QPoly2& q);

// ---------------------------------------------------------------------------
// sparse multivariate polynomials over Rat (fixed global variable slots)

enum MVar : int { VG1 = 0, VG2, VG3, VS1, VS2, VR, VI2, VI4, VI6, VI10, VU, MVAR_COUNT };

struct MPoly {
    using Expt = std::array<int, MVAR_COUNT>;
    std::map<Expt, Rat> terms;

    static MPoly constant(Rat v);
    static MPoly var(MVar v, int exp = 1);

    bool is_zero() const { return terms.empty(); }
    void cleanup();

    MPoly operator-() const;
    MPoly pow(int e) const;

    // substitute variable v := num/den (den a polynomial); the result is the
    // numerator after multiplying through by den^(max exponent of v)
    MPoly substitute_rational(MVar v, const MPoly& num, const MPoly& den) const;
    MPoly substitute(MVar v, const MPoly& value) const;

    // collect as a polynomial in `v` (coefficients independent of v)
    std::vector<MPoly> collect(MVar v) const;

    // plug exact values for a subset of variables
    MPoly eval_partial(const std::map<MVar, Rat>& vals) const;
    Rat eval_all(const std::map<MVar, Rat>& vals) const;

    int max_exponent(MVar v) const;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rat& s, const MPoly& a);
bool operator==(const MPoly& a, const MPoly& b);

// Rewrite a polynomial symmetric under G1 <-> G3 in terms of S1 = G1+G3 and
// S2 = G1*G3 (other variables pass through).  Throws if not symmetric.
MPoly symmetrize_g1g3(const MPoly& p);

// convert an MPoly in the single variable `v` (all other slots zero) to QPoly
QPoly mpoly_to_qpoly(const MPoly& p, MVar v);

// ---------------------------------------------------------------------------
// Moebius transformations of P^1

struct MoebiusMap {
    Cplx a, b, c, d;  // x -> (a x + b) / (c x + d)

    MoebiusMap(Cplx A, Cplx B, Cplx C, Cplx D);
    PValue apply(const PValue& x) const;
    MoebiusMap compose(const MoebiusMap& inner) const;  // apply inner first, then this
};

// ---------------------------------------------------------------------------
// integer factorization helpers (for the bad-reduction locus)

std::vector<std::pair<Int, int>> factorize(Int n);  // n > 0, sorted by prime
std::set<Int> denominator_primes(const Rat& q);

}  // namespace hypell
