#pragma once

// Riemann theta functions with half-integer characteristics: values at z = 0,
// z-gradients at 0, general-z evaluation, characteristic arithmetic, parity,
// azygetic tests and Jacobian Nullwerte (determinants of gradient matrices).

#include "hypell/linalg.hpp"
#include "hypell/numbers.hpp"

#include <vector>

namespace hypell {

// ---------------------------------------------------------------------------
// theta characteristics: entries of m' and m'' lie in {0, 1/2}; bit k set in
// mp / md means the k-th entry equals 1/2.

struct Char {
    int g = 0;
    unsigned mp = 0, md = 0;

    Char() = default;
    Char(int genus, unsigned m_prime_bits, unsigned m_double_bits)
        : g(genus), mp(m_prime_bits & mask()), md(m_double_bits & mask()) {}

    unsigned mask() const { return (1u << g) - 1u; }
    bool mp_bit(int k) const { return (mp >> k) & 1u; }
    bool md_bit(int k) const { return (md >> k) & 1u; }

    // lexicographic rank of the 2g bits (m' first, coordinate 1 most significant)
    unsigned index() const {
        unsigned hi = 0, lo = 0;
        for (int k = 0; k < g; ++k) {
            hi = (hi << 1) | (mp_bit(k) ? 1u : 0u);
            lo = (lo << 1) | (md_bit(k) ? 1u : 0u);
        }
        return (hi << g) | lo;
    }
    static Char from_index(int g, unsigned idx);

    friend bool operator==(const Char& a, const Char& b) {
        return a.g == b.g && a.mp == b.mp && a.md == b.md;
    }
    friend bool operator<(const Char& a, const Char& b) { return a.index() < b.index(); }
};

enum class Parity { Even, Odd };

Parity parity(const Char& m);
bool is_odd(const Char& m);
Char char_add(const Char& a, const Char& b);
Char char_add(const std::vector<Char>& ms);

bool is_azygetic(const Char& m1, const Char& m2, const Char& m3);
bool azygetic_sequence(const std::vector<Char>& ms);

std::vector<Char> odd_characteristics(int g);
std::vector<Char> even_characteristics(int g);
std::vector<Char> all_characteristics(int g);

std::string char_to_string(const Char& m);

// ---------------------------------------------------------------------------
// points of the Siegel upper half space

struct RiemannMatrix {
    int g = 0;
    CMat Z;

    RiemannMatrix() = default;
    RiemannMatrix(int genus, CMat mat, const Real& sym_tol);

    RMat imag_part() const;
    // the 2-torsion point Z m' + m'' on the torus C^g / (1 | Z)
    CVec torsion_point(const Char& m) const;
};

// ---------------------------------------------------------------------------
// evaluation

struct ThetaOptions {
    long max_terms = 1 << 24;  // enumeration budget before giving up
};

// theta[m](z, Z) as a truncated lattice sum with tail below
// eps * max(1, |partial sum|)
Cplx theta_value(const Char& m, const CVec& z, const RiemannMatrix& Z, const Real& eps,
                 const ThetaOptions& opt = {});

// value at z = 0
Cplx thetanull(const Char& m, const RiemannMatrix& Z, const Real& eps, const ThetaOptions& opt = {});

// z-gradient at 0 (odd characteristics only; the even gradient vanishes there)
CVec theta_gradient0(const Char& m, const RiemannMatrix& Z, const Real& eps,
                     const ThetaOptions& opt = {});

// All 4^g Nullwerte (and optionally gradients) in one sweep per m' coset;
// indexed by Char::index().
struct ThetaTable {
    int g = 0;
    std::vector<Cplx> value;
    std::vector<CVec> gradient;

    const Cplx& val(const Char& m) const { return value[m.index()]; }
    const CVec& grad(const Char& m) const { return gradient[m.index()]; }
};

ThetaTable theta_table(const RiemannMatrix& Z, const Real& eps, bool want_gradients,
                       const ThetaOptions& opt = {});

// ---------------------------------------------------------------------------
// Jacobian Nullwerte

struct NullwerteRequest {
    std::vector<Char> characteristics;  // exactly g, all odd
    RiemannMatrix Z;
};

Cplx jacobian_nullwerte(const NullwerteRequest& req, const Real& eps);

// determinant of gradient rows taken from a precomputed table
Cplx jacobian_nullwerte_from_table(const ThetaTable& table, const std::vector<Char>& ms);

}  // namespace hypell
