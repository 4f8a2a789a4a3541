#include "hypell/periods.hpp"
#include <cstdlib>
#include <cstdio>

#include <algorithm>
#include <deque>
#include <functional>
#include <bit>
#include <map>

namespace hypell {

namespace {

// ---------------------------------------------------------------------------
// quadrature: int_{p}^{q} x^j dx / sqrt(|f|), j = 0..g-1, with inverse
// square-root endpoint singularities absorbed by Gauss-Chebyshev nodes

std::vector<Real> segment_integrals(const std::vector<Real>& b, size_t seg, int g, unsigned digits) {
    const Real& p = b[seg];
    const Real& q = b[seg + 1];
    Real c = (p + q) / 2;
    Real h = (q - p) / 2;
    Real target = pow(Real(10), -static_cast<int>(digits) - 5);

    std::vector<Real> prev(static_cast<size_t>(g), Real(0));
    bool have_prev = false;
    for (long N = 32; N <= (1L << 18); N *= 2) {
        std::vector<Real> acc(static_cast<size_t>(g), Real(0));
        Real pi = const_pi();
        for (long i = 1; i <= N; ++i) {
            Real theta = pi * Real(2 * i - 1) / Real(2 * N);
            Real x = c + h * cos(theta);
            // |R(x)| over the remaining branch points
            Real r(1);
            for (size_t k = 0; k < b.size(); ++k) {
                if (k == seg || k == seg + 1) continue;
                Real d = x - b[k];
                r *= (d < 0 ? -d : d);
            }
            Real w = Real(1) / sqrt(r);
            Real xp(1);
            for (int j = 0; j < g; ++j) {
                acc[static_cast<size_t>(j)] += xp * w;
                xp *= x;
            }
        }
        Real scale = pi / Real(N);
        for (Real& v : acc) v *= scale;

        if (have_prev) {
            Real err(0), mag(0);
            for (int j = 0; j < g; ++j) {
                Real d = acc[static_cast<size_t>(j)] - prev[static_cast<size_t>(j)];
                err = std::max(err, d < 0 ? -d : d);
                Real a = acc[static_cast<size_t>(j)];
                mag = std::max(mag, a < 0 ? -a : a);
            }
            if (err <= target * (Real(1) + mag)) return acc;
        }
        prev = acc;
        have_prev = true;
    }
    throw NonConvergenceError("period quadrature did not stabilize");
}

// multiply a real magnitude by (-i)^c
Cplx phase_times(const Real& mag, int c) {
    switch (((c % 4) + 4) % 4) {
        case 0: return Cplx(mag);
        case 1: return Cplx(Real(0), -mag);
        case 2: return Cplx(-mag);
        default: return Cplx(Real(0), mag);
    }
}

struct RawPeriods {
    int g;
    int n_finite;
    std::vector<CVec> seg;  // seg[m][j]: integral over [b_m, b_{m+1}] of x^j dx / y
};

RawPeriods raw_segment_periods(const std::vector<Real>& b, int g, unsigned digits) {
    RawPeriods raw;
    raw.g = g;
    raw.n_finite = static_cast<int>(b.size());
    int segments = 2 * g;  // everything up to b_{2g+1} (0-based: b[2g])
    raw.seg.resize(static_cast<size_t>(segments));
    for (int m = 0; m < segments; ++m) {
        std::vector<Real> mags = segment_integrals(b, static_cast<size_t>(m), g, digits);
        int count_above = raw.n_finite - 1 - m;  // finite branch points right of the segment
        CVec v(static_cast<size_t>(g));
        for (int j = 0; j < g; ++j) v[static_cast<size_t>(j)] = phase_times(mags[static_cast<size_t>(j)], count_above);
        raw.seg[static_cast<size_t>(m)] = std::move(v);
    }
    return raw;
}

// assemble cycle periods from segment integrals under an integer symplectic
// change of basis M (columns: new cycles in terms of (a_1..a_g, b_1..b_g))
struct Assembled {
    CMat Omega1, Omega2;
};

Assembled assemble(const RawPeriods& raw, const std::vector<std::vector<long>>& M) {
    int g = raw.g;
    CMat A(g), B(g);
    // The doubled segment paths form a chain whose intersection pairing is
    // tridiagonal, so a symplectic basis is a_k = sum of the even-indexed
    // doubled segments up to 2k, b_k = the odd-indexed doubled segment 2k+1.
    std::vector<CVec> nat(2 * static_cast<size_t>(g), CVec(static_cast<size_t>(g)));
    for (int k = 0; k < g; ++k) {
        CVec acc(static_cast<size_t>(g));
        for (int m = 0; m <= 2 * k; m += 2)
            for (int j = 0; j < g; ++j) acc[static_cast<size_t>(j)] += raw.seg[static_cast<size_t>(m)][static_cast<size_t>(j)];
        for (int j = 0; j < g; ++j) nat[static_cast<size_t>(k)][static_cast<size_t>(j)] = 2 * acc[static_cast<size_t>(j)];
        for (int j = 0; j < g; ++j)
            nat[static_cast<size_t>(g + k)][static_cast<size_t>(j)] = 2 * raw.seg[static_cast<size_t>(2 * k + 1)][static_cast<size_t>(j)];
    }
    for (int col = 0; col < g; ++col)
        for (int j = 0; j < g; ++j) {
            Cplx a, bb;
            for (int r = 0; r < 2 * g; ++r) {
                long ma = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
                long mb = M[static_cast<size_t>(r)][static_cast<size_t>(g + col)];
                if (ma) a += Real(ma) * nat[static_cast<size_t>(r)][static_cast<size_t>(j)];
                if (mb) bb += Real(mb) * nat[static_cast<size_t>(r)][static_cast<size_t>(j)];
            }
            A(j, col) = a;
            B(j, col) = bb;
        }
    return {A, B};
}

std::vector<std::vector<long>> identity_basis(int g) {
    std::vector<std::vector<long>> M(2 * static_cast<size_t>(g), std::vector<long>(2 * static_cast<size_t>(g), 0));
    for (int i = 0; i < 2 * g; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return M;
}

std::vector<std::vector<long>> mat_mul_int(const std::vector<std::vector<long>>& X,
                                           const std::vector<std::vector<long>>& Y) {
    size_t n = X.size();
    std::vector<std::vector<long>> R(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long x = X[i][k];
            if (!x) continue;
            for (size_t j = 0; j < n; ++j) R[i][j] += x * Y[k][j];
        }
    return R;
}

// generators of Sp(2g, Z) in the cycle-column convention
std::vector<std::vector<std::vector<long>>> symplectic_generators(int g) {
    std::vector<std::vector<std::vector<long>>> gens;
    auto blank = [&] { return identity_basis(g); };
    {
        // a <-> b swap: a' = b, b' = -a
        auto M = std::vector<std::vector<long>>(2 * static_cast<size_t>(g), std::vector<long>(2 * static_cast<size_t>(g), 0));
        for (int k = 0; k < g; ++k) {
            M[static_cast<size_t>(g + k)][static_cast<size_t>(k)] = 1;
            M[static_cast<size_t>(k)][static_cast<size_t>(g + k)] = -1;
        }
        gens.push_back(M);
    }
    for (int k = 0; k < g; ++k) {
        auto M = blank();  // b_k' = b_k + a_k
        M[static_cast<size_t>(k)][static_cast<size_t>(g + k)] = 1;
        gens.push_back(M);
    }
    for (int k = 0; k < g; ++k)
        for (int l = k + 1; l < g; ++l) {
            auto M = blank();  // b_k' = b_k + a_l, b_l' = b_l + a_k
            M[static_cast<size_t>(l)][static_cast<size_t>(g + k)] = 1;
            M[static_cast<size_t>(k)][static_cast<size_t>(g + l)] = 1;
            gens.push_back(M);
        }
    for (int k = 0; k < g; ++k)
        for (int l = 0; l < g; ++l) {
            if (k == l) continue;
            auto M = blank();  // a_k' = a_k + a_l, b_l' = b_l - b_k
            M[static_cast<size_t>(l)][static_cast<size_t>(k)] = 1;
            M[static_cast<size_t>(g + k)][static_cast<size_t>(g + l)] = -1;
            gens.push_back(M);
        }
    return gens;
}

Char reduce_half_period(const CVec& u, const CMat& omega1_inv, const RiemannMatrix& Z) {
    int g = Z.g;
    CVec v = mat_vec(omega1_inv, u);
    RMat Y = Z.imag_part();
    RVec imv(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) imv[static_cast<size_t>(i)] = v[static_cast<size_t>(i)].im;
    RVec mp_real = rmat_solve(Y, imv);

    unsigned mp = 0, md = 0;
    RVec mp_rounded(static_cast<size_t>(g));
    Real tol = Real(1) / 10000;
    for (int i = 0; i < g; ++i) {
        Real twice = 2 * mp_real[static_cast<size_t>(i)];
        Real r = round(twice);
        if (abs(Real(twice - r)) > tol)
            throw NonConvergenceError("half-period reduction: m' is not half-integral");
        long ri = static_cast<long>(r);
        mp_rounded[static_cast<size_t>(i)] = Real(ri) / 2;
        if (((ri % 2) + 2) % 2 == 1) mp |= 1u << i;
    }
    for (int i = 0; i < g; ++i) {
        Real x = v[static_cast<size_t>(i)].re;
        for (int j = 0; j < g; ++j) x -= Z.Z(i, j).re * mp_rounded[static_cast<size_t>(j)];
        Real twice = 2 * x;
        Real r = round(twice);
        if (abs(Real(twice - r)) > tol)
            throw NonConvergenceError("half-period reduction: m'' is not half-integral");
        long ri = static_cast<long>(r);
        if (((ri % 2) + 2) % 2 == 1) md |= 1u << i;
    }
    return Char(g, mp, md);
}

struct BasisResult {
    CMat Omega1, Omega2;
    RiemannMatrix Z;
    std::vector<Char> half_periods;
    bool ok = false;
};

BasisResult try_basis(const RawPeriods& raw, const std::vector<std::vector<long>>& M, int n_labels,
                      bool with_inf, const Real& sym_tol) {
    BasisResult res;
    Assembled asmb = assemble(raw, M);
    int g = raw.g;
    CMat omega1_inv;
    try {
        omega1_inv = mat_inverse(asmb.Omega1);
    } catch (const NonConvergenceError&) {
        if (getenv("HYPELL_DEBUG")) fprintf(stderr, "try_basis: omega1 singular\n");
        return res;
    }
    CMat Zm = mat_mul(omega1_inv, asmb.Omega2);
    // symmetry check
    Real scale(0);
    for (const Cplx& v : Zm.a) scale = std::max(scale, abs(v));
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (abs(Zm(i, j) - Zm(j, i)) > sym_tol * (Real(1) + scale)) {
                if (getenv("HYPELL_DEBUG")) fprintf(stderr, "try_basis: Z not symmetric\n");
                return res;
            }
    if (!cholesky([&] {
            RMat Y(g);
            for (int i = 0; i < g; ++i)
                for (int j = 0; j < g; ++j) Y(i, j) = Zm(i, j).im;
            return Y;
        }())) {
        if (getenv("HYPELL_DEBUG")) fprintf(stderr, "try_basis: Im Z not positive definite\n");
        return res;
    }

    RiemannMatrix Z(g, Zm, sym_tol);
    std::vector<Char> cs;
    try {
        // path sums from the first sorted branch point
        CVec acc(static_cast<size_t>(g));
        cs.push_back(Char(g, 0, 0));
        int n_finite = raw.n_finite;
        for (int i = 1; i < n_finite; ++i) {
            if (i <= 2 * g)
                for (int j = 0; j < g; ++j) acc[static_cast<size_t>(j)] += raw.seg[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
            if (i <= 2 * g) {
                cs.push_back(reduce_half_period(acc, omega1_inv, Z));
            } else {
                // the last finite label when all 2g+2 points are finite: use
                // the group relation sum of all half-periods = 0
                Char total(g, 0, 0);
                for (const Char& c : cs) total = char_add(total, c);
                cs.push_back(total);
            }
        }
        if (with_inf) {
            Char total(g, 0, 0);
            for (const Char& c : cs) total = char_add(total, c);
            cs.push_back(total);
        }
    } catch (const NonConvergenceError& e) {
        if (getenv("HYPELL_DEBUG")) fprintf(stderr, "try_basis: reduction failed: %s\n", e.what());
        return res;
    }
    if (static_cast<int>(cs.size()) != n_labels) {
        if (getenv("HYPELL_DEBUG")) fprintf(stderr, "try_basis: label count %d != %d\n", (int)cs.size(), n_labels);
        return res;
    }

    res.Omega1 = asmb.Omega1;
    res.Omega2 = asmb.Omega2;
    res.Z = Z;
    res.half_periods = std::move(cs);
    res.ok = true;
    return res;
}

// all shifts delta making every required image odd (and the images distinct)
std::vector<Char> delta_candidates(int g, const std::vector<Char>& cs) {
    std::vector<Char> found;
    int n = static_cast<int>(cs.size());
    for (unsigned idx = 0; idx < (1u << (2 * g)); ++idx) {
        Char delta = Char::from_index(g, idx);
        std::set<unsigned> seen;
        bool good = true;
        if (g == 1) {
            // the theta divisor is a point: the shift itself is the odd
            // characteristic and sums of two branch images land on evens
            good = is_odd(delta);
            for (int i = 0; i < n && good; ++i)
                for (int j = i + 1; j < n && good; ++j)
                    if (is_odd(char_add(char_add(cs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]), delta))) good = false;
        } else if (g == 2) {
            for (int i = 0; i < n && good; ++i) {
                Char w = char_add(cs[static_cast<size_t>(i)], delta);
                if (!is_odd(w) || !seen.insert(w.index()).second) good = false;
            }
        } else {
            for (int i = 0; i < n && good; ++i)
                for (int j = i + 1; j < n && good; ++j) {
                    Char w = char_add(char_add(cs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]), delta);
                    if (!is_odd(w) || !seen.insert(w.index()).second) good = false;
                }
        }
        if (good) found.push_back(delta);
    }
    return found;
}

// ---------------------------------------------------------------------------
// parity normalization over F_2.
//
// Characteristics are packed as 2g-bit vectors z with the m'' bits low and
// the m' bits high; q(z) is the parity form and Bf the symplectic pairing.

int f2_q(unsigned z, int g) { return std::popcount(z & (z >> g) & ((1u << g) - 1u)) & 1; }

int f2_B(unsigned z, unsigned w, int g) {
    unsigned mg = (1u << g) - 1u;
    return (std::popcount((z & mg) & ((w >> g) & mg)) + std::popcount(((z >> g) & mg) & (w & mg))) & 1;
}

unsigned char_to_f2(const Char& c) { return c.md | (c.mp << c.g); }

// column-major F_2 matrices, each column a 2g-bit vector
using F2Mat = std::vector<unsigned>;

unsigned f2_apply(const F2Mat& m, unsigned v) {
    unsigned out = 0;
    for (size_t j = 0; j < m.size(); ++j)
        if ((v >> j) & 1u) out ^= m[j];
    return out;
}

F2Mat f2_mul(const F2Mat& a, const F2Mat& b) {
    F2Mat out(b.size());
    for (size_t j = 0; j < b.size(); ++j) out[j] = f2_apply(a, b[j]);
    return out;
}

F2Mat f2_identity(int n) {
    F2Mat m(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(j)] = 1u << j;
    return m;
}

F2Mat f2_inverse(F2Mat a) {
    int n = static_cast<int>(a.size());
    F2Mat inv = f2_identity(n);
    // row-reduce on the transposed view by working with column operations
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int j = col; j < n; ++j)
            if ((a[static_cast<size_t>(j)] >> col) & 1u) {
                piv = j;
                break;
            }
        if (piv < 0) throw NonConvergenceError("f2_inverse: singular matrix");
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
        std::swap(inv[static_cast<size_t>(piv)], inv[static_cast<size_t>(col)]);
        for (int j = 0; j < n; ++j) {
            if (j == col) continue;
            if ((a[static_cast<size_t>(j)] >> col) & 1u) {
                a[static_cast<size_t>(j)] ^= a[static_cast<size_t>(col)];
                inv[static_cast<size_t>(j)] ^= inv[static_cast<size_t>(col)];
            }
        }
    }
    return inv;
}

std::uint64_t f2_pack(const F2Mat& m, int bits) {
    std::uint64_t key = 0;
    for (size_t j = 0; j < m.size(); ++j) key |= static_cast<std::uint64_t>(m[j]) << (j * static_cast<size_t>(bits));
    return key;
}

// symplectic basis adapted to an Arf-zero quadratic form: columns
// u_1..u_g, v_1..v_g with q = 0 on all of them and B(u_i, v_j) = delta_ij
F2Mat adapted_basis(int g, const std::function<int(unsigned)>& q) {
    int dim = 2 * g;
    std::vector<unsigned> gens;
    for (int j = 0; j < dim; ++j) gens.push_back(1u << j);
    std::vector<unsigned> us, vs;

    for (int round_idx = 0; round_idx < g; ++round_idx) {
        // enumerate the span of the current generators
        std::vector<unsigned> span{0u};
        for (unsigned gday : gens) {
            size_t cur = span.size();
            for (size_t t = 0; t < cur; ++t) span.push_back(span[t] ^ gday);
        }
        unsigned e = 0;
        for (unsigned z : span)
            if (z != 0 && q(z) == 0) {
                e = z;
                break;
            }
        if (e == 0) throw NonConvergenceError("adapted_basis: no isotropic vector found");
        unsigned f = 0;
        for (unsigned z : span)
            if (f2_B(e, z, g)) {
                f = z;
                break;
            }
        if (f == 0) throw NonConvergenceError("adapted_basis: degenerate pairing");
        if (q(f)) f ^= e;
        us.push_back(e);
        vs.push_back(f);
        // project the generators onto the orthogonal complement of (e, f)
        std::vector<unsigned> next;
        for (unsigned z : gens) {
            unsigned w = z;
            if (f2_B(w, f, g)) w ^= e;
            if (f2_B(w, e, g)) w ^= f;
            next.push_back(w);
        }
        // keep an independent subset of size dim - 2*(round+1)
        std::vector<unsigned> indep;
        std::vector<unsigned> echelon;
        for (unsigned w : next) {
            unsigned red = w;
            for (unsigned b : echelon) {
                unsigned hi = 1u << (31 - std::countl_zero(b));
                if (red & hi) red ^= b;
            }
            if (red) {
                echelon.push_back(red);
                indep.push_back(w);
                std::sort(echelon.begin(), echelon.end(), std::greater<unsigned>());
            }
        }
        gens = indep;
    }

    F2Mat out;
    for (unsigned u : us) out.push_back(u);
    for (unsigned v : vs) out.push_back(v);
    return out;
}

// integer symplectic matrix whose mod-2 action on the point characteristics
// makes all pairwise sums of the half periods odd
std::vector<std::vector<long>> parity_normalizer(int g, const std::vector<Char>& half_periods) {
    int dim = 2 * g;
    std::vector<unsigned> cs;
    for (const Char& c : half_periods) cs.push_back(char_to_f2(c));

    std::vector<unsigned> diffs;
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j) diffs.push_back(cs[i] ^ cs[j]);

    // solve B(a, d) = 1 + q(d) for a; B(a, d) = popcount(a & swap(d)) mod 2
    unsigned mg = (1u << g) - 1u;
    auto swap_halves = [&](unsigned d) { return ((d & mg) << g) | ((d >> g) & mg); };
    std::vector<std::pair<unsigned, int>> rows;
    for (unsigned d : diffs) rows.push_back({swap_halves(d), 1 ^ f2_q(d, g)});
    // Gaussian elimination over F_2
    std::vector<std::pair<unsigned, int>> echelon;
    for (auto [row, rhs] : rows) {
        for (auto& [er, erhs] : echelon) {
            unsigned hi = 1u << (31 - std::countl_zero(er));
            if (row & hi) {
                row ^= er;
                rhs ^= erhs;
            }
        }
        if (row)
            echelon.push_back({row, rhs});
        else if (rhs)
            throw NonConvergenceError("parity_normalizer: inconsistent parity system");
        std::sort(echelon.begin(), echelon.end(),
                  [](const auto& x, const auto& y) { return x.first > y.first; });
    }
    unsigned a = 0;
    // back substitution (free variables set to zero)
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        unsigned row = it->first;
        int rhs = it->second;
        unsigned hi = 1u << (31 - std::countl_zero(row));
        int val = rhs ^ (std::popcount(row & a & ~hi) & 1);
        if (val) a |= hi;
    }
    for (unsigned d : diffs)
        if (f2_B(a, d, g) != (1 ^ f2_q(d, g)))
            throw NonConvergenceError("parity_normalizer: parity system has no solution");

    auto q_plain = [g](unsigned z) { return f2_q(z, g); };
    auto q_tw = [g, a](unsigned z) { return f2_q(z, g) ^ f2_B(a, z, g); };
    F2Mat Eq = adapted_basis(g, q_plain);
    F2Mat Eqa = adapted_basis(g, q_tw);
    F2Mat L = f2_mul(Eq, f2_inverse(Eqa));
    F2Mat target = f2_inverse(L);

    // factor the target into the symplectic generators by bidirectional
    // breadth-first search (each generator is an involution mod 2)
    auto gens_int = symplectic_generators(g);
    std::vector<F2Mat> gens2;
    for (const auto& Gm : gens_int) {
        F2Mat m(static_cast<size_t>(dim), 0u);
        for (int col = 0; col < dim; ++col)
            for (int row = 0; row < dim; ++row)
                if (((Gm[static_cast<size_t>(row)][static_cast<size_t>(col)] % 2) + 2) % 2)
                    m[static_cast<size_t>(col)] |= 1u << row;
        gens2.push_back(m);
    }
    // NOTE: characteristics transform by the inverse of the cycle matrix, so
    // the F2 action of the integer generator G on characteristics is
    // (G mod 2)^-1; with involutions mod 2 the distinction vanishes.

    std::uint64_t start = f2_pack(f2_identity(dim), dim);
    std::uint64_t goal = f2_pack(target, dim);
    std::map<std::uint64_t, std::vector<int>> fwd{{start, {}}}, bwd{{goal, {}}};
    std::deque<std::pair<std::uint64_t, int>> qf{{start, 0}}, qb{{goal, 1}};
    std::vector<int> word;
    bool found = start == goal;
    size_t steps = 0;
    while (!found && (!qf.empty() || !qb.empty())) {
        if (++steps > 4000000) throw NonConvergenceError("parity_normalizer: factorization search exhausted");
        bool use_fwd = qb.empty() || (!qf.empty() && qf.size() <= qb.size());
        auto& queue = use_fwd ? qf : qb;
        auto& mine = use_fwd ? fwd : bwd;
        auto& theirs = use_fwd ? bwd : fwd;
        auto [key, side] = queue.front();
        queue.pop_front();
        F2Mat cur(static_cast<size_t>(dim));
        for (int j = 0; j < dim; ++j) cur[static_cast<size_t>(j)] = (key >> (j * dim)) & ((1u << dim) - 1u);
        const std::vector<int>& path = mine.at(key);
        for (size_t gi = 0; gi < gens2.size(); ++gi) {
            F2Mat nxt = use_fwd ? f2_mul(cur, gens2[gi]) : f2_mul(gens2[gi], cur);
            std::uint64_t nk = f2_pack(nxt, dim);
            if (mine.count(nk)) continue;
            std::vector<int> npath = path;
            npath.push_back(static_cast<int>(gi));
            mine[nk] = npath;
            queue.push_back({nk, side});
            auto hit = theirs.find(nk);
            if (hit != theirs.end()) {
                // meeting state S satisfies S = g_f1..g_fk and
                // S = g_bm..g_b1 * goal, so goal = g_b1..g_bm * g_f1..g_fk
                const std::vector<int>& fpart = use_fwd ? npath : hit->second;
                const std::vector<int>& bpart = use_fwd ? hit->second : npath;
                word = bpart;
                word.insert(word.end(), fpart.begin(), fpart.end());
                found = true;
                break;
            }
        }
    }
    if (!found) throw NonConvergenceError("parity_normalizer: factorization not found");

    auto M = identity_basis(g);
    for (int gi : word) M = mat_mul_int(M, gens_int[static_cast<size_t>(gi)]);
    // confirm the lift reduces to the target mod 2
    F2Mat check(static_cast<size_t>(dim), 0u);
    for (int col = 0; col < dim; ++col)
        for (int row = 0; row < dim; ++row)
            if (((M[static_cast<size_t>(row)][static_cast<size_t>(col)] % 2) + 2) % 2) check[static_cast<size_t>(col)] |= 1u << row;
    if (f2_pack(check, dim) != goal)
        throw NonConvergenceError("parity_normalizer: lift does not reduce to the target");
    return M;
}

}  // namespace

PeriodData period_matrix(const BranchSet& B, unsigned digits) {
    ScopedDigits sd(digits + 15);  // guard digits so the quadrature target is reachable
    int g = B.g;
    if (g < 1 || g > 3) throw BadInputError("period_matrix: genus must be 1, 2 or 3");

    std::vector<Real> finite;
    for (const PValue& p : B.points) {
        if (p.is_inf()) continue;
        if (!(p.z.im == 0)) throw BadInputError("period_matrix: real branch points required");
        finite.push_back(p.z.re);
    }
    std::sort(finite.begin(), finite.end());
    Real span = finite.back() - finite.front();
    for (size_t i = 0; i + 1 < finite.size(); ++i)
        if (finite[i + 1] - finite[i] <= pow(Real(10), -static_cast<int>(digits) / 4) * (Real(1) + span))
            throw BadInputError("period_matrix: branch points too close");

    bool with_inf = B.has_infinity();
    int n_labels = 2 * g + 2;

    RawPeriods raw = raw_segment_periods(finite, g, digits);
    Real sym_tol = pow(Real(10), -static_cast<int>(digits) / 2);

    // natural basis, then a global b-orientation flip if Im Z came out negative
    auto M = identity_basis(g);
    BasisResult res = try_basis(raw, M, n_labels, with_inf, sym_tol);
    if (!res.ok) {
        for (int k = 0; k < g; ++k)
            for (int r = 0; r < 2 * g; ++r) M[static_cast<size_t>(r)][static_cast<size_t>(g + k)] = -M[static_cast<size_t>(r)][static_cast<size_t>(g + k)];
        res = try_basis(raw, M, n_labels, with_inf, sym_tol);
    }
    if (!res.ok) throw NonConvergenceError("period_matrix: could not build a symplectic basis");

    if (g == 3) {
        // Normalize the basis so the parity search finds a zero shift, which
        // is what makes the pair images additive.  The correction is computed
        // over F_2: the pairwise sums of the half periods must land on odd
        // characteristics, which pins a quadratic-form twist; the matching
        // symplectic matrix is factored into generators and lifted to Z.
        auto deltas = delta_candidates(g, res.half_periods);
        if (!(deltas.size() == 1 && deltas[0].mp == 0 && deltas[0].md == 0)) {
            std::vector<std::vector<long>> fix = parity_normalizer(g, res.half_periods);
            M = mat_mul_int(M, fix);
            res = try_basis(raw, M, n_labels, with_inf, sym_tol);
            if (!res.ok) {
                // orientation flip of the corrected basis
                for (int k = 0; k < g; ++k)
                    for (int r = 0; r < 2 * g; ++r) M[static_cast<size_t>(r)][static_cast<size_t>(g + k)] = -M[static_cast<size_t>(r)][static_cast<size_t>(g + k)];
                res = try_basis(raw, M, n_labels, with_inf, sym_tol);
            }
            if (!res.ok)
                throw NonConvergenceError("period_matrix: parity normalization broke the basis");
            auto ds = delta_candidates(g, res.half_periods);
            if (!(ds.size() == 1 && ds[0].mp == 0 && ds[0].md == 0))
                throw NonConvergenceError("period_matrix: parity normalization did not zero the shift");
        }
    }

    PeriodData out;
    out.g = g;
    out.Omega1 = res.Omega1;
    out.Omega2 = res.Omega2;
    out.Z = res.Z;
    out.sorted_branch = finite;
    out.with_infinity = with_inf;
    out.raw_half_periods = res.half_periods;
    // crude condition estimate: max |entry| of Omega1 times max |entry| of its inverse
    Real m1(0), m2(0);
    CMat inv = mat_inverse(res.Omega1);
    for (const Cplx& v : res.Omega1.a) m1 = std::max(m1, abs(v));
    for (const Cplx& v : inv.a) m2 = std::max(m2, abs(v));
    out.omega1_condition = m1 * m2;
    return out;
}

Char CharacteristicDictionary::pi_image(const std::vector<int>& labels) const {
    Char acc = delta;
    for (int l : labels) {
        if (l < 0 || l >= label_count()) throw BadInputError("pi_image: label out of range");
        acc = char_add(acc, c[static_cast<size_t>(l)]);
    }
    return acc;
}

Char CharacteristicDictionary::odd_image_g2(int i) const {
    if (g != 2) throw BadInputError("odd_image_g2: genus 2 only");
    return pi_image({i});
}

Char CharacteristicDictionary::odd_image_g3(int i, int j) const {
    if (g != 3) throw BadInputError("odd_image_g3: genus 3 only");
    if (i == j) throw BadInputError("odd_image_g3: need distinct labels");
    return pi_image({i, j});
}

CharacteristicDictionary characteristic_dictionary(const PeriodData& P, int base_label) {
    int g = P.g;
    int n = static_cast<int>(P.raw_half_periods.size());
    if (base_label < 0 || base_label >= n) throw BadInputError("characteristic_dictionary: bad base label");

    std::vector<Char> cs;
    cs.reserve(static_cast<size_t>(n));
    const Char& base = P.raw_half_periods[static_cast<size_t>(base_label)];
    for (const Char& c : P.raw_half_periods) cs.push_back(char_add(c, base));

    auto ds = delta_candidates(g, cs);
    if (ds.empty())
        throw NonConvergenceError("characteristic_dictionary: no parity shift works (inconsistent periods)");
    if (ds.size() > 1) {
        std::string msg = "characteristic_dictionary: ambiguous shift:";
        for (const Char& d : ds) msg += " " + char_to_string(d);
        throw NonConvergenceError(msg);
    }

    CharacteristicDictionary D;
    D.g = g;
    D.c = std::move(cs);
    D.delta = ds[0];

    if (g == 3) {
        // additivity must be literal after the period normalization
        if (!(D.delta.mp == 0 && D.delta.md == 0))
            throw NonConvergenceError("characteristic_dictionary: genus-3 shift is not zero");
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    if (r == s || s == t || r == t) continue;
                    Char lhs = char_add(D.odd_image_g3(r, s), D.odd_image_g3(s, t));
                    if (!(lhs == D.odd_image_g3(r, t)))
                        throw NonConvergenceError("characteristic_dictionary: additivity failed");
                }
    }
    return D;
}

}  // namespace hypell
