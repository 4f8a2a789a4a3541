#include "hypell/igusa.hpp"

#include <algorithm>

namespace hypell {

namespace {

// evaluate an MPoly with complex values for a subset of variables (the rest
// must not occur)
Cplx mpoly_eval_cplx(const MPoly& p, const std::map<MVar, Cplx>& vals) {
    Cplx acc;
    for (const auto& [e, coeff] : p.terms) {
        Cplx term{rat_to_real(coeff)};
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            auto it = vals.find(static_cast<MVar>(v));
            if (it == vals.end()) throw BadInputError("mpoly_eval_cplx: unbound variable");
            term *= pow_int(it->second, e[v]);
        }
        acc += term;
    }
    return acc;
}

CPoly mpoly_to_cpoly_in(const MPoly& p, MVar var, const std::map<MVar, Cplx>& vals) {
    CPoly out;
    out.c.assign(static_cast<size_t>(p.max_exponent(var)) + 1, Cplx());
    for (const auto& [e, coeff] : p.terms) {
        Cplx term{rat_to_real(coeff)};
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0 || static_cast<int>(v) == var) continue;
            auto it = vals.find(static_cast<MVar>(v));
            if (it == vals.end()) throw BadInputError("mpoly_to_cpoly_in: unbound variable");
            term *= pow_int(it->second, e[v]);
        }
        out.c[static_cast<size_t>(e[static_cast<size_t>(var)])] += term;
    }
    out.trim();
    return out;
}

// rewrite even powers of S1 as powers of U
MPoly even_powers_to_u(const MPoly& p) {
    MPoly out;
    for (const auto& [e, coeff] : p.terms) {
        if (e[VS1] % 2 != 0) throw BadInputError("expected even powers of S1 only");
        MPoly::Expt ne = e;
        ne[VU] = e[VS1] / 2;
        ne[VS1] = 0;
        out.terms[ne] += coeff;
    }
    out.cleanup();
    return out;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    Int num = q.get_num(), den = q.get_den();
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn == num && rd * rd == den) return make_rat(rn, rd);
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// tuples

bool weighted_equal(const IgusaClebschTuple& a, const IgusaClebschTuple& b) {
    if (a.I10 == 0 || b.I10 == 0) throw BadInputError("weighted_equal: I10 must be nonzero");
    return rat_pow(a.I2, 5) * b.I10 == rat_pow(b.I2, 5) * a.I10 &&
           rat_pow(a.I4, 5) * rat_pow(b.I10, 2) == rat_pow(b.I4, 5) * rat_pow(a.I10, 2) &&
           rat_pow(a.I6, 5) * rat_pow(b.I10, 3) == rat_pow(b.I6, 5) * rat_pow(a.I10, 3);
}

IgusaClebschTuple weighted_rescale(const IgusaClebschTuple& t, const Rat& lambda) {
    return {t.I2 * lambda, t.I4 * rat_pow(lambda, 2), t.I6 * rat_pow(lambda, 3),
            t.I10 * rat_pow(lambda, 5)};
}

IgusaClebschTuple igusa_from_symmetric(const SymmetricCoefficients2& c) {
    const auto& tables = igusa_forward_polynomials();
    std::map<MVar, Rat> vals{{VG1, c.G1}, {VG2, c.G2}, {VG3, c.G3}};
    return {tables[0].eval_all(vals), tables[1].eval_all(vals), tables[2].eval_all(vals),
            tables[3].eval_all(vals)};
}

std::array<Cplx, 4> igusa_from_symmetric_numeric(const Cplx& G1, const Cplx& G2, const Cplx& G3) {
    const auto& tables = igusa_forward_polynomials();
    std::map<MVar, Cplx> vals{{VG1, G1}, {VG2, G2}, {VG3, G3}};
    return {mpoly_eval_cplx(tables[0], vals), mpoly_eval_cplx(tables[1], vals),
            mpoly_eval_cplx(tables[2], vals), mpoly_eval_cplx(tables[3], vals)};
}

// ---------------------------------------------------------------------------
// root-difference evaluation

namespace {

// pairings of {0..5} into three pairs
const std::vector<std::array<int, 6>>& pairings6() {
    static std::vector<std::array<int, 6>> out = [] {
        std::vector<std::array<int, 6>> res;
        std::array<int, 6> idx{};
        std::vector<int> rest{0, 1, 2, 3, 4, 5};
        // first pair contains 0
        for (int b1 = 1; b1 < 6; ++b1) {
            std::vector<int> r1;
            for (int k = 1; k < 6; ++k)
                if (k != b1) r1.push_back(k);
            // second pair contains r1[0]
            for (int j = 1; j < 4; ++j) {
                std::array<int, 6> p{0, b1, r1[0], r1[static_cast<size_t>(j)], 0, 0};
                std::vector<int> r2;
                for (int k = 1; k < 4; ++k)
                    if (k != j) r2.push_back(r1[static_cast<size_t>(k)]);
                p[4] = r2[0];
                p[5] = r2[1];
                res.push_back(p);
            }
        }
        (void)idx;
        (void)rest;
        return res;
    }();
    return out;
}

// splits of {0..5} into two unordered triples (first triple contains 0)
const std::vector<std::array<int, 6>>& triples6() {
    static std::vector<std::array<int, 6>> out = [] {
        std::vector<std::array<int, 6>> res;
        for (int a = 1; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                std::array<int, 6> t{0, a, b, 0, 0, 0};
                int pos = 3;
                for (int k = 1; k < 6; ++k)
                    if (k != a && k != b) t[static_cast<size_t>(pos++)] = k;
                res.push_back(t);
            }
        return res;
    }();
    return out;
}

template <typename Scalar, typename Diff>
std::array<Scalar, 4> igusa_root_eval(Diff diff) {
    auto sq = [&](int i, int j) -> Scalar {
        Scalar d = diff(i, j);
        return d * d;
    };

    Scalar I2{};
    for (const auto& p : pairings6()) {
        Scalar term = sq(p[0], p[1]) * sq(p[2], p[3]) * sq(p[4], p[5]);
        I2 += term;
    }

    Scalar I4{};
    for (const auto& t : triples6()) {
        Scalar term = sq(t[0], t[1]) * sq(t[1], t[2]) * sq(t[2], t[0]) * sq(t[3], t[4]) *
                      sq(t[4], t[5]) * sq(t[5], t[3]);
        I4 += term;
    }

    Scalar I6{};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& t : triples6()) {
        Scalar within = sq(t[0], t[1]) * sq(t[1], t[2]) * sq(t[2], t[0]) * sq(t[3], t[4]) *
                        sq(t[4], t[5]) * sq(t[5], t[3]);
        for (const auto& perm : perms) {
            Scalar cross = sq(t[0], t[static_cast<size_t>(3 + perm[0])]) *
                           sq(t[1], t[static_cast<size_t>(3 + perm[1])]) *
                           sq(t[2], t[static_cast<size_t>(3 + perm[2])]);
            I6 += within * cross;
        }
    }

    Scalar I10 = diff(0, 0);  // caller supplies 1 for the diagonal
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) I10 *= sq(i, j);

    return {I2, I4, I6, I10};
}

}  // namespace

IgusaClebschTuple igusa_from_roots_oracle(const RationalBranchSet& B) {
    if (B.g != 2) throw BadInputError("igusa_from_roots_oracle: genus 2 only");
    int fin = static_cast<int>(B.finite.size());
    auto diff = [&](int i, int j) -> Rat {
        if (i == j) return Rat(1);
        if (i >= fin || j >= fin) return Rat(1);
        return B.finite[static_cast<size_t>(i)] - B.finite[static_cast<size_t>(j)];
    };
    auto vals = igusa_root_eval<Rat>(diff);
    return {vals[0], vals[1], vals[2], vals[3]};
}

std::array<Cplx, 4> igusa_from_roots_oracle_numeric(const BranchSet& B) {
    if (B.g != 2) throw BadInputError("igusa_from_roots_oracle_numeric: genus 2 only");
    auto diff = [&](int i, int j) -> Cplx {
        if (i == j) return Cplx(Real(1));
        return branch_diff(B, i, j);
    };
    return igusa_root_eval<Cplx>(diff);
}

// ---------------------------------------------------------------------------
// elimination system

const EliminationSystem& elimination_system() {
    static const EliminationSystem sys = [] {
        const auto& fw = igusa_forward_polynomials();
        std::array<MPoly, 4> sym;
        for (size_t k = 0; k < 4; ++k) sym[k] = even_powers_to_u(symmetrize_g1g3(fw[k]));

        MPoly E2 = sym[0] - MPoly::var(VR) * MPoly::var(VI2);
        MPoly E4 = sym[1] - MPoly::var(VR).pow(2) * MPoly::var(VI4);
        MPoly E6 = sym[2] - MPoly::var(VR).pow(3) * MPoly::var(VI6);
        MPoly E10 = sym[3] - MPoly::var(VR).pow(5) * MPoly::var(VI10);

        auto s2c = E2.collect(VS2);
        if (s2c.size() != 2) throw BadInputError("elimination: I2 equation not linear in S2");
        MPoly s2_num = -s2c[0];
        MPoly s2_den = s2c[1];  // a constant

        MPoly E4s = E4.substitute_rational(VS2, s2_num, s2_den);
        MPoly E6s = E6.substitute_rational(VS2, s2_num, s2_den);
        MPoly E10s = E10.substitute_rational(VS2, s2_num, s2_den);

        auto uc = E4s.collect(VU);
        if (uc.size() != 2) throw BadInputError("elimination: I4 equation not linear in U");
        MPoly u_num = -uc[0];
        MPoly u_den = uc[1];

        EliminationSystem sys;
        // normalize S2 = s2_num / 16 with the sign of the constant absorbed
        Rat den_const = s2_den.terms.begin()->second;
        sys.s2_num = (Rat(16) / den_const) * s2_num;
        sys.u_num = u_num;
        sys.u_den = u_den;
        sys.p6 = E6s.substitute_rational(VU, u_num, u_den);
        sys.p10 = E10s.substitute_rational(VU, u_num, u_den);
        return sys;
    }();
    return sys;
}

namespace {

// the eliminated pair is even in G2; collect it as a polynomial in v = G2^2
QPoly2 pair_even_at(const MPoly& p, const IgusaClebschTuple& t) {
    std::map<MVar, Rat> vals{{VI2, t.I2}, {VI4, t.I4}, {VI6, t.I6}, {VI10, t.I10}};
    MPoly pe = p.eval_partial(vals);
    auto cols = pe.collect(VG2);
    std::vector<QPoly> coeffs;
    for (size_t k = 0; k < cols.size(); ++k) {
        if (k % 2 == 1) {
            if (!cols[k].is_zero()) throw BadInputError("pair_even_at: odd power of G2 present");
            continue;
        }
        coeffs.push_back(mpoly_to_qpoly(cols[k], VR));
    }
    return QPoly2(std::move(coeffs));
}

}  // namespace

QPoly r_polynomial_raw(const IgusaClebschTuple& t) {
    const auto& pair = g2r_pair_transcribed();
    QPoly res = resultant_eliminate(pair_even_at(pair[0], t), pair_even_at(pair[1], t));
    if (res.is_zero()) throw InversionError("r_polynomial_raw: identically zero resultant");
    return res;
}

QPoly r_polynomial_for(const IgusaClebschTuple& t) {
    QPoly res = r_polynomial_raw(t);

    // The raw resultant carries a cubed spurious branch disjoint from the
    // true root set: res = E * J^3 with E squarefree for generic tuples.
    // Peel it off with gcd arithmetic; fall back to the raw resultant when
    // the tuple is degenerate enough to break the pattern.
    QPoly a = qpoly_gcd(res, res.derivative());  // J^2 generically
    if (a.degree() >= 1) {
        auto [b, rem1] = qpoly_divmod(res, a);  // E * J
        if (rem1.is_zero()) {
            QPoly c = qpoly_gcd(b, a);  // J
            auto [e, rem2] = qpoly_divmod(b, c);
            if (rem2.is_zero() && e.degree() >= 1) return e;
        }
    }
    return res;
}

QPoly eq_r_transcribed_at(const IgusaClebschTuple& t) {
    std::map<MVar, Rat> vals{{VI2, t.I2}, {VI4, t.I4}, {VI6, t.I6}, {VI10, t.I10}};
    return mpoly_to_qpoly(eq_r_transcribed().eval_partial(vals), VR);
}

// ---------------------------------------------------------------------------
// inverse pipeline

namespace {

struct Workspace {
    IgusaClebschTuple t;
    std::map<MVar, Cplx> base;  // numeric invariant values
    Real tol;
};

bool cplx_is_probably_real(const Cplx& z, const Real& tol) { return abs(Real(z.im)) <= tol * (Real(1) + abs(z)); }

std::optional<Rat> rationalize_cplx(const Cplx& z, const Real& tol) {
    if (!cplx_is_probably_real(z, tol)) return std::nullopt;
    return rationalize(z.re, Int("1000000000000000"), tol);
}

// unique complex values within tolerance, deterministic order
std::vector<Cplx> dedupe(std::vector<Cplx> xs, const Real& tol) {
    std::sort(xs.begin(), xs.end(), [](const Cplx& a, const Cplx& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    std::vector<Cplx> out;
    for (const Cplx& x : xs) {
        bool fresh = true;
        for (const Cplx& y : out)
            if (abs(x - y) <= tol * (Real(1) + abs(x))) fresh = false;
        if (fresh) out.push_back(x);
    }
    return out;
}

}  // namespace

std::vector<InverseCandidate> symmetric_from_igusa(const IgusaClebschTuple& t, const InverseOptions& opt) {
    if (t.I10 == 0) throw InversionError("symmetric_from_igusa: I10 must be nonzero");
    std::optional<ScopedDigits> sd;
    if (opt.digits) sd.emplace(opt.digits);
    Real tol = opt.tol;

    const EliminationSystem& sys = elimination_system();
    std::map<MVar, Rat> ivals{{VI2, t.I2}, {VI4, t.I4}, {VI6, t.I6}, {VI10, t.I10}};
    std::map<MVar, Cplx> inum{{VI2, Cplx(rat_to_real(t.I2))},
                              {VI4, Cplx(rat_to_real(t.I4))},
                              {VI6, Cplx(rat_to_real(t.I6))},
                              {VI10, Cplx(rat_to_real(t.I10))}};

    QPoly rpoly = qpoly_squarefree(r_polynomial_for(t));
    if (rpoly.degree() < 1) throw InversionError("symmetric_from_igusa: degenerate elimination");

    std::vector<Cplx> rroots = dedupe(poly_roots(rpoly.to_cpoly(), digits_eps(10)), digits_eps(20));

    const auto& pair = g2r_pair_transcribed();
    MPoly p6i = pair[0].eval_partial(ivals);
    MPoly p10i = pair[1].eval_partial(ivals);

    std::vector<InverseCandidate> found;
    auto push_candidate = [&](const Cplx& G1, const Cplx& G2, const Cplx& G3, const Cplx& r) {
        // forward verification against the r-weighted tuple
        auto f = igusa_from_symmetric_numeric(G1, G2, G3);
        std::array<Cplx, 4> want{Cplx(rat_to_real(t.I2)) * r,
                                 Cplx(rat_to_real(t.I4)) * pow_int(r, 2),
                                 Cplx(rat_to_real(t.I6)) * pow_int(r, 3),
                                 Cplx(rat_to_real(t.I10)) * pow_int(r, 5)};
        for (int k = 0; k < 4; ++k)
            if (abs(f[static_cast<size_t>(k)] - want[static_cast<size_t>(k)]) >
                tol * (Real(1) + abs(want[static_cast<size_t>(k)])))
                return;

        // dedupe up to the G1 <-> G3 swap
        for (const InverseCandidate& c : found) {
            bool same_direct = abs(c.G1 - G1) <= tol * (Real(1) + abs(G1)) &&
                               abs(c.G2 - G2) <= tol * (Real(1) + abs(G2)) &&
                               abs(c.G3 - G3) <= tol * (Real(1) + abs(G3));
            bool same_swap = abs(c.G1 - G3) <= tol * (Real(1) + abs(G3)) &&
                             abs(c.G2 - G2) <= tol * (Real(1) + abs(G2)) &&
                             abs(c.G3 - G1) <= tol * (Real(1) + abs(G1));
            if (same_direct || same_swap) return;
        }

        InverseCandidate cand;
        cand.G1 = G1;
        cand.G2 = G2;
        cand.G3 = G3;
        cand.r = r;

        // exact verification when everything rationalizes
        auto rg1 = rationalize_cplx(G1, tol), rg2 = rationalize_cplx(G2, tol),
             rg3 = rationalize_cplx(G3, tol), rrat = rationalize_cplx(r, tol);
        if (rg1 && rg2 && rg3 && rrat) {
            SymmetricCoefficients2 sc{*rg1, *rg2, *rg3, 1};
            IgusaClebschTuple fw = igusa_from_symmetric(sc);
            if (fw.I2 == t.I2 * *rrat && fw.I4 == t.I4 * rat_pow(*rrat, 2) &&
                fw.I6 == t.I6 * rat_pow(*rrat, 3) && fw.I10 == t.I10 * rat_pow(*rrat, 5)) {
                cand.exact = true;
                cand.coeffs = sc;
            }
        }
        found.push_back(std::move(cand));
    };

    for (const Cplx& r : rroots) {
        if (abs(r) <= tol) continue;
        std::map<MVar, Cplx> vals = inum;
        vals[VR] = r;
        // both displays are even in G2, so extract shared roots in v = G2^2
        CPoly q6 = mpoly_to_cpoly_in(p6i, VG2, vals);
        CPoly q10 = mpoly_to_cpoly_in(p10i, VG2, vals);
        auto even_part = [](const CPoly& p) {
            CPoly out;
            for (size_t k = 0; k < p.c.size(); k += 2) out.c.push_back(p.c[k]);
            out.trim();
            return out;
        };
        CPoly v6 = even_part(q6), v10 = even_part(q10);
        if (v6.degree() < 1 || v10.degree() < 1) continue;

        std::vector<Cplx> roots6, roots10;
        try {
            roots6 = poly_roots(v6, digits_eps(10));
            roots10 = poly_roots(v10, digits_eps(10));
        } catch (const RootSolveError&) {
            continue;
        }
        std::vector<Cplx> shared_v;
        Real match_tol = pow(Real(10), -static_cast<int>(working_digits()) / 2);
        for (const Cplx& a : roots6)
            for (const Cplx& b : roots10)
                if (abs(a - b) <= match_tol * (Real(1) + abs(a))) shared_v.push_back((a + b) * (Real(1) / 2));
        shared_v = dedupe(shared_v, match_tol);

        std::vector<Cplx> shared;
        for (const Cplx& v : shared_v) {
            Cplx g = sqrt(v);
            if (abs(g) <= match_tol) {
                shared.push_back(Cplx(Real(0)));
            } else {
                shared.push_back(g);
                shared.push_back(-g);
            }
        }

        for (const Cplx& G2c : shared) {
            std::map<MVar, Cplx> gv = vals;
            gv[VG2] = G2c;

            std::vector<Cplx> u_candidates;
            Cplx uden = mpoly_eval_cplx(sys.u_den, gv);
            if (abs(uden) > tol) {
                u_candidates.push_back(mpoly_eval_cplx(sys.u_num, gv) / uden);
            } else {
                // degenerate G2: the I4 relation no longer pins U, so fall back
                // to the I6 relation, quadratic in U
                const EliminationSystem& s = elimination_system();
                MPoly E6u;  // sym I6 with S2 substituted, still containing U
                {
                    const auto& fw = igusa_forward_polynomials();
                    MPoly sym6 = even_powers_to_u(symmetrize_g1g3(fw[2]));
                    MPoly E6 = sym6 - MPoly::var(VR).pow(3) * MPoly::var(VI6);
                    E6u = E6.substitute_rational(VS2, s.s2_num, MPoly::constant(Rat(16)));
                }
                auto cu = E6u.collect(VU);
                std::vector<Cplx> coeffs;
                for (const MPoly& c : cu) coeffs.push_back(mpoly_eval_cplx(c, gv));
                CPoly quad{coeffs};
                if (quad.degree() >= 1) {
                    for (const Cplx& u : poly_roots(quad, digits_eps(10))) u_candidates.push_back(u);
                }
            }

            for (const Cplx& U : u_candidates) {
                Cplx S2 = mpoly_eval_cplx(sys.s2_num, gv) / Real(16);
                for (int sgn : {1, -1}) {
                    Cplx S1 = Real(sgn) * sqrt(U);
                    Cplx disc = sqrt(S1 * S1 - 4 * S2);
                    Cplx G1c = (S1 + disc) / Real(2);
                    Cplx G3c = (S1 - disc) / Real(2);
                    push_candidate(G1c, G2c, G3c, r);
                }
            }
        }
    }

    if (found.empty()) throw InversionError("symmetric_from_igusa: no candidate survives verification");
    return found;
}

}  // namespace hypell
