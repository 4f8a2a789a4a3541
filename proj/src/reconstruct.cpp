#include "hypell/reconstruct.hpp"

#include <algorithm>

namespace hypell {

AlgebraicPeriodBasis algebraic_period_basis(const RiemannMatrix& Z, const std::vector<Char>& w_odd,
                                            const Char& w0, const Real& eps, const Real& condition_cap) {
    int g = Z.g;
    if (static_cast<int>(w_odd.size()) != g)
        throw BadInputError("algebraic_period_basis: need g odd characteristics");
    for (const Char& m : w_odd)
        if (!is_odd(m)) throw BadInputError("algebraic_period_basis: characteristics must be odd");
    if (is_odd(w0)) throw BadInputError("algebraic_period_basis: w0 must be even");

    ThetaTable table = theta_table(Z, eps, true);
    Cplx t0 = table.val(w0);
    Real even_scale(0);
    for (const Char& m : even_characteristics(g)) even_scale = std::max(even_scale, abs(table.val(m)));
    if (abs(t0) <= even_scale * digits_eps(10))
        throw BadInputError("algebraic_period_basis: theta[w0] vanishes");

    Cplx scale = Cplx(Real(1)) / (Cplx(Real(0), 2 * const_pi()) * t0);
    CMat O(g);
    for (int i = 0; i < g; ++i) {
        const CVec& row = table.grad(w_odd[static_cast<size_t>(i)]);
        for (int j = 0; j < g; ++j) O(i, j) = scale * row[j];
    }

    AlgebraicPeriodBasis out;
    out.odd = w_odd;
    out.even = w0;
    out.Omega1 = O;
    CMat inv;
    try {
        inv = mat_inverse(O);
    } catch (const NonConvergenceError&) {
        throw BadInputError("algebraic_period_basis: singular gradient matrix");
    }
    Real m1(0), m2(0);
    for (const Cplx& v : O.a) m1 = std::max(m1, abs(v));
    for (const Cplx& v : inv.a) m2 = std::max(m2, abs(v));
    out.condition = m1 * m2;
    if (out.condition > condition_cap)
        throw BadInputError("algebraic_period_basis: Omega1 condition exceeds cap");
    return out;
}

CVec canonical_weierstrass_image(const RiemannMatrix& Z, const std::vector<Char>& basis_w,
                                 const std::vector<Char>& aux, const Real& eps) {
    int g = Z.g;
    if (static_cast<int>(basis_w.size()) != g || static_cast<int>(aux.size()) != g - 1)
        throw BadInputError("canonical_weierstrass_image: need g basis and g-1 auxiliary characteristics");
    ThetaTable table = theta_table(Z, eps, true);
    CVec coords(static_cast<size_t>(g));
    Real biggest(0);
    for (int i = 0; i < g; ++i) {
        std::vector<Char> ms{basis_w[static_cast<size_t>(i)]};
        ms.insert(ms.end(), aux.begin(), aux.end());
        coords[static_cast<size_t>(i)] = jacobian_nullwerte_from_table(table, ms);
        biggest = std::max(biggest, abs(coords[static_cast<size_t>(i)]));
    }
    if (biggest == 0) throw BadInputError("canonical_weierstrass_image: all coordinates vanish");
    Cplx norm_by;
    for (int i = 0; i < g; ++i)
        if (abs(coords[static_cast<size_t>(i)]) == biggest) {
            norm_by = coords[static_cast<size_t>(i)];
            break;
        }
    for (Cplx& c : coords) c /= norm_by;
    return coords;
}

// ---------------------------------------------------------------------------
// genus 2

namespace {

struct G2Nullwerte {
    std::vector<Char> odds;
    ThetaTable table;
    // [w_i, w_j] for the canonical odd ordering
    Cplx bracket(int i, int j) const {
        return jacobian_nullwerte_from_table(table, {odds[static_cast<size_t>(i)], odds[static_cast<size_t>(j)]});
    }
};

G2Nullwerte g2_nullwerte(const RiemannMatrix& Z, const Real& eps) {
    if (Z.g != 2) throw BadInputError("genus-2 pipeline needs a 2x2 matrix");
    return G2Nullwerte{odd_characteristics(2), theta_table(Z, eps, true)};
}

}  // namespace

SymmetricModel genus2_symmetric_from_Z(const RiemannMatrix& Z, const Real& eps, const Real& tol) {
    G2Nullwerte nw = g2_nullwerte(Z, eps);
    Real scale(0);
    for (int j = 2; j < 6; ++j) scale = std::max(scale, abs(nw.bracket(0, j)));
    std::vector<Cplx> roots;
    for (int j = 2; j < 6; ++j) {
        Cplx num = nw.bracket(0, j);
        Cplx den = nw.bracket(1, j);
        if (abs(den) <= scale * digits_eps(12))
            throw BadInputError("genus2_symmetric_from_Z: degenerate period matrix (vanishing Nullwert)");
        roots.push_back(num / den);
    }
    Cplx prod{Real(1)};
    for (const Cplx& r : roots) prod *= r;
    int sign = abs(prod - Cplx(Real(1))) <= abs(prod + Cplx(Real(1))) ? 1 : -1;
    if (abs(prod - Cplx(Real(sign))) > tol * Real(1000))
        throw NonConvergenceError("genus2_symmetric_from_Z: root product far from +-1");

    SymmetricModel m;
    m.g = 2;
    m.roots = std::move(roots);
    m.linear_sign = sign;
    CPoly poly = m.polynomial();
    for (int d = 4; d >= 2; --d) m.coefficients.push_back(poly.c[static_cast<size_t>(d)]);
    return m;
}

Cplx genus2_discriminant_from_Z(const RiemannMatrix& Z, const Real& eps) {
    G2Nullwerte nw = g2_nullwerte(Z, eps);
    Cplx num = pow_int(nw.bracket(0, 1), 16);
    Cplx den{Real(1)};
    for (int j = 2; j < 6; ++j) den *= nw.bracket(0, j);
    den = pow_int(den, 4);
    if (abs(den) == 0) throw BadInputError("genus2_discriminant_from_Z: vanishing denominator");
    return num / den;
}

G2ThetaRoots genus2_roots_from_thetanullwerte(const RiemannMatrix& Z, const Real& eps, const Real& tol) {
    G2Nullwerte nw = g2_nullwerte(Z, eps);
    const std::vector<Char>& odds = nw.odds;

    SymmetricModel reference = genus2_symmetric_from_Z(Z, eps, tol);

    G2ThetaRoots out;
    std::set<unsigned> used;
    for (int k = 2; k < 6; ++k) {
        // quotient of even Nullwerte over the three odd indices besides 1, 2, k
        Cplx num{Real(1)}, den{Real(1)};
        for (int r = 2; r < 6; ++r) {
            if (r == k) continue;
            Char top = char_add(char_add(odds[0], odds[static_cast<size_t>(k)]), odds[static_cast<size_t>(r)]);
            Char bot = char_add(char_add(odds[1], odds[static_cast<size_t>(k)]), odds[static_cast<size_t>(r)]);
            if (is_odd(top) || is_odd(bot))
                throw NonConvergenceError("genus2_roots_from_thetanullwerte: quotient characteristic not even");
            used.insert(top.index());
            used.insert(bot.index());
            num *= nw.table.val(top);
            den *= nw.table.val(bot);
            out.theta_evaluations += 2;
        }
        if (abs(den) == 0) throw BadInputError("genus2_roots_from_thetanullwerte: vanishing even Nullwert");
        Cplx unsigned_root = num / den;
        const Cplx& want = reference.roots[static_cast<size_t>(k - 2)];
        Cplx pick = abs(unsigned_root - want) <= abs(unsigned_root + want) ? unsigned_root : -unsigned_root;
        out.roots.push_back(pick);
    }
    out.distinct_even_count = static_cast<int>(used.size());
    return out;
}

// ---------------------------------------------------------------------------
// genus 3

const Char& Genus3Labeling::at(int i, int j) const {
    if (i < 1 || j < 1 || i > 8 || j > 8 || i == j) throw BadInputError("Genus3Labeling: bad indices");
    int a = std::min(i, j) - 1, b = std::max(i, j) - 1;
    return w[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

HyperellipticityCheck genus3_hyperelliptic_test(const ThetaTable& table, const Real& threshold) {
    Real biggest(0);
    std::vector<Real> mags;
    for (const Char& m : even_characteristics(table.g)) {
        mags.push_back(abs(table.val(m)));
        biggest = std::max(biggest, mags.back());
    }
    HyperellipticityCheck out;
    out.min_even_ratio = Real(1);
    for (const Real& m : mags) {
        Real ratio = m / biggest;
        out.min_even_ratio = std::min(out.min_even_ratio, ratio);
        if (ratio < threshold) ++out.vanishing_evens;
    }
    out.hyperelliptic = out.vanishing_evens == 1;
    return out;
}

Genus3Labeling genus3_label(const RiemannMatrix& Z, const Real& eps, const Real& vanish_threshold) {
    if (Z.g != 3) throw BadInputError("genus3_label: need a 3x3 matrix");
    ThetaTable table = theta_table(Z, eps, false);
    HyperellipticityCheck hc = genus3_hyperelliptic_test(table, vanish_threshold);
    if (hc.vanishing_evens == 0)
        throw HyperellipticityError("genus3_label: no vanishing even Thetanullwert (matrix not hyperelliptic)");
    if (hc.vanishing_evens > 1)
        throw HyperellipticityError("genus3_label: several vanishing even Thetanullwerte (decomposable matrix)");

    std::vector<Char> odds = odd_characteristics(3);
    // first pair whose sum is again odd, canonical order
    int i1 = -1, i2 = -1;
    for (size_t a = 0; a < odds.size() && i1 < 0; ++a)
        for (size_t b = a + 1; b < odds.size(); ++b)
            if (is_odd(char_add(odds[a], odds[b]))) {
                i1 = static_cast<int>(a);
                i2 = static_cast<int>(b);
                break;
            }
    if (i1 < 0) throw HyperellipticityError("genus3_label: no odd pair with odd sum");
    Char w23 = odds[static_cast<size_t>(i1)];
    Char w13 = odds[static_cast<size_t>(i2)];
    Char w12 = char_add(w23, w13);

    // the five remaining odd points w with w13 + w and w12 + w both odd
    std::vector<Char> companions;
    for (const Char& w : odds) {
        if (w == w23 || w == w13 || w == w12) continue;
        if (is_odd(char_add(w13, w)) && is_odd(char_add(w12, w))) companions.push_back(w);
    }
    if (companions.size() != 5)
        throw HyperellipticityError("genus3_label: companion count is not five");

    Genus3Labeling L;
    auto put = [&L](int i, int j, const Char& c) {
        int a = std::min(i, j) - 1, b = std::max(i, j) - 1;
        L.w[static_cast<size_t>(a)][static_cast<size_t>(b)] = c;
    };
    put(2, 3, w23);
    put(1, 3, w13);
    put(1, 2, w12);
    for (int k = 4; k <= 8; ++k) put(1, k, companions[static_cast<size_t>(k - 4)]);
    for (int j = 2; j <= 8; ++j)
        for (int k = j + 1; k <= 8; ++k) {
            if (j == 2 && k == 3) continue;
            put(j, k, char_add(L.at(1, j), L.at(1, k)));
        }

    // sanity: 28 odd distinct labels
    std::set<unsigned> seen;
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            const Char& c = L.at(i, j);
            if (!is_odd(c) || !seen.insert(c.index()).second)
                throw HyperellipticityError("genus3_label: labeling failed parity or distinctness");
        }
    return L;
}

Cplx genus3_mu(const Genus3Labeling& L, const ThetaTable& table, int m, int n, int r, int s, int t) {
    std::array<int, 5> idx{m, n, r, s, t};
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] == idx[b]) throw BadInputError("genus3_mu: indices must be distinct");

    auto bracket = [&](int a, int b, int c, int d, int e, int f) {
        return jacobian_nullwerte_from_table(table, {L.at(a, b), L.at(c, d), L.at(e, f)});
    };
    Cplx n1 = bracket(m, t, t, s, s, n);
    Cplx n2 = bracket(n, t, t, r, r, n);
    Cplx d1 = bracket(m, t, t, r, r, n);
    Cplx d2 = bracket(n, t, t, s, s, n);
    Cplx den = d1 * d2;
    if (abs(den) == 0) throw NonConvergenceError("genus3_mu: vanishing Nullwerte in the denominator");
    return (n1 * n2) / den;
}

Cplx genus3_mu_checked(const Genus3Labeling& L, const ThetaTable& table, int m, int n, int r, int s,
                       const Real& tol) {
    std::vector<int> ts;
    for (int t = 1; t <= 8 && ts.size() < 2; ++t)
        if (t != m && t != n && t != r && t != s) ts.push_back(t);
    Cplx first = genus3_mu(L, table, m, n, r, s, ts[0]);
    Cplx second = genus3_mu(L, table, m, n, r, s, ts[1]);
    if (abs(first - second) > tol * (Real(1) + abs(first)))
        throw NonConvergenceError("genus3_mu: auxiliary-index verification failed");
    return first;
}

SymmetricModel genus3_symmetric_from_Z(const RiemannMatrix& Z, const Real& eps, const Real& tol) {
    Genus3Labeling L = genus3_label(Z, eps);
    ThetaTable table = theta_table(Z, eps, true);

    std::map<int, Cplx> mu123;  // k -> mu_{123k}
    for (int k = 4; k <= 8; ++k) mu123[k] = genus3_mu_checked(L, table, 1, 2, 3, k, tol);

    Cplx prod{Real(1)};
    for (const auto& [k, v] : mu123) prod *= v;
    Cplx l123 = nth_root(prod, 6);

    std::vector<Cplx> roots{l123};
    for (int k = 4; k <= 8; ++k) roots.push_back(l123 / mu123[k]);

    Cplx rp{Real(1)};
    for (const Cplx& r : roots) rp *= r;
    int sign = abs(rp - Cplx(Real(1))) <= abs(rp + Cplx(Real(1))) ? 1 : -1;
    if (abs(rp - Cplx(Real(sign))) > tol * Real(1000))
        throw NonConvergenceError("genus3_symmetric_from_Z: root product far from +-1");

    SymmetricModel model;
    model.g = 3;
    model.roots = std::move(roots);
    model.linear_sign = sign;
    CPoly poly = model.polynomial();
    for (int d = 6; d >= 2; --d) model.coefficients.push_back(poly.c[static_cast<size_t>(d)]);
    return model;
}

G3FrobeniusRoot genus3_root123_from_thetanullwerte(const RiemannMatrix& Z, const Real& eps) {
    Genus3Labeling L = genus3_label(Z, eps);
    ThetaTable table = theta_table(Z, eps, false);

    auto even_null = [&](int a, int b, int c, int d) {
        Char ch = char_add(L.at(a, b), L.at(c, d));
        if (is_odd(ch)) throw NonConvergenceError("genus3_root123: quotient characteristic not even");
        return std::make_pair(ch, table.val(ch));
    };

    struct Item {
        int a, b, c, d, power;
    };
    const Item numer[] = {{1, 3, 4, 5, 3}, {1, 3, 4, 6, 1}, {1, 3, 6, 7, 1},
                          {1, 3, 6, 8, 1}, {1, 4, 5, 6, 3}, {1, 4, 7, 8, 5}};
    const Item denom[] = {{1, 3, 5, 6, 5}, {1, 3, 7, 8, 3}, {1, 4, 5, 7, 1},
                          {1, 4, 5, 8, 1}, {1, 5, 7, 8, 1}, {1, 6, 7, 8, 3}};

    G3FrobeniusRoot out;
    Cplx num{Real(1)}, den{Real(1)};
    for (const Item& it : numer) {
        auto [ch, v] = even_null(it.a, it.b, it.c, it.d);
        out.even_chars_used.insert(ch.index());
        num *= pow_int(v, it.power);
    }
    for (const Item& it : denom) {
        auto [ch, v] = even_null(it.a, it.b, it.c, it.d);
        out.even_chars_used.insert(ch.index());
        den *= pow_int(v, it.power);
    }
    if (abs(den) == 0) throw NonConvergenceError("genus3_root123: vanishing even Nullwerte");
    out.sixth_power = num / den;
    out.value = nth_root(out.sixth_power, 6);
    return out;
}

// ---------------------------------------------------------------------------
// cross-ratio multisets

std::vector<Cplx> mu_multiset(const BranchSet& B) {
    std::vector<Cplx> vals;
    int n = B.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    if (i == j || i == r || i == s || j == r || j == s || r == s) continue;
                    vals.push_back(mu_invariant(B, i, j, r, s));
                }
    std::sort(vals.begin(), vals.end(), [](const Cplx& a, const Cplx& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return vals;
}

Real mu_multiset_distance(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
    if (a.size() != b.size()) throw BadInputError("mu_multiset_distance: size mismatch");
    Real worst(0);
    for (size_t i = 0; i < a.size(); ++i) {
        Real d = abs(a[i] - b[i]) / (Real(1) + abs(a[i]));
        worst = std::max(worst, d);
    }
    return worst;
}

}  // namespace hypell
