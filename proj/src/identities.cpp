#include "hypell/identities.hpp"

#include <algorithm>
#include <sstream>

namespace hypell {

Real relative_residual(const Cplx& lhs, const Cplx& rhs) {
    Real floor_val("1e-300");
    Real denom = std::max(std::max(abs(lhs), abs(rhs)), floor_val);
    return abs(lhs - rhs) / denom;
}

namespace {

std::string labels_to_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << v[i] + 1 << (i + 1 < v.size() ? "," : "");
    os << "}";
    return os.str();
}

void require_distinct(const std::vector<int>& labels, int n) {
    std::set<int> seen;
    for (int l : labels) {
        if (l < 0 || l >= n) throw BadInputError("partition label out of range");
        if (!seen.insert(l).second) throw BadInputError("partition reuses a point");
    }
}

// branch value by label; last label is infinity when present
bool label_is_infinite(const PeriodData& P, int label) {
    return P.with_infinity && label == 2 * P.g + 1;
}

Real label_value(const PeriodData& P, int label) {
    return P.sorted_branch[static_cast<size_t>(label)];
}

// product of squared differences over the finite members of a label set
Cplx discriminant_over(const PeriodData& P, const std::vector<int>& labels) {
    std::vector<Real> pts;
    for (int l : labels)
        if (!label_is_infinite(P, l)) pts.push_back(label_value(P, l));
    Cplx acc{Real(1)};
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b) {
            Real d = pts[a] - pts[b];
            acc *= Cplx(d * d);
        }
    return acc;
}

std::vector<int> complement_labels(const PeriodData& P, const std::vector<int>& labels) {
    std::set<int> in(labels.begin(), labels.end());
    std::vector<int> out;
    for (int l = 0; l < 2 * P.g + 2; ++l)
        if (!in.count(l)) out.push_back(l);
    return out;
}

// row vector of coefficients of prod (X - alpha) over the finite members,
// lowest degree first, zero-padded to length g
CVec partition_row(const PeriodData& P, const std::vector<int>& labels) {
    std::vector<Cplx> roots;
    for (int l : labels)
        if (!label_is_infinite(P, l)) roots.push_back(Cplx(label_value(P, l)));
    CPoly f = CPoly::from_roots(roots);
    CVec row(static_cast<size_t>(P.g), Cplx());
    for (size_t i = 0; i < f.c.size() && i < row.size(); ++i) row[i] = f.c[i];
    return row;
}

Cplx eval_over(const PeriodData& P, const std::vector<int>& labels, const Real& x) {
    Cplx acc{Real(1)};
    for (int l : labels) {
        if (label_is_infinite(P, l)) continue;
        acc *= Cplx(x - label_value(P, l));
    }
    return acc;
}

Cplx proportionality(const CVec& target, const CVec& base) {
    // least-squares complex scalar lambda with target ~ lambda * base
    Cplx num, den;
    for (size_t i = 0; i < target.size(); ++i) {
        num += target[i] * base[i].conj();
        den += base[i] * base[i].conj();
    }
    return num / den;
}

Real direction_residual(const CVec& a, const CVec& b) {
    Cplx lam = proportionality(a, b);
    Real num(0), den(0);
    for (size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, abs(a[i] - lam * b[i]));
        den = std::max(den, abs(a[i]));
    }
    return num / std::max(den, Real("1e-300"));
}

}  // namespace

// ---------------------------------------------------------------------------
// Thomae family

IdentityReport check_thomae_even(const PeriodData& P, const CharacteristicDictionary& D,
                                 const std::vector<int>& part, const Real& eps, const Real& tol) {
    int g = P.g;
    if (static_cast<int>(part.size()) != g + 1)
        throw BadInputError("check_thomae_even: partition must have g+1 labels");
    require_distinct(part, 2 * g + 2);

    Char we = D.pi_image(part);
    if (is_odd(we)) throw BadInputError("check_thomae_even: image characteristic is odd");

    Cplx theta = thetanull(we, P.Z, eps);
    Cplx lhs = pow_int(theta, 8);

    std::vector<int> comp = complement_labels(P, part);
    Cplx d1 = discriminant_over(P, part);
    Cplx d2 = discriminant_over(P, comp);
    Cplx det1 = mat_det(P.Omega1);
    Real two_pi = 2 * const_pi();
    Cplx rhs = pow_int(Cplx(two_pi), -4 * g) * pow_int(det1, 4) * d1 * d2;

    IdentityReport rep;
    rep.identity = "thomae_even";
    rep.params = labels_to_string(part);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = relative_residual(lhs, rhs);
    rep.tolerance = tol;
    rep.passed = rep.residual < tol;
    return rep;
}

IdentityReport check_thomae_jacobian(const PeriodData& P, const CharacteristicDictionary& D,
                                     const std::vector<int>& part, const Real& eps, const Real& tol) {
    int g = P.g;
    if (static_cast<int>(part.size()) != g - 1)
        throw BadInputError("check_thomae_jacobian: partition must have g-1 labels");
    require_distinct(part, 2 * g + 2);

    Char wo = D.pi_image(part);
    if (!is_odd(wo)) throw BadInputError("check_thomae_jacobian: image characteristic is even");

    CVec grad = theta_gradient0(wo, P.Z, eps);
    CVec srow = partition_row(P, part);
    CVec v = vec_mat(srow, P.Omega1);

    Real dir = direction_residual(grad, v);

    std::vector<int> comp = complement_labels(P, part);
    Cplx d1 = discriminant_over(P, part);
    Cplx d2 = discriminant_over(P, comp);
    Cplx det1 = mat_det(P.Omega1);

    // pick the largest right-hand component for the magnitude comparison
    size_t kmax = 0;
    for (size_t k = 1; k < v.size(); ++k)
        if (abs(v[k]) > abs(v[kmax])) kmax = k;

    Real two_pi = 2 * const_pi();
    Cplx lhs = pow_int(Cplx(Real(2)), 8) * pow_int(Cplx(two_pi), 4 * g) * pow_int(grad[kmax], 8);
    Cplx rhs = d1 * d2 * pow_int(det1, 4) * pow_int(v[kmax], 8);

    IdentityReport rep;
    rep.identity = "thomae_jacobian";
    rep.params = labels_to_string(part);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = relative_residual(lhs, rhs);
    rep.aux_residual = dir;
    rep.tolerance = tol;
    rep.passed = rep.residual < tol && dir < tol;
    return rep;
}

IdentityReport check_thomae_quotient(const PeriodData& P, const CharacteristicDictionary& D,
                                     const std::vector<int>& odd_part, const std::vector<int>& even_part,
                                     const Real& eps, const Real& tol) {
    int g = P.g;
    if (static_cast<int>(odd_part.size()) != g - 1 || static_cast<int>(even_part.size()) != g + 1)
        throw BadInputError("check_thomae_quotient: partition sizes must be g-1 and g+1");
    require_distinct(odd_part, 2 * g + 2);
    require_distinct(even_part, 2 * g + 2);
    std::set<int> odd_set(odd_part.begin(), odd_part.end());
    std::vector<int> gammas;
    for (int l : even_part)
        if (!odd_set.count(l)) gammas.push_back(l);
    if (gammas.size() != 2)
        throw BadInputError("check_thomae_quotient: even partition must extend the odd one by two points");

    Char wo = D.pi_image(odd_part);
    Char we = D.pi_image(even_part);
    if (!is_odd(wo) || is_odd(we)) throw BadInputError("check_thomae_quotient: parity mismatch");

    CVec grad = theta_gradient0(wo, P.Z, eps);
    Cplx theta_e = thetanull(we, P.Z, eps);
    CVec srow = partition_row(P, odd_part);
    CVec v = vec_mat(srow, P.Omega1);

    size_t kmax = 0;
    for (size_t k = 1; k < v.size(); ++k)
        if (abs(v[k]) > abs(v[kmax])) kmax = k;

    Cplx q = Real(2) * grad[kmax] / theta_e;

    // eighth-root form
    std::vector<int> odd_comp = complement_labels(P, odd_part);
    std::vector<int> even_comp = complement_labels(P, even_part);
    Cplx f1 = discriminant_over(P, odd_part), f2 = discriminant_over(P, odd_comp);
    Cplx g1 = discriminant_over(P, even_part), g2 = discriminant_over(P, even_comp);
    Cplx lhs8 = pow_int(q, 8);
    Cplx rhs8 = (f1 * f2 / (g1 * g2)) * pow_int(v[kmax], 8);

    // fourth-root simplification over the two extending points
    Cplx num4{Real(1)}, den4{Real(1)};
    for (int gl : gammas) {
        if (label_is_infinite(P, gl)) continue;
        Real x = label_value(P, gl);
        num4 *= eval_over(P, even_comp, x);
        den4 *= eval_over(P, odd_part, x);
    }
    Cplx lhs4 = pow_int(q, 4);
    Cplx rhs4 = (num4 / den4) * pow_int(v[kmax], 4);

    IdentityReport rep;
    rep.identity = "thomae_quotient";
    rep.params = labels_to_string(odd_part) + "|" + labels_to_string(even_part);
    rep.lhs = lhs8;
    rep.rhs = rhs8;
    rep.residual = relative_residual(lhs8, rhs8);
    // the quartic root carries an unresolved sign; compare without it
    Real res4 = std::min(relative_residual(lhs4, rhs4), relative_residual(lhs4, -rhs4));
    // mutual consistency of the two forms
    Real cons = relative_residual(rhs4 * rhs4, rhs8);
    rep.aux_residual = std::max(res4, cons);
    rep.tolerance = tol;
    rep.passed = rep.residual < tol && res4 < tol && cons < tol * Real(100);
    return rep;
}

// ---------------------------------------------------------------------------
// pure-Z identities

IdentityReport check_rosenhain(const RiemannMatrix& Z, int odd_index_1, int odd_index_2,
                               const Real& eps, const Real& tol) {
    if (Z.g != 2) throw BadInputError("check_rosenhain: genus 2 only");
    std::vector<Char> odds = odd_characteristics(2);
    if (odd_index_1 == odd_index_2) throw BadInputError("check_rosenhain: need distinct indices");
    const Char& m1 = odds[static_cast<size_t>(odd_index_1)];
    const Char& m2 = odds[static_cast<size_t>(odd_index_2)];

    ThetaTable table = theta_table(Z, eps, true);
    Cplx lhs = jacobian_nullwerte_from_table(table, {m1, m2});
    Cplx rhs{Real(1)};
    for (const Char& m : odds) {
        if (m == m1 || m == m2) continue;
        Char c = char_add(char_add(m1, m2), m);
        rhs *= table.val(c);
    }
    rhs = pow_int(Cplx(const_pi()), 2) * rhs;

    IdentityReport rep;
    rep.identity = "rosenhain";
    rep.params = labels_to_string({odd_index_1, odd_index_2});
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = relative_residual(Cplx(abs(lhs)), Cplx(abs(rhs)));
    // the ratio should be +-1; report its distance to the nearest sign
    Cplx ratio = lhs / rhs;
    Real sgn_dist = std::min(abs(ratio - Cplx(Real(1))), abs(ratio + Cplx(Real(1))));
    rep.aux_residual = sgn_dist;
    rep.tolerance = tol;
    rep.passed = rep.residual < tol && sgn_dist < tol * Real(100);
    return rep;
}

IdentityReport check_frobenius_g3(const PeriodData& P, const CharacteristicDictionary& D, int i,
                                  int j, int k, const Real& eps, const Real& tol,
                                  const ThetaTable* shared) {
    if (P.g != 3) throw BadInputError("check_frobenius_g3: genus 3 only");
    if (i == j || j == k || i == k) throw BadInputError("check_frobenius_g3: indices must be distinct");

    ThetaTable local;
    if (!shared) local = theta_table(P.Z, eps, true);
    const ThetaTable& table = shared ? *shared : local;
    Char wik = D.odd_image_g3(i, k), wij = D.odd_image_g3(i, j), wjk = D.odd_image_g3(j, k);
    Cplx lhs = jacobian_nullwerte_from_table(table, {wik, wij, wjk});

    Cplx rhs{Real(1)};
    for (int r = 0; r < 8; ++r) {
        if (r == i || r == j || r == k) continue;
        Char w = D.pi_image({i, j, k, r});
        if (is_odd(w)) throw BadInputError("check_frobenius_g3: constructed characteristic is odd");
        rhs *= table.val(w);
    }
    rhs = pow_int(Cplx(const_pi()), 3) * rhs;

    IdentityReport rep;
    rep.identity = "frobenius_g3";
    rep.params = labels_to_string({i, j, k});
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = relative_residual(Cplx(abs(lhs)), Cplx(abs(rhs)));
    Cplx ratio = lhs / rhs;
    rep.aux_residual = std::min(abs(ratio - Cplx(Real(1))), abs(ratio + Cplx(Real(1))));
    rep.tolerance = tol;
    rep.passed = rep.residual < tol;
    return rep;
}

IdentityReport check_igusa_product(const PeriodData& P, const CharacteristicDictionary& D,
                                   const std::vector<int>& labels, const Real& eps, const Real& tol,
                                   const ThetaTable* shared) {
    int g = P.g;
    if (static_cast<int>(labels.size()) != g)
        throw BadInputError("check_igusa_product: need g labels");
    require_distinct(labels, 2 * g + 2);

    // odd members: images of D - W_i; even members: images of D + W_i
    std::vector<Char> sequence;
    for (int i : labels) {
        std::vector<int> d;
        for (int l : labels)
            if (l != i) d.push_back(l);
        sequence.push_back(D.pi_image(d));
    }
    std::vector<int> comp = complement_labels(P, labels);
    for (int i : comp) {
        std::vector<int> d = labels;
        d.push_back(i);
        sequence.push_back(D.pi_image(d));
    }

    for (int idx = 0; idx < g; ++idx)
        if (!is_odd(sequence[static_cast<size_t>(idx)]))
            throw BadInputError("check_igusa_product: leading members must be odd");
    for (size_t idx = static_cast<size_t>(g); idx < sequence.size(); ++idx)
        if (is_odd(sequence[idx])) throw BadInputError("check_igusa_product: trailing members must be even");
    if (!azygetic_sequence(sequence))
        throw BadInputError("check_igusa_product: constructed sequence is not azygetic");

    ThetaTable local;
    if (!shared) local = theta_table(P.Z, eps, true);
    const ThetaTable& table = shared ? *shared : local;
    std::vector<Char> odd_part(sequence.begin(), sequence.begin() + g);
    Cplx lhs = jacobian_nullwerte_from_table(table, odd_part);
    Cplx rhs{Real(1)};
    for (size_t idx = static_cast<size_t>(g); idx < sequence.size(); ++idx) rhs *= table.val(sequence[idx]);
    rhs = pow_int(Cplx(const_pi()), g) * rhs;

    IdentityReport rep;
    rep.identity = "igusa_product";
    rep.params = labels_to_string(labels);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = relative_residual(Cplx(abs(lhs)), Cplx(abs(rhs)));
    rep.tolerance = tol;
    rep.passed = rep.residual < tol;
    return rep;
}

IdentityReport check_jacobi_g1(const Cplx& tau, const Real& eps, const Real& tol) {
    CMat zm(1);
    zm(0, 0) = tau;
    RiemannMatrix Z(1, zm, Real("1e-30"));

    // classical theta_1 is minus the characteristic translate at (1/2, 1/2)
    CVec grad = theta_gradient0(Char(1, 1, 1), Z, eps);
    Cplx theta1_prime = -grad[0];
    Cplx t2 = thetanull(Char(1, 1, 0), Z, eps);
    Cplx t3 = thetanull(Char(1, 0, 0), Z, eps);
    Cplx t4 = thetanull(Char(1, 0, 1), Z, eps);
    Cplx rhs = Cplx(const_pi()) * t2 * t3 * t4;

    IdentityReport rep;
    rep.identity = "jacobi_g1";
    std::ostringstream os;
    os << "tau=" << real_to_string(tau.re, 6) << "+" << real_to_string(tau.im, 6) << "i";
    rep.params = os.str();
    rep.lhs = theta1_prime;
    rep.rhs = rhs;
    rep.residual = relative_residual(theta1_prime, rhs);
    rep.tolerance = tol;
    rep.passed = rep.residual < tol;
    return rep;
}

IdentityReport check_eighth_power_rationality(const RationalBranchSet& B, const PeriodData& P,
                                              const CharacteristicDictionary& D,
                                              const std::vector<std::vector<int>>& odd_parts,
                                              const std::vector<std::vector<int>>& even_parts,
                                              const Real& eps, const Real& tol) {
    int g = P.g;
    if (static_cast<int>(odd_parts.size()) != g || static_cast<int>(even_parts.size()) != g)
        throw BadInputError("check_eighth_power_rationality: need g odd and g even partitions");

    ThetaTable table = theta_table(P.Z, eps, true);

    std::vector<Char> odd_chars;
    CMat srows(g);
    for (int i = 0; i < g; ++i) {
        const std::vector<int>& part = odd_parts[static_cast<size_t>(i)];
        if (static_cast<int>(part.size()) != g - 1)
            throw BadInputError("check_eighth_power_rationality: odd partition size");
        Char w = D.pi_image(part);
        if (!is_odd(w)) throw BadInputError("check_eighth_power_rationality: odd image expected");
        odd_chars.push_back(w);
        CVec row = partition_row(P, part);
        for (int j = 0; j < g; ++j) srows(i, j) = row[static_cast<size_t>(j)];
    }

    Cplx numer = jacobian_nullwerte_from_table(table, odd_chars);
    Cplx denom{Real(1)};
    for (const auto& part : even_parts) {
        if (static_cast<int>(part.size()) != g + 1)
            throw BadInputError("check_eighth_power_rationality: even partition size");
        Char w = D.pi_image(part);
        if (is_odd(w)) throw BadInputError("check_eighth_power_rationality: even image expected");
        denom *= table.val(w);
    }
    Cplx det1 = mat_det(P.Omega1);
    Cplx value = numer / (pow_int(Cplx(const_pi()), g) * det1 * denom);
    Cplx lhs = pow_int(value, 8);

    // assembled from the branch points: (2 pi)^{-8g} det(S)^8 prod dF / prod dG
    int fin = static_cast<int>(B.finite.size());
    auto disc_subset = [&](const std::vector<int>& labels) {
        Rat acc(1);
        for (size_t a = 0; a < labels.size(); ++a)
            for (size_t b = a + 1; b < labels.size(); ++b) {
                int la = labels[a], lb = labels[b];
                if (la >= fin || lb >= fin) continue;
                Rat d = B.finite[static_cast<size_t>(la)] - B.finite[static_cast<size_t>(lb)];
                acc *= d * d;
            }
        return acc;
    };
    auto complement = [&](const std::vector<int>& labels) {
        std::set<int> in(labels.begin(), labels.end());
        std::vector<int> out;
        for (int l = 0; l < 2 * g + 2; ++l)
            if (!in.count(l)) out.push_back(l);
        return out;
    };

    Rat ratio(1);
    for (const auto& part : odd_parts) ratio *= disc_subset(part) * disc_subset(complement(part));
    for (const auto& part : even_parts) {
        Rat dd = disc_subset(part) * disc_subset(complement(part));
        if (dd == 0) throw BadInputError("check_eighth_power_rationality: singular even partition");
        ratio /= dd;
    }

    // det of the coefficient rows, exact
    Rat dets(1);
    {
        // rows are polynomials with rational coefficients; reuse the numeric
        // rows (they came from exact branch points) but compute exactly here
        std::vector<std::vector<Rat>> rows;
        for (const auto& part : odd_parts) {
            std::vector<Rat> roots;
            for (int l : part)
                if (l < fin) roots.push_back(B.finite[static_cast<size_t>(l)]);
            QPoly f = QPoly::from_roots(roots);
            std::vector<Rat> row(static_cast<size_t>(g), Rat(0));
            for (size_t i = 0; i < f.c.size() && i < row.size(); ++i) row[i] = f.c[i];
            rows.push_back(row);
        }
        // exact determinant by fraction-free elimination
        std::vector<std::vector<Rat>> m = rows;
        Rat det(1);
        for (int col = 0; col < g; ++col) {
            int piv = -1;
            for (int r = col; r < g; ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
                det = -det;
            }
            Rat pv = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
            det *= pv;
            for (int r = col + 1; r < g; ++r) {
                Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
                for (int cc = col; cc < g; ++cc)
                    m[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * m[static_cast<size_t>(col)][static_cast<size_t>(cc)];
            }
        }
        dets = det;
    }

    Rat rational_part = rat_pow(dets, 8) * ratio;
    Real two_pi = 2 * const_pi();
    Cplx rhs = pow_int(Cplx(two_pi), -8 * g) * Cplx(rat_to_real(rational_part));

    IdentityReport rep;
    rep.identity = "eighth_power_rationality";
    std::ostringstream os;
    os << "rational_part=" << rat_to_string(rational_part);
    rep.params = os.str();
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = relative_residual(lhs, rhs);
    rep.tolerance = tol;
    rep.passed = rep.residual < tol;
    return rep;
}

IdentityReport check_hyperplane(const PeriodData& P, const CharacteristicDictionary& D,
                                const std::vector<int>& divisor, const Real& eps, const Real& tol) {
    int g = P.g;
    if (static_cast<int>(divisor.size()) != g - 1)
        throw BadInputError("check_hyperplane: divisor must have g-1 points");
    require_distinct(divisor, 2 * g + 2);

    Char wo = D.pi_image(divisor);
    if (!is_odd(wo)) throw BadInputError("check_hyperplane: image must be odd");
    CVec grad = theta_gradient0(wo, P.Z, eps);
    CMat inv = mat_inverse(P.Omega1);
    CVec h = vec_mat(grad, inv);

    // canonical coordinates of the divisor points under x^j dx / y
    Real worst(0);
    Real scale(0);
    for (const Cplx& c : h) scale = std::max(scale, abs(c));
    for (int l : divisor) {
        Cplx acc;
        if (label_is_infinite(P, l)) {
            acc = h[static_cast<size_t>(g - 1)];  // the point (0 : ... : 0 : 1)
        } else {
            Real x = label_value(P, l);
            Cplx xp{Real(1)};
            for (int j = 0; j < g; ++j) {
                acc += h[static_cast<size_t>(j)] * xp;
                xp *= Cplx(x);
            }
        }
        Real mag = abs(acc) / std::max(scale, Real("1e-300"));
        worst = std::max(worst, mag);
    }

    IdentityReport rep;
    rep.identity = "hyperplane";
    rep.params = labels_to_string(divisor);
    rep.lhs = Cplx(worst);
    rep.rhs = Cplx(Real(0));
    rep.residual = worst;
    rep.tolerance = tol;
    rep.passed = worst < tol;
    return rep;
}

// ---------------------------------------------------------------------------
// suites

std::vector<Real> test_curve_points(int g) {
    std::vector<Real> pts;
    for (int k = 0; k <= 2 * g; ++k) pts.emplace_back(k);
    return pts;
}

PeriodData test_curve_periods(int g, unsigned digits) {
    BranchSet B = BranchSet::from_reals(test_curve_points(g), true);
    return period_matrix(B, digits);
}

RiemannMatrix random_siegel_h2(SplitMix64& rng) {
    // X random symmetric, Y = L L^T + I/2 positive definite
    CMat Zm(2);
    double x00 = rng.uniform(-1, 1), x01 = rng.uniform(-1, 1), x11 = rng.uniform(-1, 1);
    double l00 = rng.uniform(0.4, 1.5), l10 = rng.uniform(-0.8, 0.8), l11 = rng.uniform(0.4, 1.5);
    double y00 = l00 * l00 + 0.5;
    double y10 = l00 * l10;
    double y11 = l10 * l10 + l11 * l11 + 0.5;
    Zm(0, 0) = Cplx(Real(x00), Real(y00));
    Zm(0, 1) = Zm(1, 0) = Cplx(Real(x01), Real(y10));
    Zm(1, 1) = Cplx(Real(x11), Real(y11));
    return RiemannMatrix(2, Zm, Real("1e-12"));
}

std::vector<IdentityReport> suite_jacobi(const Real& eps, const Real& tol) {
    std::vector<Cplx> taus{Cplx(Real(0), Real(1)), Cplx(Real(1) / 2, Real(2)),
                           Cplx(Real(3) / 10, Real(4) / 5), Cplx(Real(0), Real(2)),
                           Cplx(Real(-1) / 4, Real(3) / 2)};
    std::vector<IdentityReport> out;
    for (const Cplx& tau : taus) out.push_back(check_jacobi_g1(tau, eps, tol));
    return out;
}

std::vector<IdentityReport> suite_rosenhain(std::uint64_t seed, int count, const Real& eps, const Real& tol) {
    SplitMix64 rng(seed);
    std::vector<IdentityReport> out;
    for (int n = 0; n < count; ++n) {
        RiemannMatrix Z = random_siegel_h2(rng);
        int i = static_cast<int>(rng.uniform_int(0, 5));
        int j = static_cast<int>(rng.uniform_int(0, 5));
        if (i == j) j = (j + 1) % 6;
        out.push_back(check_rosenhain(Z, i, j, eps, tol));
    }
    // one full sweep over the 15 pairs on a fixed matrix
    RiemannMatrix Z = random_siegel_h2(rng);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) out.push_back(check_rosenhain(Z, i, j, eps, tol));
    return out;
}

std::vector<IdentityReport> suite_thomae(const Real& eps, const Real& tol, std::uint64_t seed) {
    std::vector<IdentityReport> out;
    unsigned digits = working_digits();
    {
        PeriodData P = test_curve_periods(2, digits);
        CharacteristicDictionary D = characteristic_dictionary(P);
        // all 10 partitions into 3+3 (label 0 pinned to one side)
        for (int a = 1; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                std::vector<int> part{0, a, b};
                out.push_back(check_thomae_even(P, D, part, eps, tol));
            }
        for (int a = 0; a < 6; ++a) out.push_back(check_thomae_jacobian(P, D, {a}, eps, tol));
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                if (b == a) continue;
                for (int c = b + 1; c < 6; ++c) {
                    if (c == a) continue;
                    out.push_back(check_thomae_quotient(P, D, {a}, {a, b, c}, eps, tol));
                }
            }
    }
    {
        PeriodData P = test_curve_periods(3, digits);
        CharacteristicDictionary D = characteristic_dictionary(P);
        SplitMix64 rng(seed);
        for (int n = 0; n < 5; ++n) {
            std::vector<int> labels{0, 1, 2, 3, 4, 5, 6, 7};
            for (size_t i = labels.size() - 1; i > 0; --i)
                std::swap(labels[i], labels[static_cast<size_t>(rng.uniform_int(0, static_cast<long>(i)))]);
            std::vector<int> even_part(labels.begin(), labels.begin() + 4);
            std::vector<int> odd_part(labels.begin(), labels.begin() + 2);
            out.push_back(check_thomae_even(P, D, even_part, eps, tol));
            out.push_back(check_thomae_jacobian(P, D, odd_part, eps, tol));
            std::vector<int> ext = odd_part;
            ext.push_back(labels[2]);
            ext.push_back(labels[3]);
            out.push_back(check_thomae_quotient(P, D, odd_part, ext, eps, tol));
        }
    }
    return out;
}

std::vector<IdentityReport> suite_frobenius(const Real& eps, const Real& tol) {
    PeriodData P = test_curve_periods(3, working_digits());
    CharacteristicDictionary D = characteristic_dictionary(P);
    ThetaTable table = theta_table(P.Z, eps, true);
    std::vector<IdentityReport> out;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k)
                out.push_back(check_frobenius_g3(P, D, i, j, k, eps, tol, &table));
    return out;
}

std::vector<IdentityReport> suite_igusa_product(const Real& eps, const Real& tol) {
    std::vector<IdentityReport> out;
    unsigned digits = working_digits();
    {
        PeriodData P = test_curve_periods(2, digits);
        CharacteristicDictionary D = characteristic_dictionary(P);
        out.push_back(check_igusa_product(P, D, {0, 1}, eps, tol));
        out.push_back(check_igusa_product(P, D, {2, 4}, eps, tol));
    }
    {
        PeriodData P = test_curve_periods(3, digits);
        CharacteristicDictionary D = characteristic_dictionary(P);
        out.push_back(check_igusa_product(P, D, {0, 1, 2}, eps, tol));
        out.push_back(check_igusa_product(P, D, {1, 3, 5}, eps, tol));
    }
    return out;
}

}  // namespace hypell
