#include "hypell/symmetric.hpp"

#include <algorithm>

namespace hypell {

BranchSet::BranchSet(int genus, std::vector<PValue> pts) : g(genus), points(std::move(pts)) {
    if (g < 1 || static_cast<int>(points.size()) != 2 * g + 2)
        throw BadInputError("BranchSet: need exactly 2g+2 points");
    int inf_count = 0;
    for (const PValue& p : points) inf_count += p.is_inf() ? 1 : 0;
    if (inf_count > 1) throw BadInputError("BranchSet: at most one point at infinity");
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b) {
            if (points[a].is_inf() || points[b].is_inf()) continue;
            if (points[a].z == points[b].z) throw BadInputError("BranchSet: repeated branch point");
        }
}

BranchSet BranchSet::from_reals(const std::vector<Real>& finite, bool with_infinity) {
    std::vector<PValue> pts;
    pts.reserve(finite.size() + (with_infinity ? 1 : 0));
    for (const Real& x : finite) pts.emplace_back(Cplx(x));
    if (with_infinity) pts.push_back(PValue::infinity());
    int n = static_cast<int>(pts.size());
    if (n % 2 != 0 || n < 4) throw BadInputError("BranchSet: point count must be even and >= 4");
    return BranchSet((n - 2) / 2, std::move(pts));
}

bool BranchSet::has_infinity() const { return infinity_index() >= 0; }

int BranchSet::infinity_index() const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].is_inf()) return static_cast<int>(i);
    return -1;
}

CPoly SymmetricModel::polynomial() const {
    std::vector<Cplx> all = roots;
    all.emplace_back(Real(0));
    return CPoly::from_roots(all);
}

BranchSet SymmetricModel::branch_set() const {
    std::vector<PValue> pts;
    pts.emplace_back(Cplx(Real(0)));
    for (const Cplx& r : roots) pts.emplace_back(r);
    pts.push_back(PValue::infinity());
    return BranchSet(g, std::move(pts));
}

Cplx branch_diff(const BranchSet& B, int i, int k) {
    const PValue& a = B.points[static_cast<size_t>(i)];
    const PValue& b = B.points[static_cast<size_t>(k)];
    if (a.is_inf() || b.is_inf()) return Cplx(Real(1));
    return a.z - b.z;
}

Cplx branch_derivative(const BranchSet& B, int i) {
    Cplx acc{Real(1)};
    for (int k = 0; k < B.size(); ++k)
        if (k != i) acc *= branch_diff(B, i, k);
    return acc;
}

static void check_pair(const BranchSet& B, int i, int j, int t) {
    if (i < 0 || j < 0 || i >= B.size() || j >= B.size())
        throw BadInputError("branch index out of range");
    if (i == j) throw BadInputError("symmetric invariants need i != j");
    if (t < 1 || t > 4 * B.g) throw BadInputError("root-of-unity index out of range");
}

Cplx symmetric_ratio(const BranchSet& B, int i, int j, int t) {
    check_pair(B, i, j, t);
    Cplx ratio = -(branch_derivative(B, j) / branch_derivative(B, i));
    Cplx principal = nth_root(ratio, static_cast<unsigned>(2 * B.g));
    return root_of_unity(t, 4 * B.g) * principal;
}

std::vector<Cplx> symmetric_roots(const BranchSet& B, int i, int j, int t) {
    Cplx p = symmetric_ratio(B, i, j, t);
    std::vector<Cplx> out;
    out.reserve(static_cast<size_t>(2 * B.g));
    for (int k = 0; k < B.size(); ++k) {
        if (k == i || k == j) continue;
        out.push_back(p * branch_diff(B, i, k) / branch_diff(B, j, k));
    }
    return out;
}

SymmetricModel symmetric_model(const BranchSet& B, int i, int j, int t, const Real& tol) {
    std::vector<Cplx> roots = symmetric_roots(B, i, j, t);
    Cplx prod{Real(1)};
    for (const Cplx& r : roots) prod *= r;
    int sign = abs(prod - Cplx(Real(1))) <= abs(prod + Cplx(Real(1))) ? 1 : -1;
    if (abs(prod - Cplx(Real(sign))) > tol * Real(10))
        throw NonConvergenceError("symmetric_model: product of roots is not near +-1");

    SymmetricModel m;
    m.g = B.g;
    m.roots = roots;
    m.linear_sign = sign;
    CPoly poly = m.polynomial();
    // G_1 ... G_{2g-1} are the coefficients of X^{2g} down to X^2
    for (int d = 2 * B.g; d >= 2; --d) m.coefficients.push_back(poly.c[static_cast<size_t>(d)]);
    return m;
}

Cplx symmetric_discriminant(const BranchSet& B, int i, int j, int t) {
    std::vector<Cplx> l = symmetric_roots(B, i, j, t);
    Cplx acc{Real(1)};
    for (size_t r = 0; r < l.size(); ++r)
        for (size_t s = r + 1; s < l.size(); ++s) {
            Cplx d = l[r] - l[s];
            acc *= d * d;
        }
    return acc;
}

Cplx model_discriminant(const SymmetricModel& m) {
    Cplx acc{Real(1)};
    for (size_t r = 0; r < m.roots.size(); ++r)
        for (size_t s = r + 1; s < m.roots.size(); ++s) {
            Cplx d = m.roots[r] - m.roots[s];
            acc *= d * d;
        }
    return acc;
}

Cplx symmetric_discriminant_formula(const BranchSet& B, int i, int j) {
    check_pair(B, i, j, 1);
    int g = B.g;
    Cplx diff_pow = pow_int(branch_diff(B, i, j), 2L * g * (2 * g + 1));
    Cplx disc{Real(1)};
    for (int r = 0; r < B.size(); ++r)
        for (int s = r + 1; s < B.size(); ++s) {
            Cplx d = branch_diff(B, r, s);
            disc *= d * d;
        }
    Cplx fi = pow_int(branch_derivative(B, i), 2L * g + 1);
    Cplx fj = pow_int(branch_derivative(B, j), 2L * g + 1);
    return diff_pow * disc / (fi * fj);
}

// ---------------------------------------------------------------------------
// exact branch data

RationalBranchSet::RationalBranchSet(int genus, std::vector<Rat> pts, bool inf)
    : g(genus), finite(std::move(pts)), with_infinity(inf) {
    if (static_cast<int>(finite.size()) + (with_infinity ? 1 : 0) != 2 * g + 2)
        throw BadInputError("RationalBranchSet: need 2g+2 points");
    for (size_t a = 0; a < finite.size(); ++a)
        for (size_t b = a + 1; b < finite.size(); ++b)
            if (finite[a] == finite[b]) throw BadInputError("RationalBranchSet: repeated point");
}

BranchSet RationalBranchSet::to_numeric() const {
    std::vector<PValue> pts;
    for (const Rat& q : finite) pts.emplace_back(Cplx(rat_to_real(q)));
    if (with_infinity) pts.push_back(PValue::infinity());
    return BranchSet(g, std::move(pts));
}

QPoly RationalBranchSet::poly() const { return QPoly::from_roots(finite); }

namespace {

// alpha_i - alpha_k over the rationals, infinity index = finite.size()
Rat rdiff(const RationalBranchSet& B, int i, int k) {
    int fin = static_cast<int>(B.finite.size());
    if (i >= fin || k >= fin) return Rat(1);
    return B.finite[static_cast<size_t>(i)] - B.finite[static_cast<size_t>(k)];
}

Rat rderiv(const RationalBranchSet& B, int i) {
    Rat acc(1);
    for (int k = 0; k < B.size(); ++k)
        if (k != i) acc *= rdiff(B, i, k);
    return acc;
}

}  // namespace

Rat symmetric_discriminant_exact(const RationalBranchSet& B, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= B.size() || j >= B.size())
        throw BadInputError("symmetric_discriminant_exact: bad indices");
    int g = B.g;
    // p^{2g} = +- f'(alpha_j)/f'(alpha_i); the sign ambiguity is the zeta twist
    Rat p2g = -rderiv(B, j) / rderiv(B, i);
    Rat acc = rat_pow(p2g, 2 * g - 1);
    std::vector<Rat> ratio;
    std::vector<bool> ratio_inf;
    for (int k = 0; k < B.size(); ++k) {
        if (k == i || k == j) continue;
        ratio.push_back(rdiff(B, i, k) / rdiff(B, j, k));
    }
    for (size_t r = 0; r < ratio.size(); ++r)
        for (size_t s = r + 1; s < ratio.size(); ++s) {
            Rat d = ratio[r] - ratio[s];
            acc *= d * d;
        }
    return acc;
}

Cplx mu_invariant(const BranchSet& B, int i, int j, int r, int s) {
    std::array<int, 4> idx{i, j, r, s};
    for (size_t a = 0; a < 4; ++a) {
        if (idx[a] < 0 || idx[a] >= B.size()) throw BadInputError("mu_invariant: index out of range");
        for (size_t b = a + 1; b < 4; ++b)
            if (idx[a] == idx[b]) throw BadInputError("mu_invariant: repeated index");
    }
    return branch_diff(B, i, r) * branch_diff(B, j, s) / (branch_diff(B, i, s) * branch_diff(B, j, r));
}

Rat mu_invariant_exact(const RationalBranchSet& B, int i, int j, int r, int s) {
    return rdiff(B, i, r) * rdiff(B, j, s) / (rdiff(B, i, s) * rdiff(B, j, r));
}

// ---------------------------------------------------------------------------
// mu families

MuFamily MuFamily::from_branch_set(const BranchSet& B, int i, int j) {
    MuFamily fam;
    fam.g = B.g;
    fam.i = i;
    fam.j = j;
    for (int k = 0; k < B.size(); ++k)
        if (k != i && k != j) fam.universe.push_back(k);
    for (int r : fam.universe)
        for (int s : fam.universe)
            if (r != s) fam.mu[{r, s}] = mu_invariant(B, i, j, r, s);
    return fam;
}

const Cplx& MuFamily::at(int r, int s) const {
    auto it = mu.find({r, s});
    if (it == mu.end()) throw BadInputError("MuFamily: missing entry");
    return it->second;
}

SymmetricModel symmetric_model_from_mu(const MuFamily& fam, int g, const Real& tol) {
    if (fam.g != g) throw BadInputError("symmetric_model_from_mu: genus mismatch");
    if (static_cast<int>(fam.universe.size()) != 2 * g)
        throw BadInputError("symmetric_model_from_mu: universe must have 2g indices");

    // coherence: mu_{ij rs} must equal mu_{ij r k0} / mu_{ij s k0}
    int k0 = fam.universe.front();
    for (int r : fam.universe)
        for (int s : fam.universe) {
            if (r == s) continue;
            Cplx lhs = fam.at(r, s);
            Cplx rhs;
            if (r == k0)
                rhs = Cplx(Real(1)) / fam.at(s, k0);
            else if (s == k0)
                rhs = fam.at(r, k0);
            else
                rhs = fam.at(r, k0) / fam.at(s, k0);
            if (abs(lhs - rhs) > tol * (Real(1) + abs(lhs)))
                throw BadInputError("symmetric_model_from_mu: incoherent family");
        }

    // pivot root: l_{ij k0}^{4g} = prod_{r != k0} mu_{ij k0 r}^2
    Cplx pow4g{Real(1)};
    for (int r : fam.universe)
        if (r != k0) {
            Cplx m = fam.at(k0, r);
            pow4g *= m * m;
        }
    Cplx pivot = nth_root(pow4g, static_cast<unsigned>(4 * g));

    std::vector<Cplx> roots;
    for (int r : fam.universe) {
        if (r == k0)
            roots.push_back(pivot);
        else
            roots.push_back(fam.at(r, k0) * pivot);
    }

    Cplx prod{Real(1)};
    for (const Cplx& r : roots) prod *= r;
    int sign = abs(prod - Cplx(Real(1))) <= abs(prod + Cplx(Real(1))) ? 1 : -1;
    if (abs(prod - Cplx(Real(sign))) > tol * Real(100))
        throw BadInputError("symmetric_model_from_mu: root product far from +-1");

    SymmetricModel m;
    m.g = g;
    m.roots = std::move(roots);
    m.linear_sign = sign;
    CPoly poly = m.polynomial();
    for (int d = 2 * g; d >= 2; --d) m.coefficients.push_back(poly.c[static_cast<size_t>(d)]);
    return m;
}

std::set<Int> bad_reduction_locus_odd(const RationalBranchSet& B) {
    std::set<Int> primes;
    for (int i = 0; i < B.size(); ++i)
        for (int j = i + 1; j < B.size(); ++j) {
            Rat d = symmetric_discriminant_exact(B, i, j);
            if (d == 0) throw BadInputError("bad_reduction_locus_odd: singular configuration");
            for (const Int& p : denominator_primes(d)) primes.insert(p);
        }
    return primes;
}

}  // namespace hypell
