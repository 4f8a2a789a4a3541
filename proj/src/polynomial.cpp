#include "hypell/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace hypell {

// ---------------------------------------------------------------------------
// CPoly

CPoly CPoly::from_roots(const std::vector<Cplx>& roots) {
    std::vector<Cplx> c{Cplx(Real(1))};
    for (const Cplx& r : roots) {
        std::vector<Cplx> next(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    CPoly p;
    p.c = std::move(c);
    return p;
}

Cplx CPoly::eval(const Cplx& x) const {
    Cplx acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CPoly CPoly::derivative() const {
    CPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Real(static_cast<int>(i)) * c[i]);
    d.trim();
    return d;
}

Real CPoly::coeff_scale() const {
    Real m(0);
    for (const Cplx& v : c) m = std::max(m, abs(v));
    return m;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
    CPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

CPoly operator-(const CPoly& a, const CPoly& b) {
    CPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return CPoly();
    CPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Cplx());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

CPoly operator*(const Cplx& s, const CPoly& a) {
    CPoly r = a;
    for (Cplx& v : r.c) v *= s;
    r.trim();
    return r;
}

// ---------------------------------------------------------------------------
// root finding

std::vector<Cplx> poly_roots(const CPoly& p_in, const Real& tol) {
    if (p_in.degree() < 1) throw BadInputError("poly_roots: degree must be >= 1");
    CPoly p = p_in;

    // peel off roots at zero
    std::vector<Cplx> roots;
    size_t zero_count = 0;
    while (zero_count < p.c.size() && p.c[zero_count].re == 0 && p.c[zero_count].im == 0) ++zero_count;
    for (size_t i = 0; i < zero_count; ++i) roots.emplace_back(Real(0));
    if (zero_count) p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(zero_count));

    int n = p.degree();
    if (n >= 1) {
        // deterministic start: points on a circle sized by the coefficient bound
        Real lead = abs(p.c.back());
        Real radius(0);
        for (int i = 0; i < n; ++i) {
            Real q = pow(abs(p.c[i]) / lead, Real(1) / Real(n - i));
            if (q > radius) radius = q;
        }
        radius = 2 * radius + Real(1) / 4;
        std::vector<Cplx> z(n);
        Real two_pi = 2 * const_pi();
        for (int k = 0; k < n; ++k) {
            Real th = two_pi * Real(k) / Real(n) + Real(377) / 1000;  // fixed phase offset
            z[k] = Cplx(radius * cos(th), radius * sin(th));
        }

        CPoly dp = p.derivative();
        Real step_target = digits_eps(3);
        int max_iter = 60 + 12 * static_cast<int>(working_digits());
        bool converged = false;
        for (int iter = 0; iter < max_iter && !converged; ++iter) {
            Real worst(0);
            for (int k = 0; k < n; ++k) {
                Cplx pv = p.eval(z[k]);
                Cplx dv = dp.eval(z[k]);
                Cplx w = (dv.re == 0 && dv.im == 0) ? Cplx(Real(1)) : pv / dv;
                Cplx s;
                for (int j = 0; j < n; ++j)
                    if (j != k) s += Cplx(Real(1)) / (z[k] - z[j]);
                Cplx denom = Cplx(Real(1)) - w * s;
                Cplx dz = (denom.re == 0 && denom.im == 0) ? w : w / denom;
                z[k] -= dz;
                Real rel = abs(dz) / (Real(1) + abs(z[k]));
                if (rel > worst) worst = rel;
            }
            converged = worst < step_target;
        }

        // Newton polish
        for (int k = 0; k < n; ++k) {
            for (int it = 0; it < 4; ++it) {
                Cplx dv = dp.eval(z[k]);
                if (dv.re == 0 && dv.im == 0) break;
                z[k] -= p.eval(z[k]) / dv;
            }
        }

        Real scale = p.coeff_scale();
        for (int k = 0; k < n; ++k) {
            Real resid = abs(p.eval(z[k]));
            if (!(resid <= tol * scale)) {
                std::vector<Cplx> partial = roots;
                partial.insert(partial.end(), z.begin(), z.end());
                throw RootSolveError("poly_roots: residual above tolerance", std::move(partial));
            }
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    std::sort(roots.begin(), roots.end(), [](const Cplx& a, const Cplx& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return roots;
}

Cplx poly_discriminant_numeric(const CPoly& p, const Real& tol) {
    int n = p.degree();
    if (n < 2) throw BadInputError("discriminant needs degree >= 2");
    std::vector<Cplx> r = poly_roots(p, tol);
    Cplx d{Real(1)};
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = i + 1; j < r.size(); ++j) {
            Cplx diff = r[i] - r[j];
            d *= diff * diff;
        }
    return pow_int(p.c.back(), 2 * n - 2) * d;
}

// ---------------------------------------------------------------------------
// QPoly

QPoly QPoly::monomial(int deg, Rat v) {
    std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
    c.back() = std::move(v);
    return QPoly(std::move(c));
}

QPoly QPoly::from_roots(const std::vector<Rat>& roots) {
    QPoly p = QPoly::constant(Rat(1));
    for (const Rat& r : roots) p = p * QPoly({-r, Rat(1)});
    return p;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    QPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Rat(static_cast<long>(i)) * c[i]);
    d.trim();
    return d;
}

CPoly CPoly_from(const QPoly& q) {
    CPoly p;
    for (const Rat& v : q.c) p.c.emplace_back(rat_to_real(v));
    p.trim();
    return p;
}

CPoly QPoly::to_cpoly() const { return CPoly_from(*this); }

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

QPoly operator*(const Rat& s, const QPoly& a) {
    QPoly r = a;
    for (Rat& v : r.c) v *= s;
    r.trim();
    return r;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw BadInputError("division by zero polynomial");
    QPoly rem = a;
    QPoly quot;
    int db = b.degree();
    if (rem.degree() >= db) quot.c.assign(static_cast<size_t>(rem.degree() - db) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rat f = rem.c.back() / b.c.back();
        quot.c[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) rem.c[static_cast<size_t>(i + k)] -= f * b.c[static_cast<size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = (Rat(1) / a.c.back()) * a;
    return a;
}

Rat qpoly_resultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) throw BadInputError("resultant of zero polynomial");
    int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) throw BadInputError("resultant needs a nonconstant input");
    if (m == 0) return rat_pow(a.c[0], n);
    if (n == 0) return rat_pow(b.c[0], m);

    int size = m + n;
    std::vector<std::vector<Rat>> s(static_cast<size_t>(size), std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a.c[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b.c[static_cast<size_t>(n - j)];

    // exact fraction-based elimination
    Rat det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (s[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(s[static_cast<size_t>(piv)], s[static_cast<size_t>(col)]);
            det = -det;
        }
        Rat pv = s[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= pv;
        for (int r = col + 1; r < size; ++r) {
            Rat f = s[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
            if (f == 0) continue;
            for (int cc = col; cc < size; ++cc) s[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * s[static_cast<size_t>(col)][static_cast<size_t>(cc)];
        }
    }
    return det;
}

QPoly qpoly_squarefree(const QPoly& p) {
    if (p.degree() < 2) return p;
    QPoly g = qpoly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return qpoly_divmod(p, g).first;
}

Rat qpoly_discriminant(const QPoly& p) {
    int n = p.degree();
    if (n < 2) throw BadInputError("discriminant needs degree >= 2");
    Rat res = qpoly_resultant(p, p.derivative());
    Rat lead = p.c.back();
    Rat d = res / lead;
    int sign_exp = (n * (n - 1)) / 2;
    if (sign_exp % 2) d = -d;
    return d;
}

// ---------------------------------------------------------------------------
// QPoly2 and resultant elimination

int QPoly2::degree_v() const {
    int d = -1;
    for (const QPoly& q : c) d = std::max(d, q.degree());
    return d;
}

QPoly QPoly2::eval_u(const QPoly& val) const {
    QPoly acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * val + *it;
    return acc;
}

QPoly QPoly2::specialize_v(const Rat& v) const {
    QPoly out;
    out.c.reserve(c.size());
    for (const QPoly& q : c) out.c.push_back(q.eval(v));
    out.trim();
    return out;
}

QPoly resultant_eliminate(const QPoly2& p, const QPoly2& q) {
    if (p.is_zero() || q.is_zero()) throw BadInputError("resultant of zero polynomial");
    int m = p.degree_u(), n = q.degree_u();
    if (m == 0 && n == 0) throw BadInputError("resultant_eliminate: both inputs constant in u");

    // The Sylvester matrix has fixed shape in u; its determinant as a
    // polynomial in v is recovered by interpolation at enough sample points.
    long bound = static_cast<long>(std::max(0, p.degree_v())) * std::max(0, n) +
                 static_cast<long>(std::max(0, q.degree_v())) * std::max(0, m);
    int samples = static_cast<int>(bound) + 1;

    int size = m + n;
    std::vector<Rat> xs, ys;
    xs.reserve(static_cast<size_t>(samples));
    ys.reserve(static_cast<size_t>(samples));
    for (int t = 0; t < samples; ++t) {
        Rat v(t);
        std::vector<std::vector<Rat>> s(static_cast<size_t>(size), std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
        auto coeff_p = [&](int k) { return k <= m && k >= 0 ? p.c[static_cast<size_t>(k)].eval(v) : Rat(0); };
        auto coeff_q = [&](int k) { return k <= n && k >= 0 ? q.c[static_cast<size_t>(k)].eval(v) : Rat(0); };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= m; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = coeff_p(m - j);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = coeff_q(n - j);

        Rat det(1);
        bool zero = false;
        for (int col = 0; col < size && !zero; ++col) {
            int piv = -1;
            for (int r = col; r < size; ++r)
                if (s[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                zero = true;
                break;
            }
            if (piv != col) {
                std::swap(s[static_cast<size_t>(piv)], s[static_cast<size_t>(col)]);
                det = -det;
            }
            Rat pv = s[static_cast<size_t>(col)][static_cast<size_t>(col)];
            det *= pv;
            for (int r = col + 1; r < size; ++r) {
                Rat f = s[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
                if (f == 0) continue;
                for (int cc = col; cc < size; ++cc)
                    s[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * s[static_cast<size_t>(col)][static_cast<size_t>(cc)];
            }
        }
        xs.push_back(v);
        ys.push_back(zero ? Rat(0) : det);
    }

    // Newton form interpolation
    std::vector<Rat> divided = ys;
    for (int level = 1; level < samples; ++level)
        for (int i = samples - 1; i >= level; --i)
            divided[static_cast<size_t>(i)] =
                (divided[static_cast<size_t>(i)] - divided[static_cast<size_t>(i - 1)]) / (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(i - level)]);

    QPoly result = QPoly::constant(divided[static_cast<size_t>(samples - 1)]);
    for (int i = samples - 2; i >= 0; --i)
        result = result * QPoly({-xs[static_cast<size_t>(i)], Rat(1)}) + QPoly::constant(divided[static_cast<size_t>(i)]);
    return result;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(Rat v) {
    MPoly p;
    if (v != 0) p.terms[{}] = std::move(v);
    return p;
}

MPoly MPoly::var(MVar v, int exp) {
    MPoly p;
    Expt e{};
    e[static_cast<size_t>(v)] = exp;
    p.terms[e] = Rat(1);
    return p;
}

void MPoly::cleanup() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, v] : r.terms) v = -v;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, v] : b.terms) r.terms[e] += v;
    r.cleanup();
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, v] : b.terms) r.terms[e] -= v;
    r.cleanup();
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, va] : a.terms)
        for (const auto& [eb, vb] : b.terms) {
            MPoly::Expt e;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.terms[e] += va * vb;
        }
    r.cleanup();
    return r;
}

MPoly operator*(const Rat& s, const MPoly& a) {
    MPoly r = a;
    for (auto& [e, v] : r.terms) v *= s;
    r.cleanup();
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }

MPoly MPoly::pow(int e) const {
    MPoly acc = MPoly::constant(Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

int MPoly::max_exponent(MVar v) const {
    int m = 0;
    for (const auto& [e, val] : terms) m = std::max(m, e[static_cast<size_t>(v)]);
    return m;
}

MPoly MPoly::substitute(MVar v, const MPoly& value) const {
    int d = max_exponent(v);
    std::vector<MPoly> powers(static_cast<size_t>(d) + 1);
    powers[0] = MPoly::constant(Rat(1));
    for (int i = 1; i <= d; ++i) powers[static_cast<size_t>(i)] = powers[static_cast<size_t>(i - 1)] * value;
    MPoly out;
    for (const auto& [e, val] : terms) {
        Expt rest = e;
        int k = rest[static_cast<size_t>(v)];
        rest[static_cast<size_t>(v)] = 0;
        MPoly mono;
        mono.terms[rest] = val;
        out = out + mono * powers[static_cast<size_t>(k)];
    }
    return out;
}

MPoly MPoly::substitute_rational(MVar v, const MPoly& num, const MPoly& den) const {
    int d = max_exponent(v);
    std::vector<MPoly> num_pow(static_cast<size_t>(d) + 1), den_pow(static_cast<size_t>(d) + 1);
    num_pow[0] = den_pow[0] = MPoly::constant(Rat(1));
    for (int i = 1; i <= d; ++i) {
        num_pow[static_cast<size_t>(i)] = num_pow[static_cast<size_t>(i - 1)] * num;
        den_pow[static_cast<size_t>(i)] = den_pow[static_cast<size_t>(i - 1)] * den;
    }
    MPoly out;
    for (const auto& [e, val] : terms) {
        Expt rest = e;
        int k = rest[static_cast<size_t>(v)];
        rest[static_cast<size_t>(v)] = 0;
        MPoly mono;
        mono.terms[rest] = val;
        out = out + mono * num_pow[static_cast<size_t>(k)] * den_pow[static_cast<size_t>(d - k)];
    }
    return out;
}

std::vector<MPoly> MPoly::collect(MVar v) const {
    std::vector<MPoly> out(static_cast<size_t>(max_exponent(v)) + 1);
    for (const auto& [e, val] : terms) {
        Expt rest = e;
        int k = rest[static_cast<size_t>(v)];
        rest[static_cast<size_t>(v)] = 0;
        out[static_cast<size_t>(k)].terms[rest] += val;
    }
    for (MPoly& p : out) p.cleanup();
    return out;
}

MPoly MPoly::eval_partial(const std::map<MVar, Rat>& vals) const {
    MPoly out;
    for (const auto& [e, val] : terms) {
        Rat coeff = val;
        Expt rest = e;
        for (const auto& [v, x] : vals) {
            int k = rest[static_cast<size_t>(v)];
            if (k) coeff *= rat_pow(x, k);
            rest[static_cast<size_t>(v)] = 0;
        }
        out.terms[rest] += coeff;
    }
    out.cleanup();
    return out;
}

Rat MPoly::eval_all(const std::map<MVar, Rat>& vals) const {
    MPoly r = eval_partial(vals);
    if (r.is_zero()) return Rat(0);
    if (r.terms.size() != 1 || r.terms.begin()->first != MPoly::Expt{})
        throw BadInputError("eval_all: unresolved variables remain");
    return r.terms.begin()->second;
}

MPoly symmetrize_g1g3(const MPoly& p) {
    // power sums G1^k + G3^k in terms of S1, S2 via Newton's recurrence
    std::vector<MPoly> psum(2);
    psum[0] = MPoly::constant(Rat(2));
    psum[1] = MPoly::var(VS1);
    auto power_sum = [&](int k) -> const MPoly& {
        while (static_cast<int>(psum.size()) <= k) {
            size_t m = psum.size();
            psum.push_back(MPoly::var(VS1) * psum[m - 1] - MPoly::var(VS2) * psum[m - 2]);
        }
        return psum[static_cast<size_t>(k)];
    };

    MPoly rest = p;
    MPoly out;
    while (!rest.is_zero()) {
        auto it = rest.terms.rbegin();
        MPoly::Expt e = it->first;
        Rat coeff = it->second;
        int a = e[VG1], b = e[VG3];
        MPoly::Expt general = e;
        general[VG1] = general[VG3] = 0;
        MPoly passthrough;
        passthrough.terms[general] = coeff;

        MPoly replacement;
        if (a == b) {
            replacement = passthrough * MPoly::var(VS2).pow(a);
        } else {
            int lo = std::min(a, b), hi = std::max(a, b);
            replacement = passthrough * MPoly::var(VS2).pow(lo) * power_sum(hi - lo);
        }
        // subtract both the term and its mirror, which must be present
        MPoly pair;
        pair.terms[e] = coeff;
        if (a != b) {
            MPoly::Expt mirror = e;
            std::swap(mirror[VG1], mirror[VG3]);
            auto found = rest.terms.find(mirror);
            if (found == rest.terms.end() || found->second != coeff)
                throw BadInputError("symmetrize_g1g3: input not symmetric in G1, G3");
            pair.terms[mirror] = coeff;
        }
        out = out + replacement;
        rest = rest - pair;
    }
    return out;
}

QPoly mpoly_to_qpoly(const MPoly& p, MVar v) {
    QPoly q;
    q.c.assign(static_cast<size_t>(p.max_exponent(v)) + 1, Rat(0));
    for (const auto& [e, val] : p.terms) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != v && e[i] != 0)
                throw BadInputError("mpoly_to_qpoly: extra variables present");
        q.c[static_cast<size_t>(e[static_cast<size_t>(v)])] = val;
    }
    q.trim();
    return q;
}

// ---------------------------------------------------------------------------
// Moebius maps

MoebiusMap::MoebiusMap(Cplx A, Cplx B, Cplx C, Cplx D)
    : a(std::move(A)), b(std::move(B)), c(std::move(C)), d(std::move(D)) {
    Cplx det = a * d - b * c;
    if (det.re == 0 && det.im == 0) throw BadInputError("MoebiusMap: determinant is zero");
}

PValue MoebiusMap::apply(const PValue& x) const {
    if (x.is_inf()) {
        if (c.re == 0 && c.im == 0) return PValue::infinity();
        return PValue(a / c);
    }
    Cplx num = a * x.z + b;
    Cplx den = c * x.z + d;
    if (den.re == 0 && den.im == 0) return PValue::infinity();
    return PValue(num / den);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
    return MoebiusMap(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

// ---------------------------------------------------------------------------
// factorization

namespace {

Int pollard_rho(const Int& n, SplitMix64& rng) {
    if (n % 2 == 0) return Int(2);
    while (true) {
        Int x = Int(static_cast<unsigned long>(rng.next() % 1000003)) % n;
        Int y = x;
        Int c = Int(static_cast<unsigned long>(rng.next() % 1000003)) % n;
        if (c == 0) c = 1;
        Int d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, int>& out, SplitMix64& rng) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n, rng);
    factor_rec(d, out, rng);
    factor_rec(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n <= 0) throw BadInputError("factorize: need a positive integer");
    std::map<Int, int> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        while (n % p == 0) {
            acc[Int(p)] += 1;
            n /= p;
        }
    }
    for (long p = 53; p < 100000 && n > 1; p += 2) {
        while (n % p == 0) {
            acc[Int(p)] += 1;
            n /= p;
        }
    }
    if (n > 1) {
        SplitMix64 rng(0x5eedf00dULL);
        factor_rec(n, acc, rng);
    }
    return {acc.begin(), acc.end()};
}

std::set<Int> denominator_primes(const Rat& q) {
    std::set<Int> out;
    Int den = q.get_den();
    if (den == 1) return out;
    for (const auto& [p, e] : factorize(den)) out.insert(p);
    return out;
}

}  // namespace hypell
