#include "hypell/theta.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <thread>
#include <atomic>

namespace hypell {

// ---------------------------------------------------------------------------
// characteristics

Char Char::from_index(int g, unsigned idx) {
    unsigned hi = idx >> g, lo = idx & ((1u << g) - 1u);
    unsigned mp = 0, md = 0;
    for (int k = 0; k < g; ++k) {
        if ((hi >> (g - 1 - k)) & 1u) mp |= 1u << k;
        if ((lo >> (g - 1 - k)) & 1u) md |= 1u << k;
    }
    return Char(g, mp, md);
}

Parity parity(const Char& m) {
    return (std::popcount(m.mp & m.md) & 1) ? Parity::Odd : Parity::Even;
}

bool is_odd(const Char& m) { return parity(m) == Parity::Odd; }

Char char_add(const Char& a, const Char& b) {
    if (a.g != b.g) throw BadInputError("char_add: genus mismatch");
    return Char(a.g, a.mp ^ b.mp, a.md ^ b.md);
}

Char char_add(const std::vector<Char>& ms) {
    if (ms.empty()) throw BadInputError("char_add: empty list");
    Char acc = ms[0];
    for (size_t i = 1; i < ms.size(); ++i) acc = char_add(acc, ms[i]);
    return acc;
}

bool is_azygetic(const Char& m1, const Char& m2, const Char& m3) {
    int e = 0;
    e ^= is_odd(m1) ? 1 : 0;
    e ^= is_odd(m2) ? 1 : 0;
    e ^= is_odd(m3) ? 1 : 0;
    e ^= is_odd(char_add(char_add(m1, m2), m3)) ? 1 : 0;
    return e == 1;
}

bool azygetic_sequence(const std::vector<Char>& ms) {
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j)
            for (size_t k = j + 1; k < ms.size(); ++k)
                if (!is_azygetic(ms[i], ms[j], ms[k])) return false;
    return true;
}

std::vector<Char> all_characteristics(int g) {
    std::vector<Char> out;
    out.reserve(1u << (2 * g));
    for (unsigned idx = 0; idx < (1u << (2 * g)); ++idx) out.push_back(Char::from_index(g, idx));
    return out;
}

std::vector<Char> odd_characteristics(int g) {
    std::vector<Char> out;
    for (const Char& m : all_characteristics(g))
        if (is_odd(m)) out.push_back(m);
    return out;
}

std::vector<Char> even_characteristics(int g) {
    std::vector<Char> out;
    for (const Char& m : all_characteristics(g))
        if (!is_odd(m)) out.push_back(m);
    return out;
}

std::string char_to_string(const Char& m) {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k < m.g; ++k) os << (m.mp_bit(k) ? "1/2" : "0") << (k + 1 < m.g ? "," : "");
    os << ";";
    for (int k = 0; k < m.g; ++k) os << (m.md_bit(k) ? "1/2" : "0") << (k + 1 < m.g ? "," : "");
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// RiemannMatrix

RiemannMatrix::RiemannMatrix(int genus, CMat mat, const Real& sym_tol) : g(genus), Z(std::move(mat)) {
    if (Z.n != g || g < 1) throw BadInputError("RiemannMatrix: bad dimensions");
    Real scale(0);
    for (const Cplx& v : Z.a) scale = std::max(scale, abs(v));
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (abs(Z(i, j) - Z(j, i)) > sym_tol * (Real(1) + scale))
                throw BadInputError("RiemannMatrix: not symmetric within tolerance");
    // symmetrize exactly so downstream quadratic forms are consistent
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            Cplx avg = (Z(i, j) + Z(j, i)) * (Real(1) / 2);
            Z(i, j) = Z(j, i) = avg;
        }
    if (!cholesky(imag_part()))
        throw BadInputError("RiemannMatrix: imaginary part is not positive definite");
}

RMat RiemannMatrix::imag_part() const {
    RMat Y(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) Y(i, j) = Z(i, j).im;
    return Y;
}

CVec RiemannMatrix::torsion_point(const Char& m) const {
    CVec w(g);
    Real half = Real(1) / 2;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j)
            if (m.mp_bit(j)) w[i] += Z(i, j) * half;
        if (m.md_bit(i)) w[i] += Cplx(half);
    }
    return w;
}

// ---------------------------------------------------------------------------
// truncation radius

namespace {

// smallest per-axis integer radius B such that the absolute lattice tail
// (including the 2*pi*|v| gradient weight) stays below eps_abs
int choose_radius(int g, double lambda_min, double eps_abs, double offset_norm, long max_terms) {
    if (eps_abs <= 0) eps_abs = 1e-80;
    double log_eps = std::log(eps_abs);
    for (int B = 2;; ++B) {
        double tail = 0;
        bool small = true;
        for (int b = B; b < B + 60; ++b) {
            double shell_count = 2.0 * g * std::pow(2.0 * b + 3.0, g - 1);
            double r = b - 1.0;  // min Euclidean distance of the shell after half-integer shift
            if (r < 0.5) r = 0.5;
            double log_term = std::log(shell_count * (1.0 + 6.3 * (b + 1.0) * std::sqrt(double(g)))) -
                              M_PI * lambda_min * r * r + offset_norm;
            if (log_term > log_eps - std::log(1e-3)) small = false;
            tail += std::exp(std::min(log_term, 300.0));
        }
        if (small && tail < eps_abs) {
            double count = std::pow(2.0 * B + 2.0, g);
            if (count > static_cast<double>(max_terms))
                throw NonConvergenceError("theta: truncation radius exceeds the term budget");
            return B;
        }
        if (std::pow(2.0 * B + 2.0, g) > static_cast<double>(max_terms))
            throw NonConvergenceError("theta: truncation radius exceeds the term budget");
    }
}

struct ThetaContext {
    const RiemannMatrix& Z;
    RMat Y;
    double lambda_min;

    explicit ThetaContext(const RiemannMatrix& rm) : Z(rm), Y(rm.imag_part()) {
        lambda_min = static_cast<double>(pd_min_eigen_lower_bound(Y));
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// general-z evaluation

Cplx theta_value(const Char& m, const CVec& z, const RiemannMatrix& Zm, const Real& eps,
                 const ThetaOptions& opt) {
    if (m.g != Zm.g || static_cast<int>(z.size()) != Zm.g)
        throw BadInputError("theta_value: dimension mismatch");
    ThetaContext ctx(Zm);
    int g = Zm.g;

    // center of the Gaussian weight: v ~ -Y^{-1} Im z
    RVec imz(g);
    for (int i = 0; i < g; ++i) imz[i] = z[i].im;
    RVec u = rmat_solve(ctx.Y, imz);
    double unorm = 0;  // pi * u^T Y u, the prefactor the offset introduces
    {
        Real q(0);
        for (int i = 0; i < g; ++i) q += u[i] * imz[i];
        unorm = static_cast<double>(const_pi() * q);
    }
    int B = choose_radius(g, ctx.lambda_min, static_cast<double>(eps), unorm, opt.max_terms);

    std::vector<long> lo(g), hi(g);
    for (int k = 0; k < g; ++k) {
        double center = -static_cast<double>(u[k]) - (m.mp_bit(k) ? 0.5 : 0.0);
        lo[k] = static_cast<long>(std::floor(center)) - B;
        hi[k] = static_cast<long>(std::ceil(center)) + B;
    }

    Real pi = const_pi();
    Real half = Real(1) / 2;
    Cplx sum;
    std::vector<long> n(g, 0);
    for (int k = 0; k < g; ++k) n[k] = lo[k];
    while (true) {
        // v = n + m'
        CVec zsh(g);
        Cplx quad;  // v^T Z v
        for (int i = 0; i < g; ++i) {
            Real vi = Real(n[i]) + (m.mp_bit(i) ? half : Real(0));
            for (int j = 0; j < g; ++j) {
                Real vj = Real(n[j]) + (m.mp_bit(j) ? half : Real(0));
                quad += vi * vj * Zm.Z(i, j);
            }
        }
        Cplx lin;  // v . (z + m'')
        for (int i = 0; i < g; ++i) {
            Real vi = Real(n[i]) + (m.mp_bit(i) ? half : Real(0));
            lin += vi * (z[i] + Cplx(m.md_bit(i) ? half : Real(0)));
        }
        Cplx expo = Cplx(Real(0), pi) * quad + Cplx(Real(0), 2 * pi) * lin;
        sum += exp(expo);

        int k = 0;
        while (k < g && ++n[k] > hi[k]) {
            n[k] = lo[k];
            ++k;
        }
        if (k == g) break;
    }
    if (!isfinite(sum)) throw NonConvergenceError("theta_value: non-finite sum");
    return sum;
}

// ---------------------------------------------------------------------------
// z = 0 sweep over every characteristic sharing an m' coset

ThetaTable theta_table(const RiemannMatrix& Zm, const Real& eps, bool want_gradients,
                       const ThetaOptions& opt) {
    int g = Zm.g;
    ThetaContext ctx(Zm);
    int B = choose_radius(g, ctx.lambda_min, static_cast<double>(eps), 0.0, opt.max_terms);

    ThetaTable table;
    table.g = g;
    table.value.assign(1u << (2 * g), Cplx());
    if (want_gradients) table.gradient.assign(1u << (2 * g), CVec(g));

    auto sweep_coset = [&table, &Zm, B, want_gradients, g](unsigned mp) {
        Real pi = const_pi();
        Real half = Real(1) / 2;
        Real two_pi = 2 * pi;
        std::vector<long> n(static_cast<size_t>(g), -static_cast<long>(B));
        std::vector<Cplx> acc(1u << g);
        std::vector<CVec> gacc;
        if (want_gradients) gacc.assign(1u << g, CVec(static_cast<size_t>(g)));

        while (true) {
            RVec v(static_cast<size_t>(g));
            for (int i = 0; i < g; ++i) v[static_cast<size_t>(i)] = Real(n[static_cast<size_t>(i)]) + (((mp >> i) & 1u) ? half : Real(0));
            Cplx quad;
            for (int i = 0; i < g; ++i) {
                quad += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)] * Zm.Z(i, i);
                for (int j = i + 1; j < g; ++j) quad += 2 * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)] * Zm.Z(i, j);
            }
            // exp(pi i v^T Z v)
            Real damp = exp(-pi * quad.im);
            Real phase = pi * quad.re;
            Cplx base{damp * cos(phase), damp * sin(phase)};

            for (unsigned md = 0; md < (1u << g); ++md) {
                // exact phase i^k with k = sum over md bits of (2 n_j + mp_j)
                long k = 0;
                for (int j = 0; j < g; ++j)
                    if ((md >> j) & 1u) k += 2 * n[static_cast<size_t>(j)] + (((mp >> j) & 1u) ? 1 : 0);
                Cplx term;
                switch (((k % 4) + 4) % 4) {
                    case 0: term = base; break;
                    case 1: term = Cplx(-base.im, base.re); break;
                    case 2: term = -base; break;
                    default: term = Cplx(base.im, -base.re); break;
                }
                acc[md] += term;
                if (want_gradients) {
                    for (int j = 0; j < g; ++j) {
                        // multiply by 2 pi i v_j
                        Cplx f{-two_pi * v[static_cast<size_t>(j)] * term.im, two_pi * v[static_cast<size_t>(j)] * term.re};
                        gacc[md][static_cast<size_t>(j)] += f;
                    }
                }
            }

            int k = 0;
            while (k < g && ++n[static_cast<size_t>(k)] > B) {
                n[static_cast<size_t>(k)] = -static_cast<long>(B);
                ++k;
            }
            if (k == g) break;
        }

        // cosets write disjoint characteristic slots, so no synchronization
        for (unsigned md = 0; md < (1u << g); ++md) {
            Char m(g, mp, md);
            table.value[m.index()] = acc[md];
            if (want_gradients) table.gradient[m.index()] = gacc[md];
        }
    };

    unsigned n_cosets = 1u << g;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (hw > 1 && g >= 2) {
        unsigned digits = working_digits();
        std::atomic<unsigned> next{0};
        std::vector<std::thread> workers;
        unsigned n_threads = std::min(hw, n_cosets);
        for (unsigned w = 0; w < n_threads; ++w) {
            workers.emplace_back([&]() {
                set_working_digits(digits);
                for (unsigned mp = next.fetch_add(1); mp < n_cosets; mp = next.fetch_add(1)) sweep_coset(mp);
            });
        }
        for (std::thread& t : workers) t.join();
    } else {
        for (unsigned mp = 0; mp < n_cosets; ++mp) sweep_coset(mp);
    }
    return table;
}

Cplx thetanull(const Char& m, const RiemannMatrix& Zm, const Real& eps, const ThetaOptions& opt) {
    CVec zero(Zm.g, Cplx());
    return theta_value(m, zero, Zm, eps, opt);
}

CVec theta_gradient0(const Char& m, const RiemannMatrix& Zm, const Real& eps, const ThetaOptions& opt) {
    if (!is_odd(m)) throw BadInputError("theta_gradient0: characteristic must be odd");
    if (m.g != Zm.g) throw BadInputError("theta_gradient0: dimension mismatch");
    int g = Zm.g;
    ThetaContext ctx(Zm);
    int B = choose_radius(g, ctx.lambda_min, static_cast<double>(eps), 0.0, opt.max_terms);

    Real pi = const_pi();
    Real half = Real(1) / 2;
    Real two_pi = 2 * pi;
    CVec grad(g);

    std::vector<long> n(g, -static_cast<long>(B));
    while (true) {
        RVec v(g);
        for (int i = 0; i < g; ++i) v[i] = Real(n[i]) + (m.mp_bit(i) ? half : Real(0));
        Cplx quad;
        for (int i = 0; i < g; ++i) {
            quad += v[i] * v[i] * Zm.Z(i, i);
            for (int j = i + 1; j < g; ++j) quad += 2 * v[i] * v[j] * Zm.Z(i, j);
        }
        Real damp = exp(-pi * quad.im);
        Real phase = pi * quad.re;
        Cplx base{damp * cos(phase), damp * sin(phase)};
        long k = 0;
        for (int j = 0; j < g; ++j)
            if (m.md_bit(j)) k += 2 * n[j] + (m.mp_bit(j) ? 1 : 0);
        Cplx term;
        switch (((k % 4) + 4) % 4) {
            case 0: term = base; break;
            case 1: term = Cplx(-base.im, base.re); break;
            case 2: term = -base; break;
            default: term = Cplx(base.im, -base.re); break;
        }
        for (int j = 0; j < g; ++j) grad[j] += Cplx(-two_pi * v[j] * term.im, two_pi * v[j] * term.re);

        int kk = 0;
        while (kk < g && ++n[kk] > B) {
            n[kk] = -static_cast<long>(B);
            ++kk;
        }
        if (kk == g) break;
    }
    return grad;
}

// ---------------------------------------------------------------------------
// Jacobian Nullwerte

Cplx jacobian_nullwerte(const NullwerteRequest& req, const Real& eps) {
    int g = req.Z.g;
    if (static_cast<int>(req.characteristics.size()) != g)
        throw BadInputError("jacobian_nullwerte: need exactly g characteristics");
    for (const Char& m : req.characteristics)
        if (!is_odd(m)) throw BadInputError("jacobian_nullwerte: characteristics must be odd");
    CMat J(g);
    for (int i = 0; i < g; ++i) {
        CVec row = theta_gradient0(req.characteristics[static_cast<size_t>(i)], req.Z, eps);
        for (int j = 0; j < g; ++j) J(i, j) = row[j];
    }
    return mat_det(J);
}

Cplx jacobian_nullwerte_from_table(const ThetaTable& table, const std::vector<Char>& ms) {
    int g = table.g;
    if (static_cast<int>(ms.size()) != g)
        throw BadInputError("jacobian_nullwerte_from_table: need exactly g characteristics");
    CMat J(g);
    for (int i = 0; i < g; ++i) {
        if (!is_odd(ms[static_cast<size_t>(i)]))
            throw BadInputError("jacobian_nullwerte_from_table: characteristics must be odd");
        const CVec& row = table.grad(ms[static_cast<size_t>(i)]);
        for (int j = 0; j < g; ++j) J(i, j) = row[j];
    }
    return mat_det(J);
}

}  // namespace hypell
