#pragma once

// Working-precision real/complex scalars and exact rational helpers.
//
// Real is an MPFR-backed floating type whose precision is set per run
// (decimal digits, default 50).  Cplx is a minimal complex type on top of
// it; we only implement the operations the rest of the library needs.
// Exact arithmetic uses GMP (mpz_class / mpq_class).

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypell {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// error taxonomy (CLI maps these to exit codes)

struct BadInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HyperellipticityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InversionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// precision control (thread-local, like the backing MPFR default)

inline unsigned& working_digits_ref() {
    thread_local unsigned digits = 50;
    return digits;
}

inline void set_working_digits(unsigned digits) {
    if (digits < 15) digits = 15;
    working_digits_ref() = digits;
    Real::default_precision(digits);
}

inline unsigned working_digits() { return working_digits_ref(); }

struct ScopedDigits {
    unsigned saved;
    explicit ScopedDigits(unsigned digits) : saved(working_digits()) { set_working_digits(digits); }
    ~ScopedDigits() { set_working_digits(saved); }
};

// Tolerance that scales with the working precision: 10^(-digits + slack).
inline Real digits_eps(int slack = 5) {
    return pow(Real(10), -static_cast<int>(working_digits()) + slack);
}

inline Real const_pi() {
    thread_local unsigned cached_digits = 0;
    thread_local Real cached_pi;
    if (cached_digits != working_digits()) {
        cached_pi = 4 * atan(Real(1));
        cached_digits = working_digits();
    }
    return cached_pi;
}

// ---------------------------------------------------------------------------
// complex numbers over Real

struct Cplx {
    Real re, im;

    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(int r) : re(r), im(0) {}
    Cplx(double r) : re(r), im(0) {}

    Cplx operator-() const { return {-re, -im}; }
    Cplx conj() const { return {re, -im}; }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator*(const Cplx& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Cplx operator*(int s, const Cplx& a) { return {Real(s) * a.re, Real(s) * a.im}; }
    friend Cplx operator*(const Cplx& a, int s) { return {a.re * Real(s), a.im * Real(s)}; }
    friend Cplx operator/(const Cplx& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
    Cplx& operator*=(const Cplx& o) { *this = *this * o; return *this; }
    Cplx& operator/=(const Cplx& o) { *this = *this / o; return *this; }

    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
};

inline Real norm(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

inline bool isfinite(const Real& x) { return mpfr_number_p(x.backend().data()) != 0; }
inline bool isfinite(const Cplx& z) { return isfinite(z.re) && isfinite(z.im); }

inline Cplx sqrt(const Cplx& z) {
    // principal branch
    Real m = abs(z);
    if (m == 0) return Cplx(Real(0));
    Real are = z.re < 0 ? -z.re : z.re;
    Real w = sqrt((m + are) / 2);
    if (z.re >= 0) {
        return {w, z.im / (2 * w)};
    }
    Real v = z.im >= 0 ? w : -w;
    return {z.im / (2 * v), v};
}

inline Cplx exp(const Cplx& z) {
    Real e = exp(z.re);
    return {e * cos(z.im), e * sin(z.im)};
}

inline Cplx log(const Cplx& z) { return {log(abs(z)), arg(z)}; }

inline Cplx pow_int(Cplx base, long e) {
    if (e < 0) return Cplx(Real(1)) / pow_int(base, -e);
    Cplx acc{Real(1)};
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// principal n-th root (z != 0)
inline Cplx nth_root(const Cplx& z, unsigned n) {
    if (n == 0) throw std::invalid_argument("nth_root: n = 0");
    if (z.re == 0 && z.im == 0) return z;
    Real r = pow(abs(z), Real(1) / static_cast<int>(n));
    Real th = arg(z) / static_cast<int>(n);
    return {r * cos(th), r * sin(th)};
}

// exp(2*pi*i * t / n)
inline Cplx root_of_unity(long t, long n) {
    Real th = 2 * const_pi() * Real(t) / Real(n);
    return {cos(th), sin(th)};
}

// ---------------------------------------------------------------------------
// point of P^1: a complex number or the point at infinity

struct PValue {
    Cplx z;
    bool inf = false;

    PValue() = default;
    PValue(Cplx v) : z(std::move(v)) {}
    static PValue infinity() {
        PValue p;
        p.inf = true;
        return p;
    }
    bool is_inf() const { return inf; }
};

inline bool approx_equal(const Cplx& a, const Cplx& b, const Real& tol) {
    return abs(a - b) <= tol * (Real(1) + abs(a) + abs(b));
}

// ---------------------------------------------------------------------------
// exact rationals

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw BadInputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_pow(Rat base, long e) {
    if (e < 0) {
        if (base == 0) throw BadInputError("rat_pow: 0^negative");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Real rat_to_real(const Rat& q);

// best rational approximation with bounded denominator (continued fractions);
// engaged only when it reproduces x to the given tolerance
std::optional<Rat> rationalize(const Real& x, const Int& max_den, const Real& tol);
Rat decimal_to_rat(const std::string& s);  // exact value of a decimal literal
Real parse_real(const std::string& s);
std::string real_to_string(const Real& x, int digits = -1);

// Parse "123", "-4/7", "2.5e-3" as exact rationals. Throws BadInputError.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

// ---------------------------------------------------------------------------
// deterministic PRNG (identical streams on every platform)

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1) with 53 bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    long uniform_int(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace hypell
