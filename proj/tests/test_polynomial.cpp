#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypell/polynomial.hpp"

using namespace hypell;

namespace {

Cplx croot(double re, double im = 0) { return Cplx(Real(re), Real(im)); }

bool contains_root(const std::vector<Cplx>& roots, const Cplx& want, const Real& tol) {
    for (const Cplx& r : roots)
        if (abs(r - want) < tol) return true;
    return false;
}

}  // namespace

TEST_CASE("poly_roots on closed-form examples") {
    set_working_digits(50);
    Real tol = digits_eps(10);

    // X^2 + 1
    CPoly p({croot(1), croot(0), croot(1)});
    auto r = poly_roots(p, tol);
    REQUIRE(r.size() == 2);
    CHECK(contains_root(r, croot(0, 1), digits_eps(8)));
    CHECK(contains_root(r, croot(0, -1), digits_eps(8)));

    // X^5 - X
    CPoly q({croot(0), croot(-1), croot(0), croot(0), croot(0), croot(1)});
    auto r5 = poly_roots(q, tol);
    REQUIRE(r5.size() == 5);
    for (double want : {0.0, 1.0, -1.0}) CHECK(contains_root(r5, croot(want), digits_eps(8)));
    CHECK(contains_root(r5, croot(0, 1), digits_eps(8)));
    CHECK(contains_root(r5, croot(0, -1), digits_eps(8)));

    // X^3 - 2X + 2: residual is the oracle
    CPoly c({croot(2), croot(-2), croot(0), croot(1)});
    auto r3 = poly_roots(c, tol);
    REQUIRE(r3.size() == 3);
    for (const Cplx& root : r3) CHECK(abs(c.eval(root)) < Real("1e-12"));
}

TEST_CASE("reconstruction from roots matches input coefficients") {
    set_working_digits(50);
    SplitMix64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        int deg = 2 + static_cast<int>(rng.uniform_int(0, 5));
        std::vector<Cplx> coeffs;
        for (int k = 0; k < deg; ++k) coeffs.push_back(croot(rng.uniform(-3, 3), rng.uniform(-3, 3)));
        coeffs.push_back(croot(1));
        CPoly p(coeffs);
        auto roots = poly_roots(p, digits_eps(10));
        CPoly back = CPoly::from_roots(roots);
        for (size_t k = 0; k < coeffs.size(); ++k)
            CHECK(abs(back.c[k] - p.c[k]) < digits_eps(12) * (Real(1) + p.coeff_scale()));
    }
}

TEST_CASE("poly_roots error carries partial results") {
    set_working_digits(30);
    // irrational roots cannot satisfy an impossible residual target
    CPoly p({croot(2), croot(-2), croot(0), croot(1)});
    CHECK_THROWS_AS(poly_roots(p, Real("1e-200")), RootSolveError);
    try {
        poly_roots(p, Real("1e-200"));
    } catch (const RootSolveError& e) {
        CHECK(e.partial.size() == 3);
    }
    CHECK_THROWS_AS(poly_roots(CPoly({croot(3)}), digits_eps(5)), BadInputError);
}

TEST_CASE("rational discriminants") {
    set_working_digits(50);
    // X^2 - 1 -> 4
    CHECK(qpoly_discriminant(QPoly({Rat(-1), Rat(0), Rat(1)})) == Rat(4));
    // the genus-3 example polynomial, exactly
    QPoly f({Rat(0), Rat(1832265664), Rat(0), Rat(-3694084), Rat(0), Rat(961), Rat(0), Rat(1)});
    Rat expect = -rat_pow(Rat(2), 32) * rat_pow(Rat(31), 35);
    CHECK(qpoly_discriminant(f) == expect);
    CHECK_THROWS_AS(qpoly_discriminant(QPoly({Rat(1), Rat(1)})), BadInputError);
}

TEST_CASE("discriminant two-path agreement") {
    set_working_digits(50);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rat> coeffs;
        int deg = 3 + static_cast<int>(rng.uniform_int(0, 3));
        for (int k = 0; k < deg; ++k) coeffs.push_back(make_rat(rng.uniform_int(-9, 9), 1 + rng.uniform_int(0, 3)));
        coeffs.push_back(Rat(1));
        QPoly p(coeffs);
        Rat exact = qpoly_discriminant(p);
        Cplx numeric = poly_discriminant_numeric(p.to_cpoly(), digits_eps(10));
        CHECK(abs(numeric - Cplx(rat_to_real(exact))) < Real("1e-8") * (Real(1) + abs(numeric)));
    }
}

TEST_CASE("resultant elimination small cases") {
    // p = u - v, q = u - 1  ->  v - 1 up to sign
    QPoly2 p({QPoly({Rat(0), Rat(-1)}), QPoly({Rat(1)})});
    QPoly2 q({QPoly({Rat(-1)}), QPoly({Rat(1)})});
    QPoly res = resultant_eliminate(p, q);
    bool plus = res == QPoly({Rat(-1), Rat(1)});
    bool minus = res == QPoly({Rat(1), Rat(-1)});
    CHECK((plus || minus));

    // p = u^2 - v, q = u - 2 -> v - 4 up to sign
    QPoly2 p2({QPoly({Rat(0), Rat(-1)}), QPoly(), QPoly({Rat(1)})});
    QPoly2 q2({QPoly({Rat(-2)}), QPoly({Rat(1)})});
    QPoly res2 = resultant_eliminate(p2, q2);
    bool plus2 = res2 == QPoly({Rat(-4), Rat(1)});
    bool minus2 = res2 == QPoly({Rat(4), Rat(-1)});
    CHECK((plus2 || minus2));

    CHECK_THROWS_AS(resultant_eliminate(QPoly2({QPoly({Rat(1)})}), QPoly2({QPoly({Rat(2)})})),
                    BadInputError);
}

TEST_CASE("resultant of a polynomial with itself vanishes") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Rat> coeffs;
        int deg = 1 + static_cast<int>(rng.uniform_int(0, 4));
        for (int k = 0; k <= deg; ++k) coeffs.push_back(Rat(rng.uniform_int(-5, 5)));
        coeffs.back() = Rat(1 + rng.uniform_int(0, 4));
        QPoly p(coeffs);
        CHECK(qpoly_resultant(p, p) == 0);
    }
}

TEST_CASE("moebius maps") {
    set_working_digits(50);
    MoebiusMap ident(croot(1), croot(0), croot(0), croot(1));
    CHECK(abs(ident.apply(PValue(croot(5))).z - croot(5)) == 0);

    MoebiusMap inv(croot(0), croot(1), croot(1), croot(0));
    CHECK(abs(inv.apply(PValue::infinity()).z) == 0);
    CHECK(inv.apply(PValue(croot(0))).is_inf());

    MoebiusMap shift(croot(1), croot(1), croot(0), croot(1));
    CHECK(shift.apply(PValue::infinity()).is_inf());

    CHECK_THROWS_AS(MoebiusMap(croot(1), croot(2), croot(2), croot(4)), BadInputError);

    // composition property at random points
    SplitMix64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        MoebiusMap g1(croot(rng.uniform(-2, 2), rng.uniform(-2, 2)), croot(rng.uniform(-2, 2)),
                      croot(rng.uniform(-2, 2)), croot(rng.uniform(1, 3)));
        MoebiusMap g2(croot(rng.uniform(1, 3)), croot(rng.uniform(-2, 2)),
                      croot(rng.uniform(-2, 2), rng.uniform(-2, 2)), croot(rng.uniform(1, 3)));
        PValue x(croot(rng.uniform(-4, 4), rng.uniform(-4, 4)));
        PValue lhs = g1.compose(g2).apply(x);
        PValue rhs = g1.apply(g2.apply(x));
        REQUIRE(lhs.is_inf() == rhs.is_inf());
        if (!lhs.is_inf()) CHECK(abs(lhs.z - rhs.z) < digits_eps(8) * (Real(1) + abs(lhs.z)));
    }
}

TEST_CASE("sparse multivariate polynomials and symmetrization") {
    MPoly g1 = MPoly::var(VG1), g3 = MPoly::var(VG3);
    MPoly sym = g1 * g1 + g3 * g3 + MPoly::constant(Rat(5)) * g1 * g3;
    MPoly s = symmetrize_g1g3(sym);
    // S1^2 - 2 S2 + 5 S2
    MPoly expect = MPoly::var(VS1).pow(2) + MPoly::constant(Rat(3)) * MPoly::var(VS2);
    CHECK(s == expect);
    MPoly asym = g1 - g3;
    CHECK_THROWS_AS(symmetrize_g1g3(asym), BadInputError);

    // substitution: (G2 + 1)^2 with G2 := num/den
    MPoly p = (MPoly::var(VG2) + MPoly::constant(Rat(1))).pow(2);
    MPoly num = MPoly::constant(Rat(3)), den = MPoly::constant(Rat(2));
    MPoly sub = p.substitute_rational(VG2, num, den);  // (3 + 2)^2 / 2^2
    CHECK(sub.eval_all({}) == Rat(25));
}

TEST_CASE("integer factorization") {
    auto f = factorize(Int(2) * 2 * 3 * 31 * 31 * 97);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::make_pair(Int(2), 2));
    CHECK(f[1] == std::make_pair(Int(3), 1));
    CHECK(f[2] == std::make_pair(Int(31), 2));
    CHECK(f[3] == std::make_pair(Int(97), 1));
    // a larger semiprime exercises the rho path
    Int big = Int(1000003) * Int(2000029);
    auto f2 = factorize(big);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].first * f2[1].first == big);
    auto dp = denominator_primes(make_rat(5, 12));
    CHECK(dp == std::set<Int>{Int(2), Int(3)});
}

TEST_CASE("squarefree part") {
    QPoly p = QPoly::from_roots({Rat(1), Rat(1), Rat(2)});
    QPoly sf = qpoly_squarefree(p);
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Rat(1)) == 0);
    CHECK(sf.eval(Rat(2)) == 0);
}
