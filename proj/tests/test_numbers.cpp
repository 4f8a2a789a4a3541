#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypell/numbers.hpp"

using namespace hypell;

TEST_CASE("working precision is adjustable") {
    set_working_digits(50);
    Real a = sqrt(Real(2));
    CHECK(abs(a * a - 2) < digits_eps(5));
    {
        ScopedDigits sd(100);
        Real b = sqrt(Real(2));
        CHECK(abs(b * b - 2) < pow(Real(10), -90));
    }
    CHECK(working_digits() == 50);
}

TEST_CASE("complex arithmetic basics") {
    set_working_digits(50);
    Cplx i{Real(0), Real(1)};
    CHECK(abs(i * i + Cplx(Real(1))) == 0);
    Cplx z{Real(3), Real(4)};
    CHECK(abs(z) == 5);
    CHECK(abs(sqrt(z) * sqrt(z) - z) < digits_eps(5));
    CHECK(abs(exp(log(z)) - z) < digits_eps(5));
    CHECK(abs(nth_root(z, 7) - exp(log(z) / Real(7))) < digits_eps(5));
    // principal branch: sqrt of a negative real lands on the positive imaginary axis
    Cplx s = sqrt(Cplx(Real(-4)));
    CHECK(s.im > 0);
    CHECK(abs(s - Cplx(Real(0), Real(2))) < digits_eps(5));
}

TEST_CASE("roots of unity") {
    set_working_digits(50);
    for (int n : {3, 8, 12})
        for (int t = 1; t <= n; ++t) CHECK(abs(pow_int(root_of_unity(t, n), n) - Cplx(Real(1))) < digits_eps(5));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3/4") == make_rat(3, 4));
    CHECK(parse_rat("-12") == Rat(-12));
    CHECK(parse_rat("2.5e-3") == make_rat(1, 400));
    CHECK(parse_rat("0.1") == make_rat(1, 10));
    CHECK_THROWS_AS(parse_rat("abc"), BadInputError);
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), BadInputError);
    CHECK(rat_to_string(make_rat(4, 6)) == "2/3");
}

TEST_CASE("decimal strings preserve value through Real") {
    set_working_digits(50);
    Real x = parse_real("0.125");
    CHECK(x == Real(1) / 8);
    std::string s = real_to_string(const_pi());
    Real back = parse_real(s);
    CHECK(abs(back - const_pi()) < pow(Real(10), -45));
}

TEST_CASE("rationalize recovers small fractions") {
    set_working_digits(50);
    Real x = rat_to_real(make_rat(-355, 113));
    auto r = rationalize(x, Int(100000), digits_eps(5));
    REQUIRE(r.has_value());
    CHECK(*r == make_rat(-355, 113));
    auto bad = rationalize(const_pi(), Int(1000), digits_eps(5));
    CHECK(!bad.has_value());
}

TEST_CASE("deterministic prng") {
    SplitMix64 a(7), b(7);
    for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
    double u = SplitMix64(1).uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    SplitMix64 c(9);
    for (int k = 0; k < 50; ++k) {
        long v = c.uniform_int(-3, 7);
        CHECK(v >= -3);
        CHECK(v <= 7);
    }
}
