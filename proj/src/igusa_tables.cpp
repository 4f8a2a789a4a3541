#include "hypell/igusa.hpp"

// Polynomial tables for the genus-2 invariant pipeline.  The forward map and
// the two eliminated displays are entered term by term; the runtime pipeline
// re-derives the elimination from the forward map, so these tables double as
// independent cross-checks.

namespace hypell {

namespace {

MPoly V(MVar v, int e = 1) { return MPoly::var(v, e); }
MPoly C(long n) { return MPoly::constant(Rat(n)); }
MPoly C2(long num, long den) { return MPoly::constant(make_rat(Int(num), Int(den))); }

MPoly g1(int e = 1) { return V(VG1, e); }
MPoly g2(int e = 1) { return V(VG2, e); }
MPoly g3(int e = 1) { return V(VG3, e); }
MPoly rr(int e = 1) { return V(VR, e); }
MPoly i2(int e = 1) { return V(VI2, e); }
MPoly i4(int e = 1) { return V(VI4, e); }
MPoly i6(int e = 1) { return V(VI6, e); }
MPoly i10(int e = 1) { return V(VI10, e); }

std::array<MPoly, 4> build_forward() {
    MPoly I2 = C(2) * (C(20) + C(3) * g2(2) - C(8) * g1() * g3());

    MPoly I4 = C(-4) * (C(20) + C(3) * g1(2) * g2() - C(9) * g2(2) - g1() * g3() -
                        g1(2) * g3(2) + C(3) * g2() * g3(2));

    MPoly I6 = C(-2) * (C(160) + C(18) * g1(4) - C(13) * g1(2) * g2() - C(88) * g2(2) +
                        C(12) * g1(2) * g2(3) - C(36) * g2(4) - C(32) * g1() * g3() -
                        C(38) * g1(3) * g2() * g3() + C(119) * g1() * g2(2) * g3() -
                        C(14) * g1(2) * g3(2) - C(13) * g2() * g3(2) -
                        C(4) * g1(2) * g2(2) * g3(2) + C(12) * g2(3) * g3(2) +
                        C(12) * g1(3) * g3(3) - C(38) * g1() * g2() * g3(3) + C(18) * g3(4));

    MPoly I10 = C(-27) * g1(4) + C(144) * g1(2) * g2() - C(128) * g2(2) -
                C(4) * g1(2) * g2(3) + C(16) * g2(4) - C(192) * g1() * g3() +
                C(18) * g1(3) * g2() * g3() - C(80) * g1() * g2(2) * g3() -
                C(6) * g1(2) * g3(2) + C(144) * g2() * g3(2) +
                g1(2) * g2(2) * g3(2) - C(4) * g2(3) * g3(2) - C(4) * g1(3) * g3(3) +
                C(18) * g1() * g2() * g3(3) - C(27) * g3(4) + C(256);

    return {I2, I4, I6, I10};
}

long p2(int e) { return 1L << e; }
long p3(int e) {
    long r = 1;
    while (e--) r *= 3;
    return r;
}

std::array<MPoly, 2> build_g2r_pair() {
    // first display (from the I6 equation)
    MPoly a = C(432) * g2(8) - C(864) * g2(6) * (C(48) + rr() * i2()) +
              C(72) * g2(4) *
                  (C(18240) + C(672) * rr() * i2() + C(5) * rr(2) * i2(2) + C(64) * rr(2) * i4()) -
              C(8) * g2(2) *
                  (C(1797120) + C(81216) * rr() * i2() + C(432) * rr(2) * i2(2) +
                   C(7) * rr(3) * i2(3) + C(27648) * rr(2) * i4() +
                   C(1856) * rr(3) * i2() * i4() - C(6144) * rr(3) * i6()) +
              C(p2(12) * p3(4) * 5) * rr() * i2() -
              C(576) * rr(3) * i2() * (i2(2) - C(64) * i4()) +
              C(3) * rr(4) * (i2(2) - C(64) * i4()) * (i2(2) - C(64) * i4()) +
              C(3456) * rr(2) * (C(3) * i2(2) + C(320) * i4()) + C(p2(12) * p3(5) * 25);

    // second display (from the I10 equation)
    MPoly b = C(144) * g2(8) - C(96) * g2(6) * (C(176) + C(5) * rr() * i2()) +
              C(8) * g2(4) *
                  (C(89280) + C(4704) * rr() * i2() + C(59) * rr(2) * i2(2) + C(448) * rr(2) * i4()) +
              C(24) * g2(2) *
                  (C(-525312) - C(36288) * rr() * i2() - C(720) * rr(2) * i2(2) -
                   C(5) * rr(3) * i2(3) - C(9216) * rr(2) * i4() - C(192) * rr(3) * i2() * i4() +
                   C(8192) * rr(5) * i10()) +
              C(p2(12) * p3(5) * 5) * rr() * i2() -
              C(1728) * rr(3) * i2() * (i2(2) - C(64) * i4()) +
              C(9) * rr(4) * (i2(2) - C(64) * i4()) * (i2(2) - C(64) * i4()) +
              C(10368) * rr(2) * (C(3) * i2(2) + C(320) * i4()) + C(p2(12) * p3(6) * 25);

    return {a, b};
}

MPoly build_eq_r() {
    MPoly acc = C(p2(8) * p3(6)) * rr(15) * i10(4);

    acc = acc + C(p2(6) * p3(6)) * rr(13) * i10(3) * (i2() * i4() - C(4) * i6());

    acc = acc - C(p2(6) * p3(5)) * rr(12) * i10(3) * (i2(2) - C(16) * i4());

    acc = acc + C(108) * rr(11) * i10(2) *
                    (C(19) * i2(2) * i4(2) + C(8) * i4(3) - C(168) * i2() * i4() * i6() +
                     C(360) * i6(2) + C(5616) * i2() * i10());

    acc = acc - C(216) * rr(10) * i10(2) *
                    (C(11) * i2(3) * i4() + C(16) * i2() * i4(2) - C(36) * i2(2) * i6() -
                     C(192) * i4() * i6() - C(105408) * i10());

    acc = acc + C(2) * rr(9) * i10() *
                    (i2(5) * i4(2) + C(25) * i2(3) * i4(3) - C(26) * i2() * i4(4) -
                     C(6) * i2(4) * i4() * i6() - C(324) * i2(2) * i4(2) * i6() +
                     C(168) * i4(3) * i6() + C(9) * i2(3) * i6(2) +
                     C(1242) * i2() * i4() * i6(2) - C(1512) * i6(3) - C(270) * i2(4) * i10() -
                     C(11556) * i2(2) * i4() * i10() + C(92016) * i4(2) * i10() +
                     C(37584) * i2() * i6() * i10());

    acc = acc + C(36) * rr(8) * i10() *
                    (i2(4) * i4(2) - C(17) * i2(2) * i4(3) + C(16) * i4(4) -
                     C(6) * i2(3) * i4() * i6() + C(96) * i2() * i4(2) * i6() +
                     C(9) * i2(2) * i6(2) - C(144) * i4() * i6(2) - C(1350) * i2(3) * i10() +
                     C(23544) * i2() * i4() * i10() - C(54432) * i6() * i10());

    acc = acc + rr(7) * (i2(4) * i4(4) - C(2) * i2(2) * i4(5) + i4(6) -
                         C(12) * i2(3) * i4(3) * i6() + C(12) * i2() * i4(4) * i6() +
                         C(54) * i2(2) * i4(2) * i6(2) - C(18) * i4(3) * i6(2) -
                         C(108) * i2() * i4() * i6(3) + C(81) * i6(4) +
                         C(30) * i2(5) * i4() * i10() + C(156) * i2(3) * i4(2) * i10() +
                         C(1272) * i2() * i4(3) * i10() - C(72) * i2(4) * i6() * i10() -
                         C(3672) * i2(2) * i4() * i6() * i10() + C(2448) * i4(2) * i6() * i10() +
                         C(7236) * i2() * i6(2) * i10() - C(1202364) * i2(2) * i10(2) +
                         C(4167936) * i4() * i10(2));

    acc = acc - C(4) * rr(6) * i10() *
                    (i2(6) - C(218) * i2(4) * i4() - C(512) * i2(2) * i4(2) - C(5832) * i4(3) +
                     C(312) * i2(3) * i6() + C(18480) * i2() * i4() * i6() - C(28152) * i6(2) +
                     C(p2(4) * p3(7) * 67) * i2() * i10());

    acc = acc - C(3) * rr(5) *
                    (C(-5) * i2(4) * i4(3) + C(19) * i2(2) * i4(4) - C(14) * i4(5) +
                     C(42) * i2(3) * i4(2) * i6() - C(96) * i2() * i4(3) * i6() -
                     C(117) * i2(2) * i4() * i6(2) + C(126) * i4(2) * i6(2) +
                     C(108) * i2() * i6(3) + C(48) * i2(5) * i10() - C(906) * i2(3) * i4() * i10() +
                     C(372) * i2() * i4(2) * i10() - C(6120) * i2(2) * i6() * i10() +
                     C(85824) * i4() * i6() * i10() + C(7589376) * i10(2));

    acc = acc - C(2) * rr(4) *
                    (i2(5) * i4(2) - C(110) * i2(3) * i4(3) + C(109) * i2() * i4(4) -
                     C(6) * i2(4) * i4() * i6() + C(810) * i2(2) * i4(2) * i6() -
                     C(156) * i4(3) * i6() + C(9) * i2(3) * i6(2) - C(1917) * i2() * i4() * i6(2) +
                     C(1404) * i6(3) + C(594) * i2(4) * i10() + C(24678) * i2(2) * i4() * i10() +
                     C(27216) * i4(2) * i10() - C(140616) * i2() * i6() * i10());

    acc = acc - C(9) * rr(3) *
                    (C(4) * i2(4) * i4(2) - C(116) * i2(2) * i4(3) + C(31) * i4(4) -
                     C(24) * i2(3) * i4() * i6() + C(672) * i2() * i4(2) * i6() +
                     C(36) * i2(2) * i6(2) - C(1008) * i4() * i6(2) - C(24) * i2(3) * i10() +
                     C(36960) * i2() * i4() * i10() - C(94464) * i6() * i10());

    acc = acc - C(54) * rr(2) *
                    (C(4) * i2(3) * i4(2) - C(31) * i2() * i4(3) - C(24) * i2(2) * i4() * i6() +
                     C(108) * i4(2) * i6() + C(36) * i2() * i6(2) - C(504) * i2(2) * i10() +
                     C(9792) * i4() * i10());

    acc = acc - C(432) * rr() *
                    (i2(2) * i4(2) - i4(3) - C(6) * i2() * i4() * i6() + C(9) * i6(2) -
                     C(54) * i2() * i10());

    acc = acc - C(p2(8) * p3(6)) * i10();
    return acc;
}

}  // namespace

const std::array<MPoly, 4>& igusa_forward_polynomials() {
    static const std::array<MPoly, 4> tables = build_forward();
    return tables;
}

const std::array<MPoly, 2>& g2r_pair_transcribed() {
    static const std::array<MPoly, 2> tables = build_g2r_pair();
    return tables;
}

const MPoly& eq_r_transcribed() {
    static const MPoly table = build_eq_r();
    return table;
}

bool eq_r_weights_ok() {
    const MPoly& eq = eq_r_transcribed();
    for (const auto& [e, coeff] : eq.terms) {
        int n = e[VR];
        int weight = 2 * e[VI2] + 4 * e[VI4] + 6 * e[VI6] + 10 * e[VI10];
        for (size_t v = 0; v < e.size(); ++v)
            if (v != VR && v != VI2 && v != VI4 && v != VI6 && v != VI10 && e[v] != 0) return false;
        if (weight != 2 * n + 10) return false;
    }
    return true;
}

}  // namespace hypell
