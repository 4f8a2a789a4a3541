#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypell/igusa.hpp"

using namespace hypell;

namespace {

SymmetricCoefficients2 random_model(SplitMix64& rng) {
    auto r = [&]() { return make_rat(rng.uniform_int(-12, 12), 1 + rng.uniform_int(0, 5)); };
    while (true) {
        SymmetricCoefficients2 c{r(), r(), r(), 1};
        IgusaClebschTuple t = igusa_from_symmetric(c);
        if (t.I10 != 0) return c;
    }
}

}  // namespace

TEST_CASE("forward map fixed values and symmetry") {
    set_working_digits(50);
    SymmetricCoefficients2 zero{Rat(0), Rat(0), Rat(0), 1};
    IgusaClebschTuple t = igusa_from_symmetric(zero);
    CHECK(t.I2 == Rat(40));
    CHECK(t.I4 == Rat(-80));
    CHECK(t.I6 == Rat(-320));
    CHECK(t.I10 == Rat(256));

    SplitMix64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        SymmetricCoefficients2 c = random_model(rng);
        SymmetricCoefficients2 swapped{c.G3, c.G2, c.G1, c.linear_sign};
        IgusaClebschTuple a = igusa_from_symmetric(c);
        IgusaClebschTuple b = igusa_from_symmetric(swapped);
        CHECK(a.I2 == b.I2);
        CHECK(a.I4 == b.I4);
        CHECK(a.I6 == b.I6);
        CHECK(a.I10 == b.I10);
    }
}

TEST_CASE("forward map equals the root-difference evaluation") {
    set_working_digits(60);
    SplitMix64 rng(42);
    int done = 0;
    while (done < 100) {
        SymmetricCoefficients2 c = random_model(rng);
        IgusaClebschTuple t = igusa_from_symmetric(c);
        // branch points: 0, roots of the quartic, infinity (numeric)
        CPoly quartic({Cplx(Real(1)), Cplx(rat_to_real(c.G3)), Cplx(rat_to_real(c.G2)),
                       Cplx(rat_to_real(c.G1)), Cplx(Real(1))});
        std::vector<Cplx> qroots;
        try {
            qroots = poly_roots(quartic, digits_eps(10));
        } catch (const RootSolveError&) {
            continue;
        }
        std::vector<PValue> pts{PValue(Cplx(Real(0)))};
        bool distinct = true;
        for (const Cplx& r : qroots) {
            if (abs(r) < Real("1e-30")) distinct = false;
            pts.push_back(PValue(r));
        }
        for (size_t a = 0; a + 1 < qroots.size() && distinct; ++a)
            for (size_t b = a + 1; b < qroots.size(); ++b)
                if (abs(qroots[a] - qroots[b]) < Real("1e-30")) distinct = false;
        if (!distinct) continue;
        pts.push_back(PValue::infinity());
        BranchSet B(2, pts);
        auto oracle = igusa_from_roots_oracle_numeric(B);
        std::array<Rat, 4> want{t.I2, t.I4, t.I6, t.I10};
        for (int k = 0; k < 4; ++k) {
            Cplx w{rat_to_real(want[static_cast<size_t>(k)])};
            CHECK(abs(oracle[static_cast<size_t>(k)] - w) < Real("1e-35") * (Real(1) + abs(w)));
        }
        ++done;
    }

    // fully exact variant on a rational root set
    RationalBranchSet RB(2, {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)}, true);
    IgusaClebschTuple o = igusa_from_roots_oracle(RB);
    CHECK(o.I10 != 0);
    // an affine substitution on an all-finite root set rescales the weighted tuple
    RationalBranchSet RF(2, {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(5)}, false);
    IgusaClebschTuple of = igusa_from_roots_oracle(RF);
    RationalBranchSet RFs(2, {Rat(7), Rat(10), Rat(4), Rat(13), Rat(1), Rat(22)}, false);  // x -> 3x + 7
    IgusaClebschTuple ofs = igusa_from_roots_oracle(RFs);
    CHECK(weighted_equal(of, ofs));
    CHECK(ofs.I2 == of.I2 * rat_pow(Rat(3), 6));
}

TEST_CASE("weighted equality and rescaling") {
    IgusaClebschTuple t{Rat(40), Rat(-80), Rat(-320), Rat(256)};
    IgusaClebschTuple s = weighted_rescale(t, make_rat(3, 2));
    CHECK(weighted_equal(t, s));
    IgusaClebschTuple other{Rat(41), Rat(-80), Rat(-320), Rat(256)};
    CHECK(!weighted_equal(t, other));
    IgusaClebschTuple zero{Rat(1), Rat(1), Rat(1), Rat(0)};
    CHECK_THROWS_AS(weighted_equal(t, zero), BadInputError);
}

TEST_CASE("transcribed equation: weights and runtime proportionality") {
    set_working_digits(50);
    CHECK(eq_r_weights_ok());

    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        IgusaClebschTuple t{make_rat(rng.uniform_int(-30, 30), 1 + rng.uniform_int(0, 4)),
                            make_rat(rng.uniform_int(-30, 30), 1 + rng.uniform_int(0, 4)),
                            make_rat(rng.uniform_int(-30, 30), 1 + rng.uniform_int(0, 4)),
                            make_rat(1 + rng.uniform_int(0, 60), 1 + rng.uniform_int(0, 4))};
        QPoly runtime = r_polynomial_for(t);
        QPoly transcribed = eq_r_transcribed_at(t);
        REQUIRE(runtime.degree() == transcribed.degree());
        Rat ratio = runtime.c.back() / transcribed.c.back();
        bool proportional = true;
        for (size_t k = 0; k < runtime.c.size(); ++k)
            if (runtime.c[k] != ratio * transcribed.c[k]) proportional = false;
        CHECK(proportional);
    }
}

TEST_CASE("derived and transcribed eliminations vanish on forward data") {
    set_working_digits(50);
    const EliminationSystem& sys = elimination_system();
    const auto& pair = g2r_pair_transcribed();
    SplitMix64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        SymmetricCoefficients2 c = random_model(rng);
        if (c.G2 == 0) continue;
        IgusaClebschTuple t = igusa_from_symmetric(c);
        std::map<MVar, Rat> vals{{VG2, c.G2}, {VR, Rat(1)}, {VI2, t.I2},
                                 {VI4, t.I4},  {VI6, t.I6}, {VI10, t.I10}};
        CHECK(sys.p6.eval_all(vals) == 0);
        CHECK(sys.p10.eval_all(vals) == 0);
        CHECK(pair[0].eval_all(vals) == 0);
        CHECK(pair[1].eval_all(vals) == 0);

        // the back-substitution formulas recover S2 and S1^2
        Rat S2 = sys.s2_num.eval_all(vals) / 16;
        CHECK(S2 == c.G1 * c.G3);
        Rat uden = sys.u_den.eval_all(vals);
        if (uden != 0) {
            Rat U = sys.u_num.eval_all(vals) / uden;
            CHECK(U == (c.G1 + c.G3) * (c.G1 + c.G3));
        }
    }
}

TEST_CASE("inverse pipeline recovers the zero model") {
    set_working_digits(50);
    IgusaClebschTuple t{Rat(40), Rat(-80), Rat(-320), Rat(256)};
    InverseOptions opt;
    opt.tol = Real("1e-20");
    auto cands = symmetric_from_igusa(t, opt);
    bool found = false;
    for (const InverseCandidate& c : cands)
        if (c.exact && c.coeffs && c.coeffs->G1 == 0 && c.coeffs->G2 == 0 && c.coeffs->G3 == 0) {
            found = true;
            CHECK(abs(c.r - Cplx(Real(1))) < Real("1e-20"));
        }
    CHECK(found);
}

TEST_CASE("inverse pipeline round trips") {
    set_working_digits(50);
    SplitMix64 rng(99);
    InverseOptions opt;
    opt.tol = Real("1e-18");
    int done = 0;
    while (done < 5) {
        SymmetricCoefficients2 c = random_model(rng);
        IgusaClebschTuple t = igusa_from_symmetric(c);
        std::vector<InverseCandidate> cands;
        try {
            cands = symmetric_from_igusa(t, opt);
        } catch (const InversionError&) {
            continue;
        }
        bool found = false;
        for (const InverseCandidate& cand : cands) {
            if (!cand.exact || !cand.coeffs) continue;
            bool direct = cand.coeffs->G1 == c.G1 && cand.coeffs->G2 == c.G2 && cand.coeffs->G3 == c.G3;
            bool swapped = cand.coeffs->G1 == c.G3 && cand.coeffs->G2 == c.G2 && cand.coeffs->G3 == c.G1;
            if (direct || swapped) found = true;
        }
        CHECK(found);
        // weighted rescaling of the input produces the same candidate coefficients
        IgusaClebschTuple t2 = weighted_rescale(t, make_rat(2, 1));
        auto cands2 = symmetric_from_igusa(t2, opt);
        bool found2 = false;
        for (const InverseCandidate& cand : cands2) {
            if (!cand.exact || !cand.coeffs) continue;
            bool direct = cand.coeffs->G1 == c.G1 && cand.coeffs->G2 == c.G2 && cand.coeffs->G3 == c.G3;
            bool swapped = cand.coeffs->G1 == c.G3 && cand.coeffs->G2 == c.G2 && cand.coeffs->G3 == c.G1;
            if (direct || swapped) found2 = true;
        }
        CHECK(found2);
        ++done;
    }
}

TEST_CASE("degenerate tuples are rejected") {
    set_working_digits(40);
    // vanishing I10 cannot come from a nonsingular curve
    IgusaClebschTuple zero{Rat(1), Rat(1), Rat(1), Rat(0)};
    InverseOptions opt;
    opt.tol = Real("1e-15");
    CHECK_THROWS_AS(symmetric_from_igusa(zero, opt), InversionError);
    // a generic tuple is in the image of the weighted map and yields
    // verified (generally irrational) candidates
    IgusaClebschTuple generic{Rat(1), Rat(1), Rat(1), Rat(1)};
    auto cands = symmetric_from_igusa(generic, opt);
    CHECK(!cands.empty());
}
