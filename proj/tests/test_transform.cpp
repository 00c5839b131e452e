#include "doctest.h"

#include "fleib/psi.hpp"
#include "fleib/transform.hpp"
#include "support/rng.hpp"
#include "support/straightline_oracle.hpp"

using namespace fleib;
using fleib::testing::TestRng;
using fleib::testing::straightline_base_change;

namespace {

// Expected system for n = 7 in the variables y, z3..z8 (indices 0..6),
// written out from the published low-dimensional cases.
MultiPoly expected_psi(int t) {
    const int v = 7;
    MultiPoly p(v);
    auto term = [&](long c, int y, int z3, int z4 = 0, int z5 = 0, int z6 = 0, int z7 = 0,
                    int z8 = 0) { p.add_term({y, z3, z4, z5, z6, z7, z8}, QiScalar(c)); };
    switch (t) {
    case 3:
        term(1, 0, 1);
        break;
    case 4:
        term(1, 0, 0, 1);
        term(-2, 1, 2);
        break;
    case 5:
        term(1, 0, 0, 0, 1);
        term(-5, 1, 1, 1);
        term(5, 2, 3);
        break;
    case 6:
        term(1, 0, 0, 0, 0, 1);
        term(-6, 1, 1, 0, 1);
        term(-3, 1, 0, 2);
        term(21, 2, 2, 1);
        term(-14, 3, 4);
        break;
    case 7:
        term(1, 0, 0, 0, 0, 0, 1);
        term(-7, 1, 1, 0, 0, 1);
        term(-7, 1, 0, 1, 1);
        term(28, 2, 2, 0, 1);
        term(28, 2, 1, 2);
        term(-84, 3, 3, 1);
        term(42, 4, 5);
        break;
    case 8:
        term(1, 0, 0, 0, 0, 0, 0, 1);
        break;
    }
    return p;
}

ParamVector pv(int n, std::vector<QiScalar> beta, QiScalar gamma) {
    return ParamVector(n, std::move(beta), std::move(gamma));
}

} // namespace

TEST_CASE("psi system for n=7 matches the published polynomials term for term") {
    PsiSystem sys = psi_generate(7);
    REQUIRE(sys.polys.size() == 6);
    for (int t = 3; t <= 8; ++t) {
        INFO("psi_" << t);
        CHECK(sys.psi(t) == expected_psi(t));
    }
}

TEST_CASE("psi triangularity and unit leading structure") {
    for (int n : {4, 7, 10, 12}) {
        PsiSystem sys = psi_generate(n);
        for (int t = 3; t <= n + 1; ++t) {
            const MultiPoly& p = sys.psi(t);
            // z_t occurs exactly once, linearly, with coefficient 1.
            Exponents unit(sys.var_count(), 0);
            unit[PsiSystem::z_index(t)] = 1;
            auto it = p.terms().find(unit);
            REQUIRE(it != p.terms().end());
            CHECK(it->second == QiScalar(1));
            for (const auto& [e, c] : p.terms()) {
                CHECK(c.is_integer());
                // No variable z_s with s >= t appears outside the unit term.
                for (int s = t; s <= n + 1; ++s) CHECK(e[PsiSystem::z_index(s)] == (e == unit && s == t ? 1 : 0));
            }
        }
    }
}

TEST_CASE("identity base change fixes every parameter vector") {
    TestRng rng(2);
    for (int n = 4; n <= 12; ++n) {
        ParamVector p = rng.param(n);
        CHECK(rho_apply(TransformParams::identity(), p) == p);
    }
}

TEST_CASE("published worked transforms") {
    // Fixed point of (1,1,1) in dimension 5.
    ParamVector p1 = pv(4, {1, 1}, 2);
    CHECK(rho_apply(TransformParams(1, 1, 1), p1) == p1);

    // Dimension 6 case: (1,0,0), gamma 0 maps to (1,-2,5), gamma 0.
    ParamVector p2 = pv(5, {1, 0, 0}, 0);
    CHECK(rho_apply(TransformParams(1, 1, 1), p2) == pv(5, {1, -2, 5}, 0));

    // Normalization witness used by the dim-5 classifier.
    ParamVector p3 = pv(4, {2, 3}, 1);
    TransformParams tp(1, QiScalar::rational(3, 7), QiScalar::rational(1, 2));
    CHECK(rho_apply(tp, p3) == pv(4, {1, 0}, QiScalar::rational(1, 4)));
}

TEST_CASE("composition law") {
    TransformParams a(1, 1, 1), b(1, 1, 1);
    TransformParams c = rho_compose(a, b);
    CHECK(c.A == QiScalar(1));
    CHECK(c.B == QiScalar(2));
    CHECK(c.D == QiScalar(1));

    TestRng rng(13);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(rng.pick(4, 9));
        TransformParams tp1 = rng.transform();
        TransformParams tp2 = rng.transform();
        ParamVector p = rng.param(n);
        CHECK(rho_apply(tp2, rho_apply(tp1, p)) == rho_apply(rho_compose(tp1, tp2), p));
        CHECK(rho_compose(tp1, TransformParams::identity()) == tp1);
        CHECK(rho_compose(TransformParams::identity(), tp1) == tp1);
    }
}

TEST_CASE("inversion law") {
    TransformParams inv1 = rho_invert(TransformParams(1, 1, 1));
    CHECK(inv1 == TransformParams(1, -1, 1));
    CHECK(rho_invert(TransformParams::identity()).is_identity());

    TestRng rng(31);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(rng.pick(4, 9));
        TransformParams tp = rng.transform();
        ParamVector p = rng.param(n);
        CHECK(rho_apply(rho_invert(tp), rho_apply(tp, p)) == p);
        CHECK(rho_compose(tp, rho_invert(tp)).is_identity());
        CHECK(rho_compose(rho_invert(tp), tp).is_identity());
    }
}

TEST_CASE("base change agrees with the straight-line component sums") {
    TestRng rng(47);
    for (int n = 3; n <= 7; ++n) {
        for (int it = 0; it < 25; ++it) {
            TransformParams tp = rng.transform();
            ParamVector p = rng.param(n);
            CHECK(rho_apply(tp, p) == straightline_base_change(tp, p));
        }
    }
}

TEST_CASE("degenerate base changes are rejected") {
    CHECK_THROWS_AS(TransformParams(0, 1, 1), ArithmeticError);
    CHECK_THROWS_AS(TransformParams(1, 1, 0), ArithmeticError);
    ParamVector p = pv(4, {1, 0}, 1);
    CHECK_THROWS_AS(rho_apply_xyu(QiScalar(0), QiScalar(0), QiScalar(1), p), ArithmeticError);
}
