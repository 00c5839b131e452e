#include "doctest.h"

#include "fleib/classify.hpp"
#include "fleib/io.hpp"
#include "support/rng.hpp"

using namespace fleib;
using fleib::testing::TestRng;

namespace {

ParamVector pv(int n, std::vector<QiScalar> beta, QiScalar gamma) {
    return ParamVector(n, std::move(beta), std::move(gamma));
}

} // namespace

TEST_CASE("parameter vector json round-trip") {
    TestRng rng(3);
    for (int it = 0; it < 40; ++it) {
        ParamVector p = rng.param(static_cast<int>(rng.pick(3, 9)));
        CHECK(param_from_json(param_to_json(p)) == p);
    }
    CHECK_THROWS_AS(param_from_json(json::parse("{\"n\": 4}")), ParseError);
    CHECK_THROWS_AS(param_from_json(json::parse("{\"n\":4,\"beta\":[\"x\"],\"gamma\":\"0\"}")),
                    ParseError);
}

TEST_CASE("structure table json round-trip") {
    TestRng rng(5);
    for (int it = 0; it < 20; ++it) {
        StructureTable t = build_second_class(rng.param(static_cast<int>(rng.pick(3, 8))));
        CHECK(table_from_json(table_to_json(t)) == t);
    }
}

TEST_CASE("psi system json round-trip") {
    for (int n : {3, 5, 8}) {
        PsiSystem sys = psi_generate(n);
        PsiSystem back = psi_from_json(psi_to_json(sys));
        REQUIRE(back.n == sys.n);
        for (int t = 3; t <= n + 1; ++t) CHECK(back.psi(t) == sys.psi(t));
    }
}

TEST_CASE("polynomial text rendering") {
    PsiSystem sys = psi_generate(7);
    CHECK(poly_to_text(sys.psi(3)) == "z3");
    CHECK(poly_to_text(sys.psi(4)) == "z4 - 2*y*z3^2");
    CHECK(poly_to_text(sys.psi(5)) == "z5 - 5*y*z3*z4 + 5*y^2*z3^3");
    CHECK(poly_to_text(sys.psi(6)) == "z6 - 6*y*z3*z5 - 3*y*z4^2 + 21*y^2*z3^2*z4 - 14*y^3*z3^4");
    CHECK(poly_to_text(sys.psi(7)) ==
          "z7 - 7*y*z3*z6 - 7*y*z4*z5 + 28*y^2*z3^2*z5 + 28*y^2*z3*z4^2 - 84*y^3*z3^3*z4 + "
          "42*y^4*z3^5");
    CHECK(poly_to_latex(sys.psi(5)) == "z_5 - 5yz_3z_4 + 5y^2z_3^3");
    CHECK(poly_to_text(MultiPoly(3)) == "0");
}

TEST_CASE("table text rendering with both index conventions") {
    StructureTable t = build_second_class(family_by_name(5, "L(0,1,0)").params());
    std::string zero_based = table_to_text(t);
    CHECK(zero_based.find("[e0,e0] = e2") != std::string::npos);
    std::string one_based = table_to_text(t, true);
    CHECK(one_based.find("[e1,e1] = e3") != std::string::npos);
    CHECK(one_based.find("[e1,e2] = e5") != std::string::npos);
}

TEST_CASE("invariant report shape") {
    json rep = invariant_report(pv(4, {2, 3}, 1));
    CHECK(rep["dim"] == 5);
    CHECK(rep["cell"] == "U1");
    CHECK(rep["open_set"] == true);
    CHECK(rep["invariants"]["5"] == "1/4");

    json deg = invariant_report(pv(4, {0, 1}, 0));
    CHECK(deg["open_set"] == false);
    CHECK(!deg["vanished"].empty());

    json six = invariant_report(pv(5, {1, 0, 1}, 1));
    CHECK(six["cell"] == "U4");
    CHECK(six["closed_forms"]["dim6_rho3"] == "1");
    CHECK(six["invariants"]["5"] == "1");

    json seven = invariant_report(pv(6, {1, 0, 1, 1}, 0));
    CHECK(seven["cell"] == "U");
    CHECK(seven["closed_forms"]["dim7_rho3"] == "1");
    CHECK(seven["closed_forms"]["dim7_rho5"] == "0");
}

TEST_CASE("witness json carries the root description") {
    ParamVector p = pv(4, {0, 0}, 7);
    SearchResult sr = witness_search(p, family_by_name(5, "L(0,0,1)").params());
    REQUIRE(sr.witness.has_value());
    json w = witness_to_json(*sr.witness);
    CHECK(w["kind"] == "root");
    CHECK(w["root"]["degree"] == 2);
    CHECK(w["root"]["of"] == "1/7");
    RootExt back = root_ext_from_json(w["D"], 2, QiScalar::rational(1, 7));
    CHECK(back == sr.witness->D);
}

TEST_CASE("scalar strings inside json stay bit-exact") {
    QiScalar v(mpq_class("-123456789123456789/2"), mpq_class(7, 9));
    json j = param_to_json(pv(3, {v}, v * v));
    ParamVector back = param_from_json(j);
    CHECK(back.beta_at(3) == v);
    CHECK(back.gamma == v * v);
}
