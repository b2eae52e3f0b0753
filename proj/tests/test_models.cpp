#include "doctest.h"

#include "cmlab/models/badring.hpp"
#include "cmlab/models/subring.hpp"
#include "cmlab/models/trivext.hpp"
#include "cmlab/models/valuation.hpp"

using namespace cmlab;
using namespace cmlab::algebra;
using namespace cmlab::models;

TEST_SUITE("models") {

TEST_CASE("valuation values compose lexicographically") {
    ValuationModel V;
    CHECK(V.value(V.parse("u^2*w - u*w^2")) == ValValue{1, 2});
    CHECK(V.value(V.parse("u^2/w")) == ValValue{2, -1});
    CHECK(V.value(V.pow(V.u(), 3)) == ValValue{3, 0});
    CHECK(V.eq(V.mul(V.div(V.u(), V.w()), V.w()), V.u()));
    CHECK_THROWS_AS(V.value(V.zero()), DomainError);
}

TEST_CASE("rank two membership goes beyond a single order") {
    ValuationModel V;
    auto f = V.parse("u^2/w"); // value (2, -1): in the ring despite the pole
    CHECK(V.in_ring(f));
    CHECK(V.in_maximal(f));
    CHECK(V.in_p(f));
    CHECK_FALSE(V.in_ring(V.parse("w/u"))); // value (-1, 1)
    CHECK(V.in_ring(V.one()));
    CHECK_FALSE(V.in_maximal(V.one()));
}

TEST_CASE("finitely generated ideals are principal") {
    ValuationModel V;
    std::vector<ValElem> uw = {V.u(), V.w()};
    auto g = V.principal_gen(uw);
    REQUIRE(g.has_value());
    CHECK(*g == 1); // w has the smaller value (0,1)
    CHECK(V.ideal_member(V.u(), {V.w()}));
    CHECK_FALSE(V.ideal_member(V.w(), {V.u()}));
}

TEST_CASE("valuation colon is principal with the value difference") {
    ValuationModel V;
    auto colon = V.ideal_colon({V.u()}, V.w());
    REQUIRE(colon.size() == 1);
    CHECK(V.value(colon[0]) == ValValue{1, -1});
}

TEST_CASE("heights follow the two primes") {
    ValuationModel V;
    CHECK(V.ideal_height({V.u()}) == Height{false, 1});
    CHECK(V.ideal_height({V.w()}) == Height{false, 2});
    CHECK(V.ideal_height({V.u(), V.w()}) == Height{false, 2});
    CHECK(V.ideal_height({V.one()}).infinite);
}

TEST_CASE("example 3.7 identities verify level by level") {
    ValuationModel V;
    Budget b;
    auto e = val_example37(V, 2, b);
    CHECK(e.n_max == 2);
    REQUIRE(e.levels.size() == 2);
    for (const auto& lvl : e.levels) {
        CHECK(lvl.h2_zero);
        CHECK(lvl.syzygy_identity);
        CHECK(lvl.boundary_identity);
    }
    CHECK(e.weakly_proregular);
    CHECK(e.height == Height{false, 2});
    CHECK_FALSE(e.parameter);
    CHECK(e.principal_identity);
    CHECK_THROWS_AS(val_example37(V, 0, b), DomainError);
}

TEST_CASE("valuation adapter rejects fractions outside the ring") {
    ValuationAdapter A;
    Budget b;
    CHECK_THROWS_AS(A.parse_elements("w/u", b), DomainError);
    auto ok = A.parse_elements("u^2/w", b);
    CHECK(ok.size() == 1);
}

TEST_CASE("valuation adapter verdicts match the curated example") {
    ValuationAdapter A;
    Budget b;
    auto u = A.parse_elements("u", b);
    auto w = A.parse_elements("w", b);
    seq::Seq uw = {u[0], w[0]};
    CHECK(A.dimension(b) == 2);
    CHECK(A.parameter(u, b).value);
    CHECK(A.parameter(w, b).value);
    auto pair = A.parameter(uw, b);
    CHECK_FALSE(pair.value);
    CHECK_FALSE(pair.reason.empty());
    auto wv = A.weakly_proregular(uw, 4, b);
    CHECK(wv.kind == seq::WprKind::CertifiedByModel);
    CHECK(wv.kind_str() == "certified-by-model");
    CHECK(A.sequence_grade(uw, b).value == 1);
    CHECK(A.pdepth(b).value == 1);
    CHECK(A.regular_step({}, w[0], b).nzd);
    CHECK_FALSE(A.regular_step({u[0]}, w[0], b).nzd);
}

TEST_CASE("trivial extension heights pass through the kernel") {
    auto amb = make_ring(Field{0}, {"x", "y"});
    auto base = PresentedRing::polynomial(amb);
    auto S = make_trivext(base, parse_poly_list(amb, "x, y"), 1);
    Budget b;
    CHECK(tx_height(S, {parse_poly(amb, "x")}, b) == Height{false, 1});
    CHECK(tx_height(S, parse_poly_list(amb, "x, y"), b) == Height{false, 2});
}

TEST_CASE("socle elements kill low ideals in the extension") {
    auto amb = make_ring(Field{0}, {"x", "y"});
    auto base = PresentedRing::polynomial(amb);
    auto S = make_trivext(base, parse_poly_list(amb, "x, y"), 1);
    Budget b;
    CHECK(tx_p_grade(S, {parse_poly(amb, "x")}, b).value == 0);
    CHECK(tx_p_grade(S, {parse_poly(amb, "y")}, b).value == 0);
    CHECK(tx_p_grade(S, parse_poly_list(amb, "x, y"), b).value == 2);
    CHECK(tx_parameter(S, parse_poly_list(amb, "x, y"), b).value);
}

TEST_CASE("extension depth collapses once the level reaches the dimension") {
    auto amb = make_ring(Field{0}, {"x", "y"});
    auto base = PresentedRing::polynomial(amb);
    Budget b;
    TrivExtAdapter low(make_trivext(base, parse_poly_list(amb, "x, y"), 1));
    CHECK(low.pdepth(b).value == 2);
    CHECK(low.dimension(b) == 2);
    TrivExtAdapter high(make_trivext(base, parse_poly_list(amb, "x, y"), 2));
    CHECK(high.pdepth(b).value == 0);
}

TEST_CASE("extension elements are zerodivisors against the socle") {
    auto amb = make_ring(Field{0}, {"x", "y"});
    auto base = PresentedRing::polynomial(amb);
    TrivExtAdapter A(make_trivext(base, parse_poly_list(amb, "x, y"), 1));
    Budget b;
    auto x = A.parse_elements("x", b);
    auto st = A.regular_step({}, x[0], b);
    CHECK_FALSE(st.nzd);
    CHECK(st.witness.find("k(") != std::string::npos);
}

TEST_CASE("truncated bad rings carry the graded relations") {
    Budget b;
    auto T = make_bad_ring(3, b);
    CHECK(T.N == 3);
    CHECK(T.ring->ambient()->nvars() == 4);
    CHECK(T.ring->relations().size() == 3);
    CHECK(T.ring->is_zero_elem(T.x * T.y[0]));
    CHECK(T.ring->is_zero_elem(T.x.pow(3) * T.y[2]));
    CHECK_FALSE(T.ring->is_zero_elem(T.x.pow(2) * T.y[2]));
    CHECK_THROWS_AS(make_bad_ring(0, b), DomainError);
    CHECK_THROWS_AS(make_bad_ring(13, b), SizeGuard);
}

TEST_CASE("annihilator chain of the bad element grows strictly") {
    Budget b;
    auto chain = bad_colon_chain(3, b);
    REQUIRE(chain.levels.size() == 3);
    CHECK(chain.levels[0].colon_basis == std::vector<std::string>{"y1", "x*y2", "x^2*y3"});
    CHECK(chain.levels[1].colon_basis == std::vector<std::string>{"y2", "y1", "x*y3"});
    CHECK(chain.levels[2].colon_basis == std::vector<std::string>{"y3", "y2", "y1"});
    CHECK(chain.levels[0].witness == "y1");
    CHECK(chain.levels[1].witness == "y2");
    CHECK(chain.levels[2].witness == "y3");
    for (const auto& lvl : chain.levels) CHECK(lvl.strict_vs_prev);
    CHECK(chain.strictly_increasing);
    CHECK(chain.stabilizes_at_N);
    CHECK_THROWS_AS(bad_colon_chain(1, b), DomainError);
}

TEST_CASE("limit adapter answers pure powers only") {
    BadRingLimitAdapter A(4);
    Budget b;
    auto x = A.parse_elements("x", b);
    CHECK(A.parse_elements("x^3", b).size() == 1);
    CHECK_THROWS_AS(A.parse_elements("y1", b), DomainError);
    CHECK_THROWS_AS(A.parse_elements("x + 1", b), DomainError);
    CHECK(A.height(x, b) == Height{false, 0});
    CHECK_FALSE(A.parameter(x, b).value);
    CHECK(A.sequence_grade(x, b).value == 0);
    CHECK_FALSE(A.regular_step({}, x[0], b).nzd);
    CHECK_THROWS_AS(A.dimension(b), DomainError);
    CHECK_THROWS_AS(A.pdepth(b), DomainError);
}

TEST_CASE("limit adapter certifies the counterexample") {
    BadRingLimitAdapter A(4);
    Budget b;
    auto x = A.parse_elements("x", b);
    auto w = A.weakly_proregular(x, 4, b);
    CHECK(w.kind == seq::WprKind::Counterexample);
    CHECK(w.kind_str() == "counterexample");
    CHECK_FALSE(w.affirmative());
    CHECK_FALSE(w.detail.empty());
}

TEST_CASE("subring membership is a constraint on the x free part") {
    SubringModel D(8);
    CHECK(D.member(D.parse("1 + x*y^2")));
    CHECK(D.member(D.parse("x^2 + x*y")));
    CHECK_FALSE(D.member(D.parse("y")));
    CHECK_FALSE(D.member(D.parse("x + y^2")));
    CHECK(SubringModel::monomial_in_d(0, 0));
    CHECK_FALSE(SubringModel::monomial_in_d(0, 1));
    CHECK(SubringModel::monomial_in_d(1, 3));
    CHECK(SubringModel::monomial_in_xyD(1, 1));
    CHECK(SubringModel::monomial_in_xyD(2, 1));
    CHECK_FALSE(SubringModel::monomial_in_xyD(1, 2));
    CHECK(SubringModel::monomial_in_xyS(1, 2));
    CHECK_FALSE(SubringModel::monomial_in_xyS(1, 0));
}

TEST_CASE("colon identities certify through the degree bound") {
    auto c = subring_colon_identities(8);
    CHECK(c.B == 8);
    CHECK(c.colon_x_is_xyS);
    CHECK(c.colon_x2_is_xyS);
    CHECK(c.witness_in_colon);
    CHECK(c.witness_in_xyS);
    CHECK(c.witness_outside_xyD);
    CHECK(c.xS_in_D);
    CHECK(c.x_xyS_in_xyD);
    CHECK(c.yS_cap_D_is_xyS);
    CHECK(c.x_powers_escape);
    CHECK(c.monomials_checked == 45);
    CHECK_FALSE(c.citation.empty());
}

TEST_CASE("subring guards the degree bound range") {
    CHECK_THROWS_AS(SubringModel(3), DomainError);
    CHECK_THROWS_AS(subring_colon_identities(70), SizeGuard);
}

} // suite
