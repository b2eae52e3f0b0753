#include "doctest.h"

#include "cmlab/sequences.hpp"

using namespace cmlab;
using namespace cmlab::algebra;
using namespace cmlab::seq;

namespace {

PresentedRingAdapter plane3() {
    return PresentedRingAdapter(
        PresentedRing::polynomial(make_ring(Field{0}, {"x", "y", "z"})));
}

PresentedRingAdapter cross() {
    auto amb = make_ring(Field{0}, {"x", "y"});
    return PresentedRingAdapter(PresentedRing::make(amb, parse_poly_list(amb, "x*y")));
}

} // namespace

TEST_SUITE("sequences") {

TEST_CASE("coordinate sequence is everything at once") {
    auto A = plane3();
    Budget b;
    auto s = A.parse_elements("x, y, z", b);
    auto reg = is_regular_sequence(A, s, b);
    CHECK(reg.value);
    CHECK(reg.failing_step == 0);
    auto par = is_parameter_sequence(A, s, b);
    CHECK(par.value);
    CHECK(par.height == Height{false, 3});
    auto sps = is_strong_parameter_sequence(A, s, b);
    CHECK(sps.value);
    CHECK(sps.trace.size() == 3);
    auto w = is_weakly_proregular(A, s, 4, b);
    CHECK(w.kind == WprKind::CertifiedNoetherian);
    CHECK(w.kind_str() == "certified-noetherian");
    CHECK(w.citation == "Thm 2.3");
}

TEST_CASE("repetition breaks regularity at the recorded step") {
    auto A = plane3();
    Budget b;
    auto s = A.parse_elements("x, x*y", b);
    auto reg = is_regular_sequence(A, s, b);
    CHECK_FALSE(reg.value);
    CHECK(reg.failing_step == 2);
    CHECK_FALSE(reg.witness.empty());
    auto par = is_parameter_sequence(A, s, b);
    CHECK_FALSE(par.value);
    CHECK(par.height == Height{false, 1});
    CHECK(par.citation == "Remark 3.2");
}

TEST_CASE("permutation sensitivity of regularity") {
    auto A = plane3();
    Budget b;
    auto tail = A.parse_elements("y*(1 - x), z*(1 - x)", b);
    auto reg = is_regular_sequence(A, tail, b);
    CHECK_FALSE(reg.value);
    CHECK(reg.failing_step == 2);
    CHECK(reg.witness == "y");
    auto full = A.parse_elements("x, y*(1 - x), z*(1 - x)", b);
    CHECK(is_regular_sequence(A, full, b).value);
    CHECK_FALSE(is_parameter_sequence(A, tail, b).value);
    CHECK(is_strong_parameter_sequence(A, full, b).value);
}

TEST_CASE("improper sequences are rejected with the flag") {
    auto A = plane3();
    Budget b;
    auto s = A.parse_elements("x, x - 1", b);
    auto reg = is_regular_sequence(A, s, b);
    CHECK_FALSE(reg.value);
    CHECK(reg.improper);
    auto par = is_parameter_sequence(A, s, b);
    CHECK_FALSE(par.value);
}

TEST_CASE("strong parameter trace localizes the failure") {
    auto A = plane3();
    Budget b;
    auto s = A.parse_elements("y*(1 - x), z*(1 - x)", b);
    auto sps = is_strong_parameter_sequence(A, s, b);
    CHECK_FALSE(sps.value);
    CHECK(sps.failing_prefix == 2);
    REQUIRE(sps.trace.size() == 2);
    CHECK(sps.trace[0].value);
    CHECK_FALSE(sps.trace[1].value);
    CHECK(sps.trace[1].height == Height{false, 1});
}

TEST_CASE("honest koszul power search agrees on noetherian rings") {
    auto A = plane3();
    Budget b;
    auto s = A.parse_elements("x, y", b);
    auto w = A.wpr_by_search(s, 3, b);
    CHECK(w.kind == WprKind::VerifiedUpToBound);
    CHECK(w.level == 3);
    CHECK(w.bound == 3);
}

TEST_CASE("power search sees the vanishing transition on the cross") {
    auto A = cross();
    Budget b;
    auto s = A.parse_elements("x", b);
    auto w = A.wpr_by_search(s, 3, b);
    CHECK(w.kind == WprKind::VerifiedUpToBound);
    // level 3 would need the map from level 4, which sits outside the bound
    CHECK(w.level == 2);
    CHECK(w.bound == 3);
    CHECK(w.detail == "zero maps found at (n=1,m=2) (n=2,m=3) ");
}

TEST_CASE("sequence report carries prefixes and verdicts") {
    auto A = cross();
    Budget b;
    auto s = A.parse_elements("x - y, x + y", b);
    auto rep = sequence_report(A, s, 3, true, b);
    CHECK(rep.elements == std::vector<std::string>{"x - y", "x + y"});
    REQUIRE(rep.prefixes.size() == 2);
    CHECK(rep.prefixes[0].length == 1);
    CHECK(rep.prefixes[0].parameter.value);
    REQUIRE(rep.prefixes[0].grade.has_value());
    CHECK(rep.prefixes[0].grade->value == 1);
    CHECK(rep.prefixes[1].length == 2);
    CHECK_FALSE(rep.prefixes[1].parameter.value); // dim is 1, pairs cannot be parameters
    CHECK_FALSE(rep.strong_parameter);
    CHECK(rep.regular.value == (rep.regular.failing_step == 0));
}

TEST_CASE("pool enumeration is ordered tuples of distinct indices") {
    auto t = enumerate_pool(3, 2);
    REQUIRE(t.size() == 9);
    CHECK(t[0] == Seq{0});
    CHECK(t[1] == Seq{1});
    CHECK(t[2] == Seq{2});
    CHECK(t[3] == Seq{0, 1});
    CHECK(t[4] == Seq{0, 2});
    CHECK(t[5] == Seq{1, 0});
    CHECK(t[8] == Seq{2, 1});
    CHECK(enumerate_pool(4, 3).size() == 4 + 12 + 24);
}

TEST_CASE("cross ring passes the pool probe") {
    auto A = cross();
    Budget b;
    std::vector<Seq> pool;
    for (auto& text : {"x", "y", "x - y", "x + y"}) {
        auto e = A.parse_elements(text, b);
        pool.push_back(e);
    }
    std::vector<Seq> tuples;
    for (auto& s : enumerate_pool(4, 2)) {
        Seq t;
        for (auto i : s) t.push_back(pool[i][0]);
        tuples.push_back(t);
    }
    CmMemo memo;
    auto v = cohen_macaulay_verdict(A, tuples, b, &memo);
    CHECK_FALSE(v.violation_found);
    CHECK(v.sequences_checked == tuples.size());
    CHECK(v.sps_found > 0);
    CHECK(v.sps_found == v.regular_confirmed);
    CHECK(memo.parameter.size() > 0);
}

TEST_CASE("embedded prime produces a certified violation") {
    auto amb = make_ring(Field{0}, {"x", "y"});
    PresentedRingAdapter A(PresentedRing::make(amb, parse_poly_list(amb, "x^2, x*y")));
    Budget b;
    auto y = A.parse_elements("y", b);
    auto v = cohen_macaulay_verdict(A, {y}, b);
    CHECK(v.violation_found);
    REQUIRE(v.violation.has_value());
    CHECK(v.violation->elements == std::vector<std::string>{"y"});
    CHECK(v.violation->length == 1);
    CHECK(v.violation->grade.value == 0);
    CHECK(v.violation->citation == "Def 4.1; Prop 4.2");
}

TEST_CASE("unmixedness probe finds the embedded witness") {
    auto R = PresentedRing::polynomial(make_ring(Field{0}, {"x", "y"}));
    Budget b;
    IdealHandle I(R, parse_poly_list(R->ambient(), "x^2, x*y"));
    auto u = unmixedness_probe(I, 2, b);
    CHECK(u.witness_found);
    CHECK(u.witness == "x");
    CHECK(u.ideal_height == Height{false, 1});
    CHECK(u.colon_height == Height{false, 2});
    CHECK(u.colon_str == "(y, x)");
}

TEST_CASE("unmixed ideals report the candidates tried") {
    auto R = PresentedRing::polynomial(make_ring(Field{0}, {"x", "y"}));
    Budget b;
    IdealHandle I(R, parse_poly_list(R->ambient(), "x*y"));
    auto u = unmixedness_probe(I, 2, b);
    CHECK_FALSE(u.witness_found);
    CHECK(u.candidates_tried == 5);
}

TEST_CASE("locality reduction covers every minimal prime of the ideal") {
    auto A = plane3();
    Budget b;
    auto s = A.parse_elements("x*y, z", b);
    auto plan = locality_reduction(A, s, b);
    REQUIRE(plan.size() == 2); // primes (x, z) and (y, z)
    for (const auto& entry : plan) {
        CHECK(entry.locally_regular);
        REQUIRE(entry.steps.size() == 2);
        for (const auto& st : entry.steps) CHECK(st.locally_regular);
    }
}

TEST_CASE("locality reduction reports the obstruction") {
    auto A = cross();
    Budget b;
    auto s = A.parse_elements("x", b);
    auto plan = locality_reduction(A, s, b);
    REQUIRE(plan.size() == 1);
    REQUIRE(plan[0].steps.size() == 1);
    CHECK_FALSE(plan[0].locally_regular);
    CHECK_FALSE(plan[0].steps[0].locally_regular);
    CHECK(plan[0].steps[0].obstruction == "y");
}

} // suite
