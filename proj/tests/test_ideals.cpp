#include "doctest.h"

#include "cmlab/presented_ring.hpp"

using namespace cmlab;
using namespace cmlab::algebra;

namespace {

PresentedRingPtr poly_ring(std::vector<std::string> vars) {
    return PresentedRing::polynomial(make_ring(Field{0}, std::move(vars)));
}

IdealHandle ideal(const PresentedRingPtr& R, const std::string& gens) {
    return IdealHandle(R, parse_poly_list(R->ambient(), gens));
}

} // namespace

TEST_SUITE("ideals") {

TEST_CASE("colon by an element") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto q = ideal_colon(ideal(R, "x*y"), R->parse("x"), b);
    CHECK(q == ideal(R, "y"));
}

TEST_CASE("colon sees the ring relations") {
    auto amb = make_ring(Field{0}, {"x", "y"});
    auto R = PresentedRing::make(amb, parse_poly_list(amb, "x*y"));
    Budget b;
    auto q = ideal_colon(IdealHandle(R, {}), R->parse("x"), b);
    CHECK(q == IdealHandle(R, {R->parse("y")}));
}

TEST_CASE("saturation strips every power") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto s = ideal_saturate(ideal(R, "x^2*y, x*y^2"), R->parse("x"), b);
    CHECK(s == ideal(R, "y"));
}

TEST_CASE("intersection of coordinate axes") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    CHECK(ideal_intersect(ideal(R, "x"), ideal(R, "y"), b) == ideal(R, "x*y"));
}

TEST_CASE("colon by an ideal") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto q = ideal_colon_ideal(ideal(R, "x^2, x*y"), parse_poly_list(R->ambient(), "x"), b);
    CHECK(q == ideal(R, "x, y"));
}

TEST_CASE("membership uses the reduced basis") {
    auto R = poly_ring({"x", "y"});
    auto I = ideal(R, "x^2, y^3");
    CHECK(I.contains(R->parse("x^2*y + y^4")));
    CHECK_FALSE(I.contains(R->parse("x*y")));
}

TEST_CASE("handles compare by basis not by generators") {
    auto R = poly_ring({"x", "y"});
    CHECK(ideal(R, "x, y") == ideal(R, "y, x + y"));
    CHECK(ideal(R, "x") != ideal(R, "x^2"));
}

TEST_CASE("sum of ideals") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    CHECK(ideal_sum(ideal(R, "x"), ideal(R, "y"), b) == ideal(R, "x, y"));
    CHECK(ideal_sum(ideal(R, "x^2"), parse_poly_list(R->ambient(), "x"), b) == ideal(R, "x"));
}

TEST_CASE("normal form in a quotient") {
    auto amb = make_ring(Field{0}, {"x", "y"});
    auto R = PresentedRing::make(amb, parse_poly_list(amb, "x^2 - y"));
    CHECK(R->parse("x^4").str() == "y^2");
    CHECK(R->is_zero_elem(parse_poly(amb, "x^2 - y")));
    CHECK_FALSE(R->is_zero_ring());
}

TEST_CASE("zero ring is recognized") {
    auto amb = make_ring(Field{0}, {"x"});
    auto R = PresentedRing::make(amb, parse_poly_list(amb, "x, x - 1"));
    CHECK(R->is_zero_ring());
}

TEST_CASE("ideal str lists normal-formed generators in input order") {
    auto R = poly_ring({"x", "y"});
    CHECK(ideal(R, "y, x + y").str() == "(y, x + y)");
    CHECK(ideal(R, "0, x").str() == "(x)");
    auto amb = make_ring(Field{0}, {"x", "y"});
    auto Q = PresentedRing::make(amb, parse_poly_list(amb, "x^2 - y"));
    CHECK(IdealHandle(Q, {parse_poly(amb, "x^2")}).str() == "(y)");
}

} // suite
