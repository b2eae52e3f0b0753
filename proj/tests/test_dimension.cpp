#include "doctest.h"

#include "cmlab/dimension.hpp"

using namespace cmlab;
using namespace cmlab::algebra;

namespace {

PresentedRingPtr quotient(std::vector<std::string> vars, const std::string& rels) {
    auto amb = make_ring(Field{0}, std::move(vars));
    if (rels.empty()) return PresentedRing::polynomial(amb);
    return PresentedRing::make(amb, parse_poly_list(amb, rels));
}

int dim_of(const PresentedRingPtr& R) {
    Budget b;
    return krull_dimension(R, b);
}

} // namespace

TEST_SUITE("dimension") {

TEST_CASE("polynomial rings have dimension nvars") {
    CHECK(dim_of(quotient({"x"}, "")) == 1);
    CHECK(dim_of(quotient({"x", "y", "z"}, "")) == 3);
}

TEST_CASE("union of two lines is a curve") {
    CHECK(dim_of(quotient({"x", "y"}, "x*y")) == 1);
}

TEST_CASE("hypersurface drops dimension by one") {
    CHECK(dim_of(quotient({"x", "y", "z"}, "x*z - y^2")) == 2);
}

TEST_CASE("artinian quotients have dimension zero") {
    CHECK(dim_of(quotient({"x"}, "x^2")) == 0);
    CHECK(dim_of(quotient({"x", "y"}, "x^2, y^3")) == 0);
}

TEST_CASE("zero ring reports minus one") {
    CHECK(dim_of(quotient({"x"}, "x, x - 1")) == -1);
}

TEST_CASE("embedded components do not raise the dimension") {
    CHECK(dim_of(quotient({"x", "y"}, "x^2, x*y")) == 1);
}

TEST_CASE("dimension of a quotient by an ideal handle") {
    auto R = quotient({"x", "y"}, "");
    Budget b;
    CHECK(krull_dimension(IdealHandle(R, parse_poly_list(R->ambient(), "x, y")), b) == 0);
    CHECK(krull_dimension(IdealHandle(R, parse_poly_list(R->ambient(), "x")), b) == 1);
    CHECK(krull_dimension(IdealHandle(R, {}), b) == 2);
}

TEST_CASE("dimension over a finite field") {
    auto amb = make_ring(Field{7}, {"x", "y"});
    auto R = PresentedRing::make(amb, parse_poly_list(amb, "x*y - 1"));
    Budget b;
    CHECK(krull_dimension(R, b) == 1);
}

TEST_CASE("lex-presented rings recompute under a graded order") {
    auto amb = make_ring(Field{0}, {"x", "y", "z"}, MonomialOrder::lex());
    auto R = PresentedRing::make(amb, parse_poly_list(amb, "x*z - y^2"));
    Budget b;
    CHECK(krull_dimension(R, b) == 2);
}

} // suite
