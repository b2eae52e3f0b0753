#include "doctest.h"

#include "cmlab/grade.hpp"

using namespace cmlab;
using namespace cmlab::algebra;
using namespace cmlab::grade;

namespace {

PresentedRingPtr poly_ring(std::vector<std::string> vars) {
    return PresentedRing::polynomial(make_ring(Field{0}, std::move(vars)));
}

PresentedRingPtr cross_ring() {
    auto amb = make_ring(Field{0}, {"x", "y"});
    return PresentedRing::make(amb, parse_poly_list(amb, "x*y"));
}

} // namespace

TEST_SUITE("grade") {

TEST_CASE("maximal ideal of the plane has grade two") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto g = p_grade(R, parse_poly_list(R->ambient(), "x, y"), F, b);
    CHECK_FALSE(g.infinite);
    CHECK(g.value == 2);
    CHECK(g.route == "koszul");
    CHECK(g.str() == "2");
}

TEST_CASE("koszul and ext routes agree") {
    auto R = poly_ring({"x", "y", "z"});
    Budget b;
    auto F = ModulePresentation::free_module(R);
    IdealHandle I(R, parse_poly_list(R->ambient(), "x*y, y*z"));
    auto pg = p_grade(I, F, b);
    auto cg = classical_grade(I, F, b);
    CHECK(cg.route == "ext");
    CHECK(pg.same_value(cg));
    CHECK(pg.value == 1);
}

TEST_CASE("unit ideal has infinite grade") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto g = p_grade(R, {R->parse("1")}, F, b);
    CHECK(g.infinite);
    CHECK(g.str() == "infinity");
    auto c = classical_grade(IdealHandle(R, {R->parse("x - x + 1")}), F, b);
    CHECK(c.infinite);
}

TEST_CASE("zerodivisor ideals have grade zero") {
    auto R = cross_ring();
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto g = p_grade(R, {R->parse("x")}, F, b);
    CHECK(g.value == 0);
}

TEST_CASE("grade of the whole cross is one") {
    auto R = cross_ring();
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto g = p_grade(R, parse_poly_list(R->ambient(), "x, y"), F, b);
    CHECK(g.value == 1);
}

TEST_CASE("vanishing profile brackets the grade") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto prof = cech_vanishing_profile(R, parse_poly_list(R->ambient(), "x, y"), F, b);
    CHECK(prof.grade.value == 2);
    REQUIRE(prof.by_degree.size() == 3);
    CHECK(prof.by_degree[0] == Vanish::Vanishes);
    CHECK(prof.by_degree[1] == Vanish::Vanishes);
    CHECK(prof.by_degree[2] == Vanish::NonZero);
}

TEST_CASE("profile of a grade zero sequence") {
    auto R = cross_ring();
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto prof = cech_vanishing_profile(R, {R->parse("x")}, F, b);
    CHECK(prof.grade.value == 0);
    REQUIRE(prof.by_degree.size() == 2);
    CHECK(prof.by_degree[0] == Vanish::NonZero);
}

TEST_CASE("depth of a polynomial ring equals its dimension") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto d = p_depth(R, parse_poly_list(R->ambient(), "x, y"), F, b);
    CHECK(d.value == 2);
}

TEST_CASE("depth drops on the cross") {
    auto R = cross_ring();
    Budget b;
    auto F = ModulePresentation::free_module(R);
    auto d = p_depth(R, parse_poly_list(R->ambient(), "x, y"), F, b);
    CHECK(d.value == 1);
}

TEST_CASE("grade against a nonfree module") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto M = ModulePresentation::cyclic(R, {R->parse("x")});
    auto g = p_grade(R, {R->parse("x")}, M, b);
    CHECK(g.value == 0); // x kills all of R/(x)
    auto h = p_grade(R, {R->parse("y")}, M, b);
    CHECK(h.value == 1);
}

TEST_CASE("hochster element interleaves the sequence") {
    auto R = poly_ring({"x", "y", "z"});
    Budget b;
    auto hd = hochster_element(R, parse_poly_list(R->ambient(), "x, y, z"), b);
    CHECK(hd.extended->ambient()->nvars() == 4);
    auto t = Poly::variable(hd.extended->ambient(), 3);
    auto x = Poly::variable(hd.extended->ambient(), 0);
    auto y = Poly::variable(hd.extended->ambient(), 1);
    auto z = Poly::variable(hd.extended->ambient(), 2);
    CHECK(hd.element == x + y * t + z * t.pow(2));
}

TEST_CASE("hochster equivalence on the cross") {
    auto R = cross_ring();
    Budget b;
    auto both = hochster_check(R, parse_poly_list(R->ambient(), "x, y"), {}, b);
    CHECK(both.annihilator_zero);
    CHECK(both.nzd_on_extension);
    auto one = hochster_check(R, {R->parse("x")}, {}, b);
    CHECK_FALSE(one.annihilator_zero);
    CHECK_FALSE(one.nzd_on_extension);
}

TEST_CASE("localized depth probe") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    IdealHandle I(R, parse_poly_list(R->ambient(), "x*y"));
    CHECK(localized_depth_zero(I, IdealHandle(R, parse_poly_list(R->ambient(), "x")), b));
    CHECK_FALSE(localized_depth_zero(I, IdealHandle(R, parse_poly_list(R->ambient(), "x, y")), b));
}

} // suite
