#include "doctest.h"

#include "cmlab/poly.hpp"

#include <random>

using namespace cmlab;
using namespace cmlab::algebra;

namespace {

RingDescPtr qq_xy() { return make_ring(Field{0}, {"x", "y"}); }

Monomial mono(std::vector<std::uint32_t> exps) {
    Monomial m;
    m.e = std::move(exps);
    return m;
}

Poly rand_poly(const RingDescPtr& r, std::mt19937& rng) {
    Poly f = Poly::zero(r);
    int terms = int(rng() % 4);
    for (int t = 0; t <= terms; ++t) {
        long c = long(rng() % 7) - 3;
        std::vector<Term> one = {
            Term{mono({std::uint32_t(rng() % 4), std::uint32_t(rng() % 4)}),
                 Scalar(r->field, c)}};
        f = f + Poly::from_terms(r, one);
    }
    return f;
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("rational parse and print round trip") {
    auto r = qq_xy();
    Poly f = parse_poly(r, "(2/3)*x^2*y - x*y + 1/6");
    CHECK(f.str() == "2/3*x^2*y - x*y + 1/6");
    CHECK(parse_poly(r, f.str()).str() == f.str());
    CHECK(parse_poly(r, "x - x").is_zero());
    CHECK(parse_poly(r, "0").is_zero());
}

TEST_CASE("binomial cube expands with 1 3 3 1") {
    auto r = qq_xy();
    Poly f = parse_poly(r, "x + y").pow(3);
    CHECK(f.str() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
}

TEST_CASE("difference of squares") {
    auto r = qq_xy();
    Poly p = parse_poly(r, "x + y") * parse_poly(r, "x - y");
    CHECK(p == parse_poly(r, "x^2 - y^2"));
}

TEST_CASE("frobenius over GF(7)") {
    auto r = make_ring(Field{7}, {"x"});
    Poly f = parse_poly(r, "x + 1").pow(7);
    CHECK(f == parse_poly(r, "x^7 + 1"));
}

TEST_CASE("mod p coefficient normalization") {
    auto r = make_ring(Field{5}, {"x"});
    CHECK(parse_poly(r, "7*x") == parse_poly(r, "2*x"));
    CHECK(parse_poly(r, "5*x").is_zero());
    CHECK(parse_poly(r, "-1").str() == "4");
}

TEST_CASE("grevlex leading monomial prefers earlier variables on ties") {
    auto r = qq_xy();
    Poly f = parse_poly(r, "x*y^2 + x^2*y");
    CHECK(f.lt().mon == mono({2, 1}));
    CHECK(f.str() == "x^2*y + x*y^2");
}

TEST_CASE("lex order sorts by first variable") {
    auto r = make_ring(Field{0}, {"x", "y"}, MonomialOrder::lex());
    Poly f = parse_poly(r, "y^5 + x");
    CHECK(f.lt().mon == mono({1, 0}));
}

TEST_CASE("substitution") {
    auto r = qq_xy();
    Poly f = parse_poly(r, "x^2 + y");
    Poly g = f.substitute(r, {parse_poly(r, "y"), parse_poly(r, "1")});
    CHECK(g == parse_poly(r, "y^2 + 1"));
}

TEST_CASE("parse rejects malformed input") {
    auto r = qq_xy();
    CHECK_THROWS_AS(parse_poly(r, "x +* y"), ParseError);
    CHECK_THROWS_AS(parse_poly(r, "z + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly(r, "x^"), ParseError);
    CHECK_THROWS_AS(parse_poly(r, "(x"), ParseError);
}

TEST_CASE("scalar field mismatch is caught") {
    CHECK_THROWS_AS(Scalar(Field{0}, 1) + Scalar(Field{5}, 1), DomainError);
    CHECK_THROWS_AS(Scalar(Field{5}, 1).inverse() * Scalar(Field{7}, 1), DomainError);
    CHECK_THROWS_AS(Scalar(Field{5}, 0).inverse(), DomainError);
}

TEST_CASE("ring arithmetic laws on random samples") {
    auto r = qq_xy();
    std::mt19937 rng(20260815u);
    for (int round = 0; round < 60; ++round) {
        Poly f = rand_poly(r, rng), g = rand_poly(r, rng), h = rand_poly(r, rng);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK(f - f == Poly::zero(r));
        CHECK(parse_poly(r, f.str()) == f);
    }
}

TEST_CASE("transport between orders preserves the polynomial") {
    auto r = qq_xy();
    auto rlex = reorder_ring(r, MonomialOrder::lex());
    Poly f = parse_poly(r, "x*y^2 + x^2*y - 3");
    Poly g = f.transport(rlex);
    CHECK(g.transport(r) == f);
    CHECK(g.str() == f.transport(rlex).str());
}

} // suite
