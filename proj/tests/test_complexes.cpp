#include "doctest.h"

#include "cmlab/complexes.hpp"

#include <random>

using namespace cmlab;
using namespace cmlab::algebra;

namespace {

PresentedRingPtr poly_ring(std::vector<std::string> vars) {
    return PresentedRing::polynomial(make_ring(Field{0}, std::move(vars)));
}

PresentedRingPtr cross_ring() {
    auto amb = make_ring(Field{0}, {"x", "y"});
    return PresentedRing::make(amb, parse_poly_list(amb, "x*y"));
}

} // namespace

TEST_SUITE("complexes") {

TEST_CASE("koszul ranks are binomial") {
    auto R = poly_ring({"x", "y", "z"});
    Budget b;
    auto K = koszul(R, parse_poly_list(R->ambient(), "x, y, z"), b);
    CHECK(K.cx->lo() == 0);
    CHECK(K.cx->hi() == 3);
    CHECK(K.cx->rank(0) == 1);
    CHECK(K.cx->rank(1) == 3);
    CHECK(K.cx->rank(2) == 3);
    CHECK(K.cx->rank(3) == 1);
}

TEST_CASE("koszul differentials square to zero") {
    auto R = poly_ring({"x", "y", "z"});
    Budget b;
    auto K = koszul(R, parse_poly_list(R->ambient(), "x + y, y*z, z^2 - x"), b);
    for (int d = K.cx->lo() + 2; d <= K.cx->hi(); ++d) {
        const Mat* d2 = K.cx->differential(d);
        const Mat* d1 = K.cx->differential(d - 1);
        REQUIRE(d1 != nullptr);
        REQUIRE(d2 != nullptr);
        CHECK(mat_is_zero(mat_mul(*d1, *d2, R, b), R, b));
    }
}

TEST_CASE("invalid complexes are rejected at construction") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto amb = R->ambient();
    Mat d1 = Mat::zero(amb, 1, 1);
    d1.at(0, 0) = parse_poly(amb, "x");
    Mat d2 = Mat::zero(amb, 1, 1);
    d2.at(0, 0) = parse_poly(amb, "y");
    CHECK_THROWS_AS(FreeComplex(R, 0, {1, 1, 1}, {d1, d2}, b), DomainError);
}

TEST_CASE("regular sequence has vanishing higher koszul homology") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    auto K = koszul(R, parse_poly_list(R->ambient(), "x, y"), b);
    auto M = ModulePresentation::free_module(R);
    CHECK(homology_is_zero(*K.cx, 1, M, b));
    CHECK(homology_is_zero(*K.cx, 2, M, b));
    CHECK_FALSE(homology_is_zero(*K.cx, 0, M, b)); // H0 = R/(x, y)
}

TEST_CASE("zerodivisor shows up in H1 with a witness") {
    auto R = cross_ring();
    Budget b;
    auto K = koszul(R, {R->parse("x")}, b);
    auto M = ModulePresentation::free_module(R);
    auto H = homology_at(*K.cx, 1, M, b);
    CHECK_FALSE(H.zero);
    REQUIRE(H.witness_index.has_value());
    CHECK_FALSE(H.witness_nf.is_zero());
}

TEST_CASE("kernel generators all map to zero") {
    auto R = poly_ring({"x", "y"});
    Budget b;
    Mat D = Mat::zero(R->ambient(), 1, 2);
    D.at(0, 0) = parse_poly(R->ambient(), "x");
    D.at(0, 1) = parse_poly(R->ambient(), "y");
    auto M = ModulePresentation::free_module(R);
    auto ker = kernel_mod_relations(D, M, b);
    REQUIRE_FALSE(ker.empty());
    for (const auto& v : ker) {
        auto img = mat_apply(D, v, R, b);
        for (const auto& p : img.c) CHECK(R->is_zero_elem(p));
    }
}

TEST_CASE("power map transition kills torsion homology") {
    auto R = cross_ring();
    Budget b;
    auto phi = koszul_power_map(R, {R->parse("x")}, 2, 1, b);
    auto M = ModulePresentation::free_module(R);
    auto w = induced_zero_on_homology(phi, 1, M, b);
    CHECK(w.zero);
}

TEST_CASE("identity power map keeps torsion homology alive") {
    auto R = cross_ring();
    Budget b;
    auto phi = koszul_power_map(R, {R->parse("x")}, 1, 1, b);
    auto M = ModulePresentation::free_module(R);
    auto w = induced_zero_on_homology(phi, 1, M, b);
    CHECK_FALSE(w.zero);
    REQUIRE(w.witness_index.has_value());
    CHECK_FALSE(w.witness_nf.is_zero());
}

TEST_CASE("power map rejects bad exponents") {
    auto R = poly_ring({"x"});
    Budget b;
    CHECK_THROWS_AS(koszul_power_map(R, {R->parse("x")}, 1, 2, b), DomainError);
    CHECK_THROWS_AS(koszul_power_map(R, {R->parse("x")}, 1, 0, b), DomainError);
}

TEST_CASE("chain maps must commute with the differentials") {
    auto R = poly_ring({"x"});
    Budget b;
    auto K = koszul(R, {R->parse("x")}, b);
    Mat c0 = Mat::zero(R->ambient(), 1, 1);
    c0.at(0, 0) = parse_poly(R->ambient(), "1");
    Mat c1 = Mat::zero(R->ambient(), 1, 1);
    c1.at(0, 0) = parse_poly(R->ambient(), "x");
    // identity in degree 0 against multiplication by x in degree 1 breaks the square
    CHECK_THROWS_AS(ChainMap(K.cx, K.cx, {c0, c1}, b), DomainError);
}

TEST_CASE("matrix transpose and tensor shapes") {
    auto R = poly_ring({"x", "y"});
    auto amb = R->ambient();
    Mat A = Mat::zero(amb, 2, 3);
    A.at(0, 1) = parse_poly(amb, "x");
    A.at(1, 2) = parse_poly(amb, "y");
    Mat T = A.transpose();
    CHECK(T.rows == 3);
    CHECK(T.cols == 2);
    CHECK(T.at(1, 0) == parse_poly(amb, "x"));
    CHECK(T.at(2, 1) == parse_poly(amb, "y"));
    Mat K = A.tensor_identity(2, amb);
    CHECK(K.rows == 4);
    CHECK(K.cols == 6);
}

TEST_CASE("cyclic module over the unit ideal is zero") {
    auto R = poly_ring({"x"});
    Budget b;
    auto Z = ModulePresentation::cyclic(R, {parse_poly(R->ambient(), "1")});
    CHECK(Z.is_zero(b));
    auto M = ModulePresentation::cyclic(R, {parse_poly(R->ambient(), "x")});
    CHECK_FALSE(M.is_zero(b));
}

TEST_CASE("random koszul complexes always square to zero") {
    auto R = poly_ring({"x", "y"});
    std::mt19937 rng(20260815u);
    const char* pool[] = {"x", "y", "x + y", "x*y", "x^2 - y", "y^2 + 1"};
    for (int round = 0; round < 10; ++round) {
        std::vector<Poly> seq;
        int len = 2 + int(rng() % 2);
        for (int i = 0; i < len; ++i) seq.push_back(R->parse(pool[rng() % 6]));
        Budget b;
        auto K = koszul(R, seq, b);
        for (int d = K.cx->lo() + 2; d <= K.cx->hi(); ++d)
            CHECK(mat_is_zero(mat_mul(*K.cx->differential(d - 1), *K.cx->differential(d), R, b), R, b));
    }
}

} // suite
