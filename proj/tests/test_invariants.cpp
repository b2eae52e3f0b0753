#include "doctest.h"

#include "cmlab/invariants.hpp"

#include <random>

using namespace cmlab;
using namespace cmlab::algebra;
using namespace cmlab::invariants;

namespace {

LinearGroupAction sign_action() {
    auto r = make_ring(Field{0}, {"x", "y"});
    return action_from_generators(r, {{{Scalar(Field{0}, -1), Scalar(Field{0}, 0)},
                                       {Scalar(Field{0}, 0), Scalar(Field{0}, -1)}}});
}

LinearGroupAction mod7_diag() {
    auto r = make_ring(Field{7}, {"x", "y"});
    return action_from_generators(r, {{{Scalar(Field{7}, 2), Scalar(Field{7}, 0)},
                                       {Scalar(Field{7}, 0), Scalar(Field{7}, 4)}}});
}

} // namespace

TEST_SUITE("invariants") {

TEST_CASE("generators close into the full group") {
    auto G = sign_action();
    CHECK(G.order() == 2);
    CHECK(mod7_diag().order() == 3);
}

TEST_CASE("modular order must stay invertible") {
    auto r = make_ring(Field{2}, {"x", "y"});
    std::vector<Matrix> swap_gen = {{{Scalar(Field{2}, 0), Scalar(Field{2}, 1)},
                                     {Scalar(Field{2}, 1), Scalar(Field{2}, 0)}}};
    CHECK_THROWS_AS(action_from_generators(r, swap_gen), DomainError);
}

TEST_CASE("reynolds averages onto the fixed subring") {
    auto G = sign_action();
    Budget b;
    auto r = G.ring;
    CHECK(reynolds(G, parse_poly(r, "x^2"), b) == parse_poly(r, "x^2"));
    CHECK(reynolds(G, parse_poly(r, "x"), b).is_zero());
    CHECK(reynolds(G, parse_poly(r, "x*y + x"), b) == parse_poly(r, "x*y"));
}

TEST_CASE("sign invariants are the classical cone") {
    auto G = sign_action();
    Budget b;
    auto p = invariant_presentation(G, 2, b);
    CHECK_FALSE(p.bound_too_small);
    CHECK(p.names == std::vector<std::string>{"A", "B", "C"});
    REQUIRE(p.generators.size() == 3);
    CHECK(p.generators[0] == parse_poly(G.ring, "x^2"));
    CHECK(p.generators[1] == parse_poly(G.ring, "x*y"));
    CHECK(p.generators[2] == parse_poly(G.ring, "y^2"));
    REQUIRE(p.relations.size() == 1);
    auto amb = p.ring->ambient();
    IdealHandle got(PresentedRing::polynomial(amb), p.relations);
    IdealHandle want(PresentedRing::polynomial(amb), {parse_poly(amb, "B^2 - A*C")});
    CHECK(got == want);
}

TEST_CASE("degree bound below the group order is flagged") {
    auto G = sign_action();
    Budget b;
    auto p = invariant_presentation(G, 1, b);
    CHECK(p.bound_too_small);
    CHECK_FALSE(p.note.empty());
}

TEST_CASE("modular cyclic invariants close with the cube relation") {
    auto G = mod7_diag();
    Budget b;
    auto p = invariant_presentation(G, 3, b);
    CHECK_FALSE(p.bound_too_small);
    REQUIRE(p.generators.size() == 3);
    CHECK(p.generators[0] == parse_poly(G.ring, "x^3"));
    CHECK(p.generators[1] == parse_poly(G.ring, "x*y"));
    CHECK(p.generators[2] == parse_poly(G.ring, "y^3"));
    REQUIRE(p.relations.size() == 1);
    auto amb = p.ring->ambient();
    IdealHandle got(PresentedRing::polynomial(amb), p.relations);
    IdealHandle want(PresentedRing::polynomial(amb), {parse_poly(amb, "B^3 - A*C")});
    CHECK(got == want);
}

TEST_CASE("retraction laws hold on sampled polynomials") {
    Budget b;
    auto lawsQ = reynolds_laws(sign_action(), 40, 20260815u, b);
    CHECK(lawsQ.samples == 40);
    CHECK(lawsQ.idempotent);
    CHECK(lawsQ.action_invariant);
    CHECK(lawsQ.retraction_linear);
    CHECK(lawsQ.all());
    auto laws7 = reynolds_laws(mod7_diag(), 40, 20260815u, b);
    CHECK(laws7.all());
}

TEST_CASE("full scenario finds no violation for the sign cone") {
    Budget b;
    auto sc = invariant_cm_scenario(sign_action(), {"A, C", "A + C, B", "A", "B", "C"},
                                    30, b);
    CHECK_FALSE(sc.cm.violation_found);
    CHECK(sc.cm.sequences_checked > 0);
    CHECK(sc.cm.sps_found == sc.cm.regular_confirmed);
    CHECK(sc.laws.all());
    CHECK_FALSE(sc.presentation.bound_too_small);
    CHECK_FALSE(sc.citation.empty());
}

TEST_CASE("scenario guard rejects more than two variables") {
    auto r = make_ring(Field{0}, {"x", "y", "z"});
    std::vector<std::vector<std::vector<long>>> mats = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
    auto G = action_from_ints(r, mats);
    Budget b;
    CHECK_THROWS_AS(invariant_cm_scenario(G, {"A"}, 10, b), DomainError);
}

TEST_CASE("action application respects products and inverses") {
    auto G = sign_action();
    Budget b;
    auto r = G.ring;
    std::mt19937 rng(20260815u);
    const char* pool[] = {"x", "y", "x + y", "x^2 - y", "x*y + 1", "y^3"};
    for (int round = 0; round < 20; ++round) {
        Poly f = parse_poly(r, pool[rng() % 6]);
        Poly g = parse_poly(r, pool[rng() % 6]);
        for (std::size_t k = 0; k < G.order(); ++k) {
            CHECK(apply_action(G, k, f * g, b) ==
                  apply_action(G, k, f, b) * apply_action(G, k, g, b));
            // every element of the sign group squares to the identity
            CHECK(apply_action(G, k, apply_action(G, k, f, b), b) == f);
        }
    }
}

} // suite
