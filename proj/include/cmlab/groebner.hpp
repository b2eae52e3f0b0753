#pragma once

#include <vector>

#include "cmlab/poly.hpp"

namespace cmlab::algebra {

// Single-step bookkeeping lives in Budget (errors.hpp); every top-level call
// below takes the budget it charges against.

// remainder of f on division by the list G (not required to be a basis)
Poly reduce(const Poly& f, const std::vector<Poly>& G, Budget& budget);

// remainder plus the division quotients: f = sum q[i] * G[i] + r
struct Division {
    Poly r;
    std::vector<Poly> q;
};
Division reduce_tracked(const Poly& f, const std::vector<Poly>& G, Budget& budget);

// reduced monic Groebner basis, canonically sorted (ascending leading
// monomial); the zero ideal yields the empty list
std::vector<Poly> groebner_basis(std::vector<Poly> gens, Budget& budget);

// S-polynomial, exposed for tests
Poly s_poly(const Poly& f, const Poly& g);

bool is_groebner_basis(const std::vector<Poly>& G, Budget& budget);

} // namespace cmlab::algebra
