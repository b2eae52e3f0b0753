#pragma once

#include <optional>

#include "cmlab/poly.hpp"

namespace cmlab::algebra {

// Desk-scale factor search.  Returns one nontrivial factor when any of the
// strategies hits: monomial content, perfect k-th power, univariate
// factorization (Kronecker over the rationals, root scan over prime fields),
// or a quadratic-in-one-variable split with square discriminant.  A nullopt
// answer is what "no factor found" certification means downstream.
std::optional<Poly> find_factor(const Poly& f, Budget& budget);

// exact k-th root if f is a perfect k-th power
std::optional<Poly> poly_kth_root(const Poly& f, std::uint32_t k);

// square root of a field element when it exists
std::optional<Scalar> scalar_sqrt(const Scalar& c);

} // namespace cmlab::algebra
