#pragma once

#include "cmlab/presented_ring.hpp"

namespace cmlab::algebra {

// Minimal primes over I by recursive factor splitting plus saturation.  An
// ideal none of whose reduced basis elements factors is certified prime at
// desk scale; the input guard keeps that certification honest.
std::vector<IdealHandle> minimal_primes(const IdealHandle& I, Budget& budget);

// minimal primes of the ring itself (of its zero ideal)
std::vector<IdealHandle> minimal_primes(const PresentedRingPtr& ring, Budget& budget);

struct Height {
    bool infinite = false; // unit ideal only
    int value = 0;

    bool operator==(const Height&) const = default;
    std::string str() const { return infinite ? "infinity" : std::to_string(value); }
};

// height of a prime via dimension differences over the minimal primes of the
// ring it sits in (catenary affine reasoning)
Height prime_height(const IdealHandle& p, Budget& budget);

// min over the minimal primes of I; infinite exactly for the unit ideal
Height ideal_height(const IdealHandle& I, Budget& budget);

} // namespace cmlab::algebra
