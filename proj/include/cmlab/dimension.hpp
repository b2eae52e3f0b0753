#pragma once

#include "cmlab/presented_ring.hpp"

namespace cmlab::algebra {

// Krull dimension of the presented ring, computed from maximal sets of
// variables independent modulo the leading-term ideal of the defining basis.
// Requires a graded order; callers on other orders get a grevlex recompute.
// The zero ring reports -1.
int krull_dimension(const PresentedRingPtr& ring, Budget& budget);

// dimension of R/I for an ideal of the ring
int krull_dimension(const IdealHandle& I, Budget& budget);

} // namespace cmlab::algebra
