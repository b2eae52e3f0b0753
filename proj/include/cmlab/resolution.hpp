#pragma once

#include "cmlab/complexes.hpp"

namespace cmlab::algebra {

struct Resolution {
    std::shared_ptr<FreeComplex> cx; // F_0 in degree 0
    bool complete = false;           // kernel reached zero within the cap
};

// Free resolution by iterated syzygies.  Generating sets are pruned of
// redundant members at every step, which yields a minimal resolution for
// graded input over a polynomial ring.
Resolution free_resolution(const ModulePresentation& M, std::size_t max_length,
                           Budget& budget);

// Ext^i(R/I, M) vanishing via a resolution of R/I and the transposed
// differentials acting on M-coordinates.
bool ext_is_zero(std::size_t i, const IdealHandle& I, const ModulePresentation& M,
                 Budget& budget);

struct PdResult {
    std::optional<int> pd; // empty means flagged unknown
    std::string note;
};

// projective dimension from the minimal graded resolution; polynomial ambient
// and consistently graded presentation required, otherwise flagged unknown
PdResult projective_dimension_graded(const ModulePresentation& M, Budget& budget);

// can consistent degree shifts be assigned to the presentation?
bool presentation_graded(const ModulePresentation& M);

} // namespace cmlab::algebra
