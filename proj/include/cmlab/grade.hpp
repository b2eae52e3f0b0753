#pragma once

#include "cmlab/presented_ring.hpp"
#include "cmlab/resolution.hpp"

namespace cmlab::grade {

using cmlab::Budget;
using algebra::IdealHandle;
using algebra::ModulePresentation;
using algebra::Poly;
using algebra::PresentedRingPtr;

struct GradeValue {
    bool infinite = false;
    int value = 0;
    std::string route; // "koszul" | "ext" | "model"

    bool same_value(const GradeValue& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string str() const { return infinite ? "infinity" : std::to_string(value); }
};

// polynomial-grade of the ideal generated by `gens` on M, from the top of the
// Koszul homology of that generating sequence
GradeValue p_grade(const PresentedRingPtr& ring, const std::vector<Poly>& gens,
                   const ModulePresentation& M, Budget& budget);

GradeValue p_grade(const IdealHandle& I, const ModulePresentation& M, Budget& budget);

enum class Vanish { Vanishes, NonZero, Undetermined };

// verdicts for local cohomology degrees 0..len(gens); everything above the
// generator count vanishes and is not listed
struct VanishingProfile {
    GradeValue grade;
    std::vector<Vanish> by_degree;
    std::string str() const;
};

VanishingProfile cech_vanishing_profile(const PresentedRingPtr& ring,
                                        const std::vector<Poly>& gens,
                                        const ModulePresentation& M, Budget& budget);

// least nonvanishing Ext^i(R/I, M); agrees with p_grade over the rings here
GradeValue classical_grade(const IdealHandle& I, const ModulePresentation& M,
                           Budget& budget);

struct HochsterData {
    PresentedRingPtr extended; // base ring with one fresh variable appended
    std::string var;
    Poly element; // x_1 + x_2 t + ... + x_l t^(l-1)
};

HochsterData hochster_element(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                              Budget& budget);

// the equivalence the element is for: (0 : I) = 0 on R/K iff the element is
// a non-zerodivisor on (R/K)[t]
struct HochsterCheck {
    HochsterData data;
    bool annihilator_zero;
    bool nzd_on_extension;
};

HochsterCheck hochster_check(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                             const std::vector<Poly>& module_ideal, Budget& budget);

// depth against the distinguished maximal ideal
GradeValue p_depth(const PresentedRingPtr& ring, const std::vector<Poly>& max_ideal,
                   const ModulePresentation& M, Budget& budget);

// does R/I localized at the prime p have depth zero?  Exact probe via the
// annihilator (I : p) and per-generator annihilator containment.
bool localized_depth_zero(const IdealHandle& I, const IdealHandle& p, Budget& budget);

} // namespace cmlab::grade
