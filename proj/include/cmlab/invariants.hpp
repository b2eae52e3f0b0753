#pragma once

#include "cmlab/sequences.hpp"

namespace cmlab::invariants {

using cmlab::Budget;
using algebra::Poly;
using algebra::PresentedRingPtr;
using algebra::RingDescPtr;
using algebra::Scalar;

using Matrix = std::vector<std::vector<Scalar>>; // row i, column j

// Finite matrix group acting linearly: x_j maps to sum_i g[i][j] x_i.
// make() checks squareness, the identity, closure, and that the group order
// is invertible in the coefficient field.
struct LinearGroupAction {
    RingDescPtr ring;
    std::vector<Matrix> mats;

    static LinearGroupAction make(RingDescPtr ring, std::vector<Matrix> mats);
    std::size_t order() const { return mats.size(); }
};

// integer-entry convenience constructor
LinearGroupAction action_from_ints(const RingDescPtr& ring,
                                   const std::vector<std::vector<std::vector<long>>>& mats);

// close the generating matrices under products (identity added), then make()
LinearGroupAction action_from_generators(const RingDescPtr& ring, std::vector<Matrix> gens);

Poly apply_action(const LinearGroupAction& G, std::size_t g, const Poly& f, Budget& budget);

// averaging operator (1/|G|) sum_g g.f
Poly reynolds(const LinearGroupAction& G, const Poly& f, Budget& budget);

struct InvariantPresentation {
    std::vector<Poly> generators;   // fundamental invariants, leading monomials
                                    // descending in lex
    std::vector<std::string> names; // A, B, C, ... matching generators
    std::vector<Poly> relations;    // in the ambient of `ring`
    PresentedRingPtr ring;          // QQ[A,...]/(relations)
    int degree_bound = 0;
    bool bound_too_small = false;   // bound below the group order
    std::string note;
};

InvariantPresentation invariant_presentation(const LinearGroupAction& G, int degree_bound,
                                             Budget& budget);

struct ReynoldsLaws {
    int samples = 0;
    std::uint32_t seed = 0;
    bool idempotent = false;        // rho(rho(f)) = rho(f)
    bool action_invariant = false;  // rho(g.f) = rho(f)
    bool retraction_linear = false; // rho(rho(h) f) = rho(h) rho(f)
    bool all() const { return idempotent && action_invariant && retraction_linear; }
};

ReynoldsLaws reynolds_laws(const LinearGroupAction& G, int samples, std::uint32_t seed,
                           Budget& budget);

struct InvariantCmScenario {
    InvariantPresentation presentation;
    seq::CmVerdict cm;
    ReynoldsLaws laws;
    std::vector<std::string> skipped; // pool entries that are not strong parameter
                                      // sequences, with reasons
    std::vector<std::string> beyond;  // entries past the reach of Thm 4.14
    std::string citation;
};

// presentation of the invariant ring, a Cohen-Macaulay search over the pool
// (sequences written in the generator names), and the retraction laws
InvariantCmScenario invariant_cm_scenario(const LinearGroupAction& G,
                                          const std::vector<std::string>& pool,
                                          int samples, Budget& budget);

} // namespace cmlab::invariants
