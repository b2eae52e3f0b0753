#pragma once

#include "cmlab/presented_ring.hpp"

namespace cmlab::algebra {

// Element of a free module R^k, components held as ambient polynomials.
struct VecPoly {
    std::vector<Poly> c;

    VecPoly() = default;
    VecPoly(const RingDescPtr& r, std::size_t k) : c(k, Poly::zero(r)) {}

    std::size_t size() const { return c.size(); }
    bool is_zero() const {
        for (auto& p : c) if (!p.is_zero()) return false;
        return true;
    }
    VecPoly operator+(const VecPoly& o) const;
    VecPoly operator-(const VecPoly& o) const;
    VecPoly term_mul(const Monomial& m, const Scalar& s) const;
    VecPoly mul(const Poly& f) const;
    bool operator==(const VecPoly& o) const { return c == o.c; }
    std::string str() const;
};

// Position-over-term order with an optional eliminated block: positions
// below elim_split dominate everything supported on later positions.
struct ModOrder {
    MonomialOrder ring_order;
    std::size_t elim_split = 0;

    // strictly positive when a > b
    int compare(std::size_t pa, const Monomial& ma,
                std::size_t pb, const Monomial& mb) const {
        int blka = pa < elim_split ? 0 : 1;
        int blkb = pb < elim_split ? 0 : 1;
        if (blka != blkb) return blka < blkb ? 1 : -1;
        if (pa != pb) return pa < pb ? 1 : -1;
        return ring_order.compare(ma, mb);
    }
};

struct ModLead {
    std::size_t pos;
    Monomial mon;
    Scalar coef;
};

ModLead mod_lead(const VecPoly& v, const ModOrder& ord);

// remainder of v on division by G
VecPoly mod_reduce(const VecPoly& v, const std::vector<VecPoly>& G,
                   const ModOrder& ord, Budget& budget);

struct ModDivision {
    VecPoly r;
    std::vector<Poly> q;
};
ModDivision mod_reduce_tracked(const VecPoly& v, const std::vector<VecPoly>& G,
                               const ModOrder& ord, Budget& budget);

// reduced monic module Groebner basis
std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const ModOrder& ord,
                                     Budget& budget);

// Submodule of R^k over a presented ring, by ambient generators.  Handles the
// ring relations internally (one copy per coordinate).
class Submodule {
public:
    Submodule(PresentedRingPtr ring, std::size_t rank, std::vector<VecPoly> gens,
              Budget& budget);

    const PresentedRingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<VecPoly>& gens() const { return gens_; }
    const std::vector<VecPoly>& basis() const { return gb_; } // includes relation copies

    bool contains(const VecPoly& v, Budget& budget) const;
    VecPoly nf(const VecPoly& v, Budget& budget) const;
    // v = sum q[i] basis()[i] + nf
    ModDivision divide(const VecPoly& v, Budget& budget) const;

private:
    PresentedRingPtr ring_;
    std::size_t rank_;
    std::vector<VecPoly> gens_;
    std::vector<VecPoly> gb_;
};

// Generators of the syzygy module of (g_1..g_s) inside R^k over the given
// presented ring: vectors a in R^s with sum a_i g_i = 0 in R^k.
std::vector<VecPoly> syzygies(const PresentedRingPtr& ring, std::size_t rank,
                              const std::vector<VecPoly>& gens, Budget& budget);

// convenience: syzygies of ring elements (rank-1 case)
std::vector<VecPoly> syzygies_of_elements(const PresentedRingPtr& ring,
                                          const std::vector<Poly>& elts, Budget& budget);

} // namespace cmlab::algebra
