#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmlab/groebner.hpp"

namespace cmlab::algebra {

class PresentedRing;
using PresentedRingPtr = std::shared_ptr<const PresentedRing>;

// Finitely presented algebra P/J over an exact field.  The defining Groebner
// basis is computed once at construction, so a constructed ring is immutable
// and safe to share across threads.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
public:
    static PresentedRingPtr make(RingDescPtr ambient, std::vector<Poly> relations,
                                 Budget& budget);
    static PresentedRingPtr make(RingDescPtr ambient, std::vector<Poly> relations);
    static PresentedRingPtr polynomial(RingDescPtr ambient); // J = 0

    const RingDescPtr& ambient() const { return ambient_; }
    const std::vector<Poly>& relations() const { return relations_; }
    const std::vector<Poly>& relation_basis() const { return rel_gb_; }

    bool is_polynomial_ring() const { return rel_gb_.empty(); }
    bool is_zero_ring() const; // 1 lies in J

    // canonical representative in the ambient ring
    Poly nf(const Poly& f, Budget& budget) const;
    Poly nf(const Poly& f) const;

    bool is_zero_elem(const Poly& f) const { return nf(f).is_zero(); }

    Poly parse(const std::string& text) const { return nf(parse_poly(ambient_, text)); }

    std::string str() const;

private:
    PresentedRing() = default;
    RingDescPtr ambient_;
    std::vector<Poly> relations_;
    std::vector<Poly> rel_gb_;
};

// Ideal of a presented ring, carried by its ambient preimage (generators plus
// the ring relations).  The reduced ambient Groebner basis is computed at
// construction, making equality a list comparison.
class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(PresentedRingPtr ring, std::vector<Poly> gens, Budget& budget);
    IdealHandle(PresentedRingPtr ring, std::vector<Poly> gens);

    const PresentedRingPtr& ring() const { return ring_; }
    // generators as given (normal forms, zeros dropped)
    const std::vector<Poly>& gens() const { return gens_; }
    // reduced ambient basis of (gens) + J
    const std::vector<Poly>& basis() const { return gb_; }

    bool contains(const Poly& f, Budget& budget) const;
    bool contains(const Poly& f) const;
    bool is_unit() const;          // the whole ring
    bool is_zero() const;          // the zero ideal of the ring

    bool operator==(const IdealHandle& o) const { return gb_same(o); }
    bool operator!=(const IdealHandle& o) const { return !gb_same(o); }

    std::string str() const;

private:
    bool gb_same(const IdealHandle& o) const;
    PresentedRingPtr ring_;
    std::vector<Poly> gens_;
    std::vector<Poly> gb_;
};

IdealHandle ideal_sum(const IdealHandle& a, const std::vector<Poly>& extra, Budget& budget);
IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b, Budget& budget);

// (I : f); f == 0 yields the unit ideal
IdealHandle ideal_colon(const IdealHandle& I, const Poly& f, Budget& budget);

// (I : K) for an ideal K
IdealHandle ideal_colon_ideal(const IdealHandle& I, const std::vector<Poly>& K, Budget& budget);

// (I : f^infinity) by iterating colon until stable
IdealHandle ideal_saturate(const IdealHandle& I, const Poly& f, Budget& budget);

IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b, Budget& budget);

} // namespace cmlab::algebra
