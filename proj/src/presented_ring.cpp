#include "cmlab/presented_ring.hpp"

#include <sstream>

#include "cmlab/module_gb.hpp"

namespace cmlab::algebra {

PresentedRingPtr PresentedRing::make(RingDescPtr ambient, std::vector<Poly> relations,
                                     Budget& budget) {
    auto r = PresentedRingPtr(new PresentedRing());
    auto* rw = const_cast<PresentedRing*>(r.get());
    rw->ambient_ = std::move(ambient);
    for (auto& f : relations)
        if (!f.is_zero()) rw->relations_.push_back(f);
    rw->rel_gb_ = groebner_basis(rw->relations_, budget);
    return r;
}

PresentedRingPtr PresentedRing::make(RingDescPtr ambient, std::vector<Poly> relations) {
    Budget b;
    return make(std::move(ambient), std::move(relations), b);
}

PresentedRingPtr PresentedRing::polynomial(RingDescPtr ambient) {
    return make(std::move(ambient), {});
}

bool PresentedRing::is_zero_ring() const {
    return rel_gb_.size() == 1 && rel_gb_[0].is_one();
}

Poly PresentedRing::nf(const Poly& f, Budget& budget) const {
    if (rel_gb_.empty()) return f;
    return reduce(f, rel_gb_, budget);
}

Poly PresentedRing::nf(const Poly& f) const {
    Budget b;
    return nf(f, b);
}

std::string PresentedRing::str() const {
    if (relations_.empty()) return ambient_->str();
    std::ostringstream os;
    os << ambient_->str() << "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (i) os << ", ";
        os << relations_[i].str();
    }
    os << ")";
    return os.str();
}

IdealHandle::IdealHandle(PresentedRingPtr ring, std::vector<Poly> gens, Budget& budget)
    : ring_(std::move(ring)) {
    for (auto& g : gens) {
        Poly n = ring_->nf(g, budget);
        if (!n.is_zero()) gens_.push_back(std::move(n));
    }
    std::vector<Poly> all = gens_;
    for (const auto& r : ring_->relation_basis()) all.push_back(r);
    gb_ = groebner_basis(std::move(all), budget);
}

IdealHandle::IdealHandle(PresentedRingPtr ring, std::vector<Poly> gens) {
    Budget b;
    *this = IdealHandle(std::move(ring), std::move(gens), b);
}

bool IdealHandle::contains(const Poly& f, Budget& budget) const {
    if (gb_.empty()) return ring_->nf(f, budget).is_zero();
    return reduce(f, gb_, budget).is_zero();
}

bool IdealHandle::contains(const Poly& f) const {
    Budget b;
    return contains(f, b);
}

bool IdealHandle::is_unit() const {
    return gb_.size() == 1 && gb_[0].is_one();
}

bool IdealHandle::is_zero() const {
    // the ambient basis equals the relation basis exactly (both reduced)
    return gb_ == ring_->relation_basis();
}

bool IdealHandle::gb_same(const IdealHandle& o) const {
    return gb_ == o.gb_;
}

std::string IdealHandle::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    os << ")";
    return os.str();
}

IdealHandle ideal_sum(const IdealHandle& a, const std::vector<Poly>& extra, Budget& budget) {
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealHandle(a.ring(), std::move(gens), budget);
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b, Budget& budget) {
    return ideal_sum(a, b.gens(), budget);
}

IdealHandle ideal_colon(const IdealHandle& I, const Poly& f, Budget& budget) {
    const auto& ring = I.ring();
    Poly fn = ring->nf(f, budget);
    if (fn.is_zero()) {
        // (I : 0) is everything
        return IdealHandle(ring, {Poly::constant(ring->ambient(), 1)}, budget);
    }
    // syzygies of (f, g_1..g_s): the f-coefficients run over (I : f)
    std::vector<Poly> elts{fn};
    for (const auto& g : I.basis()) elts.push_back(g);
    auto syz = syzygies_of_elements(ring, elts, budget);
    std::vector<Poly> gens;
    for (const auto& a : syz)
        if (!a.c[0].is_zero()) gens.push_back(a.c[0]);
    return IdealHandle(ring, std::move(gens), budget);
}

IdealHandle ideal_colon_ideal(const IdealHandle& I, const std::vector<Poly>& K,
                              Budget& budget) {
    const auto& ring = I.ring();
    bool all_zero = true;
    IdealHandle acc;
    for (const auto& k : K) {
        if (ring->nf(k, budget).is_zero()) continue;
        IdealHandle c = ideal_colon(I, k, budget);
        acc = all_zero ? c : ideal_intersect(acc, c, budget);
        all_zero = false;
    }
    if (all_zero)
        return IdealHandle(ring, {Poly::constant(ring->ambient(), 1)}, budget);
    return acc;
}

IdealHandle ideal_saturate(const IdealHandle& I, const Poly& f, Budget& budget) {
    IdealHandle cur = I;
    for (;;) {
        IdealHandle next = ideal_colon(cur, f, budget);
        if (next == cur) return cur;
        cur = next;
        budget.charge();
    }
}

IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b, Budget& budget) {
    if (a.ring() != b.ring() && a.ring()->str() != b.ring()->str())
        throw DomainError("ideal intersection across different rings");
    const auto& ring = a.ring();
    // syzygies of the concatenated generator lists: each syzygy's a-part
    // evaluates inside the intersection
    std::vector<Poly> elts = a.basis();
    const std::size_t na = elts.size();
    for (const auto& g : b.basis()) elts.push_back(g);
    auto syz = syzygies_of_elements(ring, elts, budget);
    std::vector<Poly> gens;
    for (const auto& s : syz) {
        Poly acc = Poly::zero(ring->ambient());
        for (std::size_t i = 0; i < na; ++i) acc += s.c[i] * elts[i];
        Poly n = ring->nf(acc, budget);
        if (!n.is_zero()) gens.push_back(n);
    }
    return IdealHandle(ring, std::move(gens), budget);
}

} // namespace cmlab::algebra
