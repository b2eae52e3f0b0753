#include "cmlab/dimension.hpp"

namespace cmlab::algebra {

namespace {

// largest subset of variables meeting no leading monomial; exponential scan
// over subsets is fine at this variable count
int max_independent_set(const std::vector<Poly>& gb, std::size_t nvars) {
    if (gb.size() == 1 && gb[0].is_one()) return -1;
    std::vector<std::uint32_t> lead_support;
    for (const auto& g : gb) {
        std::uint32_t mask = 0;
        const auto& m = g.lm();
        for (std::size_t i = 0; i < nvars; ++i)
            if (m.e[i]) mask |= (1u << i);
        lead_support.push_back(mask);
    }
    if (nvars > 20) throw SizeGuard("dimension guard: too many variables");
    int best = -1;
    for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool independent = true;
        for (auto m : lead_support)
            if ((m & ~s) == 0) { independent = false; break; }
        if (independent) best = size;
    }
    return best;
}

} // namespace

int krull_dimension(const PresentedRingPtr& ring, Budget& budget) {
    const auto& amb = ring->ambient();
    std::vector<Poly> gb = ring->relation_basis();
    if (!amb->order.graded()) {
        auto grev = reorder_ring(amb, MonomialOrder::grevlex());
        std::vector<Poly> moved;
        for (const auto& g : ring->relations()) moved.push_back(g.transport(grev));
        gb = groebner_basis(std::move(moved), budget);
    }
    if (gb.empty()) return int(amb->nvars());
    return max_independent_set(gb, amb->nvars());
}

int krull_dimension(const IdealHandle& I, Budget& budget) {
    auto quotient = PresentedRing::make(I.ring()->ambient(), I.basis(), budget);
    return krull_dimension(quotient, budget);
}

} // namespace cmlab::algebra
