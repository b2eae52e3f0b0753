#include "cmlab/primes.hpp"

#include <algorithm>

#include "cmlab/dimension.hpp"
#include "cmlab/factor.hpp"

namespace cmlab::algebra {

namespace {

void check_guard(const IdealHandle& I) {
    const auto& ring = I.ring();
    if (ring->ambient()->nvars() > 6)
        throw SizeGuard("prime decomposition guard: more than 6 variables");
    std::uint64_t dmax = 0;
    for (const auto& g : I.gens()) dmax = std::max(dmax, g.total_degree());
    for (const auto& g : ring->relations()) dmax = std::max(dmax, g.total_degree());
    if (dmax > 6)
        throw SizeGuard("prime decomposition guard: generator degree above 6");
}

bool ideal_contained(const IdealHandle& a, const IdealHandle& b, Budget& budget) {
    for (const auto& g : a.basis())
        if (!b.contains(g, budget)) return false;
    return true;
}

} // namespace

std::vector<IdealHandle> minimal_primes(const IdealHandle& I, Budget& budget) {
    check_guard(I);
    std::vector<IdealHandle> work{I}, primes;
    while (!work.empty()) {
        IdealHandle K = work.back();
        work.pop_back();
        budget.charge();
        if (K.is_unit()) continue;
        std::optional<Poly> factor;
        std::optional<Poly> cofactor;
        for (const auto& f : K.basis()) {
            auto g = find_factor(f, budget);
            if (!g) continue;
            auto h = f.divided_by(*g);
            if (!h) continue; // factor does not divide exactly; treat as no split
            factor = *g;
            cofactor = *h;
            break;
        }
        if (!factor) {
            primes.push_back(K); // certified prime at desk scale: nothing factors
            continue;
        }
        work.push_back(ideal_sum(K, {*factor}, budget));
        IdealHandle sat = ideal_saturate(K, *factor, budget);
        if (!(sat == K)) work.push_back(sat);
        else work.push_back(ideal_sum(K, {*cofactor}, budget));
    }
    // minimize: drop anything containing another component, dedupe equals
    std::vector<IdealHandle> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < primes.size() && keep; ++j) {
            if (i == j) continue;
            if (primes[j] == primes[i]) { keep = j > i ? keep : false; continue; }
            if (ideal_contained(primes[j], primes[i], budget)) keep = false;
        }
        if (keep) {
            bool dup = false;
            for (const auto& p : out)
                if (p == primes[i]) { dup = true; break; }
            if (!dup) out.push_back(primes[i]);
        }
    }
    // canonical order for reporting: by basis size, then printed form
    std::sort(out.begin(), out.end(), [](const IdealHandle& a, const IdealHandle& b) {
        if (a.basis().size() != b.basis().size())
            return a.basis().size() < b.basis().size();
        return a.str() < b.str();
    });
    return out;
}

std::vector<IdealHandle> minimal_primes(const PresentedRingPtr& ring, Budget& budget) {
    return minimal_primes(IdealHandle(ring, {}, budget), budget);
}

Height prime_height(const IdealHandle& p, Budget& budget) {
    if (p.is_unit()) return {true, 0};
    auto ring_primes = minimal_primes(p.ring(), budget);
    int dim_p = krull_dimension(p, budget);
    int best = -1;
    for (const auto& q : ring_primes) {
        if (!ideal_contained(q, p, budget)) continue;
        int dim_q = krull_dimension(q, budget);
        best = std::max(best, dim_q - dim_p);
    }
    if (best < 0)
        throw Error("prime not over any minimal prime of its ring");
    return {false, best};
}

Height ideal_height(const IdealHandle& I, Budget& budget) {
    if (I.is_unit()) return {true, 0};
    auto comps = minimal_primes(I, budget);
    if (comps.empty()) throw Error("proper ideal with no minimal primes");
    bool first = true;
    int best = 0;
    for (const auto& p : comps) {
        Height h = prime_height(p, budget);
        if (first || h.value < best) best = h.value;
        first = false;
    }
    return {false, best};
}

} // namespace cmlab::algebra
