#include "cmlab/groebner.hpp"

#include <algorithm>

namespace cmlab::algebra {

Poly reduce(const Poly& f, const std::vector<Poly>& G, Budget& budget) {
    if (f.is_zero()) return f;
    const auto& ring = f.ring();
    Poly rem(ring), work(f);
    while (!work.is_zero()) {
        bool hit = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (!g.lm().divides(work.lm())) continue;
            Monomial m = work.lm() / g.lm();
            Scalar c = work.lc() / g.lc();
            work -= g.term_mul(m, c);
            budget.charge();
            hit = true;
            break;
        }
        if (!hit) {
            // leading term survives; move it to the remainder
            Poly lead(ring);
            lead = Poly::from_terms(ring, {work.lt()});
            rem += lead;
            work -= lead;
        }
    }
    return rem;
}

Division reduce_tracked(const Poly& f, const std::vector<Poly>& G, Budget& budget) {
    const auto& ring = f.ring();
    Division d;
    d.r = Poly::zero(ring);
    d.q.assign(G.size(), Poly::zero(ring));
    Poly work(f);
    while (!work.is_zero()) {
        bool hit = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            const auto& g = G[i];
            if (g.is_zero()) continue;
            if (!g.lm().divides(work.lm())) continue;
            Monomial m = work.lm() / g.lm();
            Scalar c = work.lc() / g.lc();
            d.q[i] += Poly::from_terms(ring, {{m, c}});
            work -= g.term_mul(m, c);
            budget.charge();
            hit = true;
            break;
        }
        if (!hit) {
            Poly lead = Poly::from_terms(ring, {work.lt()});
            d.r += lead;
            work -= lead;
        }
    }
    return d;
}

Poly s_poly(const Poly& f, const Poly& g) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    Poly a = f.term_mul(l / f.lm(), f.lc().inverse());
    Poly b = g.term_mul(l / g.lm(), g.lc().inverse());
    return a - b;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t deg;
};

std::vector<Poly> interreduce(std::vector<Poly> G, Budget& budget) {
    // drop elements whose leading monomial another element's divides (keep
    // the earliest among equal leading monomials), then tail-reduce and sort
    std::vector<char> drop(G.size(), 0);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) { drop[i] = 1; continue; }
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || drop[j] || G[j].is_zero()) continue;
            if (!G[j].lm().divides(G[i].lm())) continue;
            if (G[j].lm() == G[i].lm() && j > i) continue;
            drop[i] = 1;
            break;
        }
    }
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!drop[i]) kept.push_back(G[i]);
    std::vector<Poly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Poly r = reduce(kept[i], others, budget);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    if (!out.empty()) {
        const auto& order = out[0].ring()->order;
        std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
            return order.compare(a.lm(), b.lm()) < 0;
        });
    }
    return out;
}

} // namespace

std::vector<Poly> groebner_basis(std::vector<Poly> gens, Budget& budget) {
    std::vector<Poly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) return G;
    const auto ring = G[0].ring();
    const auto& ord = ring->order;

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Pair p{i, j, Monomial::lcm(G[i].lm(), G[j].lm()), 0};
        p.deg = p.lcm.degree();
        return p;
    };

    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            pairs.push_back(make_pair(i, j));

    auto pick = [&]() {
        // normal strategy: smallest lcm degree, ties by order on the lcm
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].deg < pairs[best].deg ||
                (pairs[k].deg == pairs[best].deg &&
                 ord.compare(pairs[k].lcm, pairs[best].lcm) < 0))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + std::ptrdiff_t(best));
        return p;
    };

    while (!pairs.empty()) {
        Pair p = pick();
        budget.charge();
        // product criterion; safe unconditionally, and cheap pair filtering
        // is all the scale here calls for
        if (G[p.i].lm().coprime(G[p.j].lm())) continue;
        Poly r = reduce(s_poly(G[p.i], G[p.j]), G, budget);
        if (r.is_zero()) continue;
        G.push_back(r.monic());
        std::size_t n = G.size() - 1;
        for (std::size_t i = 0; i < n; ++i) pairs.push_back(make_pair(i, n));
    }
    return interreduce(std::move(G), budget);
}

bool is_groebner_basis(const std::vector<Poly>& G, Budget& budget) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].lm().coprime(G[j].lm())) continue;
            if (!reduce(s_poly(G[i], G[j]), G, budget).is_zero()) return false;
        }
    return true;
}

} // namespace cmlab::algebra
