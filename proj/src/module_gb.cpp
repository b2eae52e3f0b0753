#include "cmlab/module_gb.hpp"

#include <algorithm>
#include <sstream>

namespace cmlab::algebra {

VecPoly VecPoly::operator+(const VecPoly& o) const {
    VecPoly r(*this);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const {
    VecPoly r(*this);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

VecPoly VecPoly::term_mul(const Monomial& m, const Scalar& s) const {
    VecPoly r(*this);
    for (auto& p : r.c) p = p.term_mul(m, s);
    return r;
}

VecPoly VecPoly::mul(const Poly& f) const {
    VecPoly r(*this);
    for (auto& p : r.c) p = p * f;
    return r;
}

std::string VecPoly::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ", ";
        os << c[i].str();
    }
    os << ")";
    return os.str();
}

ModLead mod_lead(const VecPoly& v, const ModOrder& ord) {
    bool found = false;
    ModLead best{0, Monomial(), Scalar()};
    for (std::size_t i = 0; i < v.c.size(); ++i) {
        if (v.c[i].is_zero()) continue;
        const auto& t = v.c[i].lt();
        if (!found || ord.compare(i, t.mon, best.pos, best.mon) > 0) {
            best = {i, t.mon, t.coef};
            found = true;
        }
    }
    if (!found) throw DomainError("leading term of zero module element");
    return best;
}

VecPoly mod_reduce(const VecPoly& v, const std::vector<VecPoly>& G,
                   const ModOrder& ord, Budget& budget) {
    if (v.is_zero()) return v;
    VecPoly rem(v);
    for (auto& p : rem.c) p = Poly::zero(p.ring() ? p.ring() : v.c[0].ring());
    VecPoly work(v);
    const RingDescPtr ring = v.c.empty() ? nullptr : v.c[0].ring();
    while (!work.is_zero()) {
        ModLead l = mod_lead(work, ord);
        bool hit = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            ModLead gl = mod_lead(g, ord);
            if (gl.pos != l.pos || !gl.mon.divides(l.mon)) continue;
            work = work - g.term_mul(l.mon / gl.mon, l.coef / gl.coef);
            budget.charge();
            hit = true;
            break;
        }
        if (!hit) {
            Poly lead = Poly::from_terms(ring, {{l.mon, l.coef}});
            rem.c[l.pos] += lead;
            work.c[l.pos] -= lead;
        }
    }
    return rem;
}

ModDivision mod_reduce_tracked(const VecPoly& v, const std::vector<VecPoly>& G,
                               const ModOrder& ord, Budget& budget) {
    const RingDescPtr ring = v.c.empty() ? nullptr : v.c[0].ring();
    ModDivision d;
    d.r = VecPoly(ring, v.size());
    d.q.assign(G.size(), Poly::zero(ring));
    VecPoly work(v);
    while (!work.is_zero()) {
        ModLead l = mod_lead(work, ord);
        bool hit = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            const auto& g = G[i];
            if (g.is_zero()) continue;
            ModLead gl = mod_lead(g, ord);
            if (gl.pos != l.pos || !gl.mon.divides(l.mon)) continue;
            Monomial m = l.mon / gl.mon;
            Scalar c = l.coef / gl.coef;
            d.q[i] += Poly::from_terms(ring, {{m, c}});
            work = work - g.term_mul(m, c);
            budget.charge();
            hit = true;
            break;
        }
        if (!hit) {
            Poly lead = Poly::from_terms(ring, {{l.mon, l.coef}});
            d.r.c[l.pos] += lead;
            work.c[l.pos] -= lead;
        }
    }
    return d;
}

namespace {

VecPoly make_monic(const VecPoly& v, const ModOrder& ord) {
    ModLead l = mod_lead(v, ord);
    return v.term_mul(Monomial(l.mon.nvars()), l.coef.inverse());
}

std::vector<VecPoly> mod_interreduce(std::vector<VecPoly> G, const ModOrder& ord,
                                     Budget& budget) {
    std::vector<char> drop(G.size(), 0);
    auto lead_of = [&](std::size_t i) { return mod_lead(G[i], ord); };
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) { drop[i] = 1; continue; }
        ModLead li = lead_of(i);
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || drop[j] || G[j].is_zero()) continue;
            ModLead lj = lead_of(j);
            if (lj.pos != li.pos || !lj.mon.divides(li.mon)) continue;
            if (lj.mon == li.mon && j > i) continue;
            drop[i] = 1;
            break;
        }
    }
    std::vector<VecPoly> kept;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!drop[i]) kept.push_back(G[i]);
    std::vector<VecPoly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<VecPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        VecPoly r = mod_reduce(kept[i], others, ord, budget);
        if (!r.is_zero()) out.push_back(make_monic(r, ord));
    }
    std::sort(out.begin(), out.end(), [&](const VecPoly& a, const VecPoly& b) {
        ModLead la = mod_lead(a, ord), lb = mod_lead(b, ord);
        return ord.compare(la.pos, la.mon, lb.pos, lb.mon) < 0;
    });
    return out;
}

} // namespace

std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const ModOrder& ord,
                                     Budget& budget) {
    std::vector<VecPoly> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(make_monic(g, ord));
    if (G.empty()) return G;

    struct Pair { std::size_t i, j; Monomial lcm; std::uint64_t deg; };
    std::vector<Pair> pairs;
    auto add_pair = [&](std::size_t i, std::size_t j) {
        ModLead li = mod_lead(G[i], ord), lj = mod_lead(G[j], ord);
        if (li.pos != lj.pos) return; // S-vectors only share a position
        Monomial l = Monomial::lcm(li.mon, lj.mon);
        pairs.push_back({i, j, l, l.degree()});
    };
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) add_pair(i, j);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (pairs[k].deg < pairs[best].deg) best = k;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + std::ptrdiff_t(best));
        budget.charge();

        ModLead li = mod_lead(G[p.i], ord), lj = mod_lead(G[p.j], ord);
        VecPoly s = G[p.i].term_mul(p.lcm / li.mon, li.coef.inverse()) -
                    G[p.j].term_mul(p.lcm / lj.mon, lj.coef.inverse());
        if (s.is_zero()) continue;
        VecPoly r = mod_reduce(s, G, ord, budget);
        if (r.is_zero()) continue;
        G.push_back(make_monic(r, ord));
        std::size_t n = G.size() - 1;
        for (std::size_t i = 0; i < n; ++i) add_pair(i, n);
    }
    return mod_interreduce(std::move(G), ord, budget);
}

namespace {

// generators of (gens) + J-copies in each coordinate, lifted to the ambient
std::vector<VecPoly> with_relation_copies(const PresentedRingPtr& ring,
                                          std::size_t rank,
                                          const std::vector<VecPoly>& gens) {
    std::vector<VecPoly> out = gens;
    const auto& J = ring->relation_basis();
    for (std::size_t j = 0; j < rank; ++j)
        for (const auto& r : J) {
            VecPoly v(ring->ambient(), rank);
            v.c[j] = r;
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace

Submodule::Submodule(PresentedRingPtr ring, std::size_t rank,
                     std::vector<VecPoly> gens, Budget& budget)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
    for (auto& g : gens_)
        if (g.size() != rank_) throw DomainError("submodule generator rank mismatch");
    ModOrder ord{ring_->ambient()->order, 0};
    gb_ = module_groebner(with_relation_copies(ring_, rank_, gens_), ord, budget);
}

bool Submodule::contains(const VecPoly& v, Budget& budget) const {
    return nf(v, budget).is_zero();
}

VecPoly Submodule::nf(const VecPoly& v, Budget& budget) const {
    ModOrder ord{ring_->ambient()->order, 0};
    return mod_reduce(v, gb_, ord, budget);
}

ModDivision Submodule::divide(const VecPoly& v, Budget& budget) const {
    ModOrder ord{ring_->ambient()->order, 0};
    return mod_reduce_tracked(v, gb_, ord, budget);
}

std::vector<VecPoly> syzygies(const PresentedRingPtr& ring, std::size_t rank,
                              const std::vector<VecPoly>& gens, Budget& budget) {
    const std::size_t s = gens.size();
    const auto& amb = ring->ambient();
    // tagged system in R^(rank+s): value block first, tags after
    std::vector<VecPoly> sys;
    for (std::size_t i = 0; i < s; ++i) {
        VecPoly v(amb, rank + s);
        for (std::size_t j = 0; j < rank; ++j) v.c[j] = gens[i].c[j];
        v.c[rank + i] = Poly::constant(amb, 1);
        sys.push_back(std::move(v));
    }
    const auto& J = ring->relation_basis();
    for (std::size_t j = 0; j < rank; ++j)
        for (const auto& r : J) {
            VecPoly v(amb, rank + s);
            v.c[j] = r;
            sys.push_back(std::move(v));
        }
    ModOrder ord{amb->order, rank};
    auto gb = module_groebner(std::move(sys), ord, budget);
    std::vector<VecPoly> out;
    for (const auto& g : gb) {
        bool value_zero = true;
        for (std::size_t j = 0; j < rank; ++j)
            if (!g.c[j].is_zero()) { value_zero = false; break; }
        if (!value_zero) continue;
        VecPoly a(amb, s);
        for (std::size_t i = 0; i < s; ++i) a.c[i] = ring->nf(g.c[rank + i], budget);
        if (!a.is_zero()) out.push_back(std::move(a));
    }
    return out;
}

std::vector<VecPoly> syzygies_of_elements(const PresentedRingPtr& ring,
                                          const std::vector<Poly>& elts, Budget& budget) {
    std::vector<VecPoly> gens;
    for (const auto& f : elts) {
        VecPoly v(ring->ambient(), 1);
        v.c[0] = f;
        gens.push_back(std::move(v));
    }
    return syzygies(ring, 1, gens, budget);
}

} // namespace cmlab::algebra
