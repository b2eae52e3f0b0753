#include "cmlab/invariants.hpp"

#include <algorithm>
#include <random>

namespace cmlab::invariants {

using algebra::IdealHandle;
using algebra::Monomial;
using algebra::MonomialOrder;
using algebra::PresentedRing;
using algebra::Term;

namespace {

Matrix mat_mul(const Matrix& A, const Matrix& B) {
    std::size_t n = A.size();
    Matrix C(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s = Scalar::zero(A[i][j].field());
            for (std::size_t k = 0; k < n; ++k) s += A[i][k] * B[k][j];
            C[i][j] = s;
        }
    return C;
}

bool mat_eq(const Matrix& A, const Matrix& B) {
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j)
            if (A[i][j] != B[i][j]) return false;
    return true;
}

} // namespace

LinearGroupAction LinearGroupAction::make(RingDescPtr ring, std::vector<Matrix> mats) {
    if (!ring || ring->nvars() == 0)
        throw DomainError("group action: missing ambient ring");
    if (mats.empty()) throw DomainError("group action: empty matrix list");
    std::size_t n = ring->nvars();
    for (const auto& g : mats) {
        if (g.size() != n) throw DomainError("group action: matrix size mismatch");
        for (const auto& row : g) {
            if (row.size() != n) throw DomainError("group action: matrix is not square");
            for (const auto& c : row)
                if (c.field() != ring->field)
                    throw DomainError("group action: matrix entries over the wrong field");
        }
    }
    for (std::size_t a = 0; a < mats.size(); ++a)
        for (std::size_t b = a + 1; b < mats.size(); ++b)
            if (mat_eq(mats[a], mats[b]))
                throw DomainError("group action: duplicate matrix in the list");

    Matrix id(n, std::vector<Scalar>(n, Scalar::zero(ring->field)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = Scalar::one(ring->field);
    bool has_id = false;
    for (const auto& g : mats) has_id = has_id || mat_eq(g, id);
    if (!has_id) throw DomainError("group action: identity matrix missing");

    auto find = [&](const Matrix& M) {
        for (std::size_t k = 0; k < mats.size(); ++k)
            if (mat_eq(mats[k], M)) return true;
        return false;
    };
    for (const auto& g : mats) {
        bool has_inverse = false;
        for (const auto& h : mats) {
            Matrix gh = mat_mul(g, h);
            if (!find(gh)) throw DomainError("group action: set is not closed under products");
            if (mat_eq(gh, id)) has_inverse = true;
        }
        if (!has_inverse) throw DomainError("group action: an element has no inverse in the set");
    }
    if (ring->field.p != 0 && mats.size() % ring->field.p == 0)
        throw DomainError("group action: the group order is divisible by the characteristic");
    return LinearGroupAction{std::move(ring), std::move(mats)};
}

LinearGroupAction action_from_ints(const RingDescPtr& ring,
                                   const std::vector<std::vector<std::vector<long>>>& mats) {
    std::vector<Matrix> ms;
    for (const auto& g : mats) {
        Matrix M;
        for (const auto& row : g) {
            std::vector<Scalar> r;
            for (long c : row) r.push_back(Scalar(ring->field, c));
            M.push_back(std::move(r));
        }
        ms.push_back(std::move(M));
    }
    return LinearGroupAction::make(ring, std::move(ms));
}

LinearGroupAction action_from_generators(const RingDescPtr& ring, std::vector<Matrix> gens) {
    std::size_t n = ring->nvars();
    Matrix id(n, std::vector<Scalar>(n, Scalar::zero(ring->field)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = Scalar::one(ring->field);
    std::vector<Matrix> closure{id};
    auto find = [&](const Matrix& M) {
        for (const auto& g : closure)
            if (mat_eq(g, M)) return true;
        return false;
    };
    for (const auto& g : gens)
        if (!find(g)) closure.push_back(g);
    for (std::size_t a = 0; a < closure.size(); ++a) {
        for (std::size_t b = 0; b < closure.size(); ++b) {
            Matrix p = mat_mul(closure[a], closure[b]);
            if (!find(p)) closure.push_back(p);
            if (closure.size() > 64)
                throw SizeGuard("group action: closure exceeds 64 elements");
        }
    }
    return LinearGroupAction::make(ring, std::move(closure));
}

Poly apply_action(const LinearGroupAction& G, std::size_t g, const Poly& f, Budget& budget) {
    budget.charge(f.terms().size() + 1);
    const Matrix& M = G.mats.at(g);
    std::size_t n = G.ring->nvars();
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Poly img = Poly::zero(G.ring);
        for (std::size_t i = 0; i < n; ++i) {
            if (M[i][j].is_zero()) continue;
            img += Poly::variable(G.ring, i).scaled(M[i][j]);
        }
        images.push_back(std::move(img));
    }
    return f.substitute(G.ring, images);
}

Poly reynolds(const LinearGroupAction& G, const Poly& f, Budget& budget) {
    Poly acc = Poly::zero(G.ring);
    for (std::size_t g = 0; g < G.order(); ++g) acc += apply_action(G, g, f, budget);
    Scalar inv = Scalar(G.ring->field, long(G.order())).inverse();
    return acc.scaled(inv);
}

namespace {

std::vector<Monomial> monomials_of_degree(const RingDescPtr& r, int d) {
    std::vector<Monomial> out;
    Monomial m(r->nvars());
    // multiset enumeration: place remaining degree into slots left to right
    auto rec = [&](auto&& self, std::size_t slot, int rem) -> void {
        if (slot + 1 == r->nvars()) {
            m.e[slot] = std::uint32_t(rem);
            out.push_back(m);
            m.e[slot] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            m.e[slot] = std::uint32_t(k);
            self(self, slot + 1, rem - k);
        }
        m.e[slot] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return r->order.compare(a, b) > 0; });
    return out;
}

// row-reduced linear span keyed by leading monomials
struct Span {
    std::vector<Poly> rows;

    Poly reduce(Poly f, Budget& budget) const {
        bool changed = true;
        while (!f.is_zero() && changed) {
            changed = false;
            for (const auto& r : rows) {
                if (f.is_zero()) break;
                if (r.lm() == f.lm()) {
                    budget.charge(r.terms().size());
                    f -= r.scaled(f.lc() / r.lc());
                    changed = true;
                }
            }
        }
        return f;
    }

    bool insert(const Poly& f, Budget& budget) {
        Poly g = reduce(f, budget);
        if (g.is_zero()) return false;
        rows.push_back(g.monic());
        return true;
    }
};

// all products of the generators with total degree exactly d
void products_of_degree(const std::vector<Poly>& gens, int d, std::size_t from, const Poly& acc,
                        Span& span, Budget& budget) {
    if (d == 0) {
        span.insert(acc, budget);
        return;
    }
    for (std::size_t k = from; k < gens.size(); ++k) {
        int dk = int(gens[k].total_degree());
        if (dk > d || dk == 0) continue;
        products_of_degree(gens, d - dk, k, acc * gens[k], span, budget);
    }
}

std::vector<std::string> generator_names(std::size_t count, const RingDescPtr& ambient) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < count; ++k) {
        std::string nm = k < 26 ? std::string(1, char('A' + k)) : "G" + std::to_string(k + 1);
        while (ambient->var_index(nm) >= 0) nm += "_";
        names.push_back(nm);
    }
    return names;
}

} // namespace

InvariantPresentation invariant_presentation(const LinearGroupAction& G, int degree_bound,
                                             Budget& budget) {
    if (degree_bound < 1) throw DomainError("invariant presentation: degree bound must be positive");
    if (G.ring->nvars() > 4)
        throw SizeGuard("invariant presentation: ambient limited to 4 variables");
    InvariantPresentation out;
    out.degree_bound = degree_bound;

    std::vector<Poly> gens;
    for (int d = 1; d <= degree_bound; ++d) {
        Span span;
        products_of_degree(gens, d, 0, Poly::constant(G.ring, 1), span, budget);
        for (const auto& m : monomials_of_degree(G.ring, d)) {
            Poly f = Poly::from_terms(G.ring, {Term{m, Scalar::one(G.ring->field)}});
            Poly r = reynolds(G, f, budget);
            if (r.is_zero()) continue;
            Poly residue = span.reduce(r, budget);
            if (residue.is_zero()) continue;
            gens.push_back(residue.monic());
            span.rows.push_back(gens.back());
        }
    }

    // order the generators by leading monomial, descending in lex, so names
    // are stable under permutations of the discovery order
    MonomialOrder lex = MonomialOrder::lex();
    std::sort(gens.begin(), gens.end(), [&](const Poly& f, const Poly& g) {
        return lex.compare(f.lm(), g.lm()) > 0;
    });
    out.generators = gens;
    out.names = generator_names(gens.size(), G.ring);

    if (int(G.order()) > degree_bound) {
        out.bound_too_small = true;
        out.note = "degree bound " + std::to_string(degree_bound) +
                   " is below the group order " + std::to_string(G.order()) +
                   "; generators above the bound may be missing";
    }

    if (gens.empty()) {
        auto A0 = algebra::make_ring(G.ring->field, {"A"});
        out.ring = PresentedRing::make(A0, {Poly::variable(A0, 0)}, budget);
        out.note += (out.note.empty() ? "" : "; ");
        out.note += "no fundamental invariants up to the bound";
        return out;
    }

    // relations by elimination: in k[x-block, A-block] with the x-block
    // eliminated, the ideal (A_k - g_k) meets k[A] in the relation ideal
    std::size_t n = G.ring->nvars();
    std::vector<std::string> evars = G.ring->vars;
    for (const auto& nm : out.names) evars.push_back(nm);
    auto E = algebra::make_ring(G.ring->field, evars, MonomialOrder::block(n));
    std::vector<Poly> diff;
    for (std::size_t k = 0; k < gens.size(); ++k)
        diff.push_back(Poly::variable(E, n + k) - gens[k].transport(E));
    IdealHandle elim(PresentedRing::make(E, {}), diff, budget);

    auto A = algebra::make_ring(G.ring->field, out.names);
    std::vector<Poly> rels;
    for (const auto& f : elim.basis()) {
        bool pure = true;
        for (const auto& t : f.terms())
            for (std::size_t i = 0; i < n && pure; ++i)
                if (t.mon.e[i]) pure = false;
        if (!pure) continue;
        std::vector<Term> terms;
        for (const auto& t : f.terms()) {
            Monomial m(out.names.size());
            for (std::size_t k = 0; k < out.names.size(); ++k) m.e[k] = t.mon.e[n + k];
            terms.push_back(Term{m, t.coef});
        }
        rels.push_back(Poly::from_terms(A, terms));
    }
    out.relations = rels;
    out.ring = PresentedRing::make(A, rels, budget);
    return out;
}

namespace {

Poly random_poly(const LinearGroupAction& G, std::mt19937& rng) {
    std::vector<Term> terms;
    for (int d = 0; d <= 3; ++d) {
        for (const auto& m : monomials_of_degree(G.ring, d)) {
            if (rng() % 3 != 0) continue;
            long c = long(rng() % 7) - 3;
            if (c == 0) c = 1;
            terms.push_back(Term{m, Scalar(G.ring->field, c)});
        }
    }
    return Poly::from_terms(G.ring, terms);
}

} // namespace

ReynoldsLaws reynolds_laws(const LinearGroupAction& G, int samples, std::uint32_t seed,
                           Budget& budget) {
    ReynoldsLaws laws;
    laws.samples = samples;
    laws.seed = seed;
    laws.idempotent = laws.action_invariant = laws.retraction_linear = true;
    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Poly f = random_poly(G, rng);
        Poly h = random_poly(G, rng);
        std::size_t g = rng() % G.order();
        Poly rf = reynolds(G, f, budget);
        if (reynolds(G, rf, budget) != rf) laws.idempotent = false;
        if (reynolds(G, apply_action(G, g, f, budget), budget) != rf)
            laws.action_invariant = false;
        Poly rh = reynolds(G, h, budget);
        if (reynolds(G, rh * f, budget) != rh * rf) laws.retraction_linear = false;
    }
    return laws;
}

InvariantCmScenario invariant_cm_scenario(const LinearGroupAction& G,
                                          const std::vector<std::string>& pool,
                                          int samples, Budget& budget) {
    if (G.ring->nvars() > 2)
        throw DomainError("invariant CM scenario: the supported scope is ambient "
                          "dimension at most two");
    InvariantCmScenario out;
    out.citation = "Cor 4.15; Thm 4.14";
    out.presentation = invariant_presentation(G, std::max<int>(int(G.order()), 2), budget);
    out.laws = reynolds_laws(G, samples, 20260815u, budget);

    seq::PresentedRingAdapter A(out.presentation.ring);
    std::vector<seq::Seq> seqs;
    for (const auto& text : pool) {
        seq::Seq s = A.parse_elements(text, budget);
        if (s.size() > 2)
            out.beyond.push_back("(" + text + "): length " + std::to_string(s.size()) +
                                 " exceeds the reach of Thm 4.14; decided computationally");
        auto sps = seq::is_strong_parameter_sequence(A, s, budget);
        if (!sps.value) {
            std::string why = "not a strong parameter sequence";
            if (sps.failing_prefix >= 1 && sps.failing_prefix <= sps.trace.size()) {
                const auto& bad = sps.trace[sps.failing_prefix - 1];
                why += " (prefix of length " + std::to_string(sps.failing_prefix) +
                       ": " + bad.reason;
                if (!bad.citation.empty()) why += "; " + bad.citation;
                why += ")";
            }
            out.skipped.push_back("(" + text + "): " + why);
            continue;
        }
        seqs.push_back(std::move(s));
    }
    out.cm = seq::cohen_macaulay_verdict(A, seqs, budget);
    return out;
}

} // namespace cmlab::invariants
