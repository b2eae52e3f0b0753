#include "cmlab/factor.hpp"

#include <algorithm>

namespace cmlab::algebra {

namespace {

std::optional<mpz_class> mpz_kth_root_exact(const mpz_class& n, unsigned k) {
    if (n < 0 && k % 2 == 0) return std::nullopt;
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Scalar> scalar_kth_root(const Scalar& c, unsigned k) {
    if (c.is_zero()) return c;
    if (c.field().rational()) {
        const mpq_class& q = c.rat();
        auto num = mpz_kth_root_exact(q.get_num(), k);
        auto den = mpz_kth_root_exact(q.get_den(), k);
        if (!num || !den) return std::nullopt;
        return Scalar::rational(mpq_class(*num, *den));
    }
    // prime field: scan (fields here are small; called rarely)
    std::uint32_t p = c.field().p;
    for (std::uint64_t r = 1; r < p; ++r) {
        std::uint64_t acc = 1;
        for (unsigned i = 0; i < k; ++i) acc = (acc * r) % p;
        if (acc == c.residue()) return Scalar(c.field(), long(r));
    }
    return std::nullopt;
}

// ---- univariate helpers (support on a single variable) ----

int single_variable(const Poly& f) {
    int var = -1;
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < t.mon.e.size(); ++i)
            if (t.mon.e[i]) {
                if (var == -1) var = int(i);
                else if (var != int(i)) return -2; // multivariate
            }
    return var; // -1 means constant
}

std::vector<Scalar> dense_coeffs(const Poly& f, std::size_t var) {
    std::size_t d = 0;
    for (const auto& t : f.terms()) d = std::max<std::size_t>(d, t.mon.e[var]);
    std::vector<Scalar> c(d + 1, Scalar::zero(f.ring()->field));
    for (const auto& t : f.terms()) c[t.mon.e[var]] = t.coef;
    return c;
}

Poly from_dense(const RingDescPtr& r, std::size_t var, const std::vector<Scalar>& c) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        Monomial m(r->nvars());
        m.e[var] = std::uint32_t(i);
        ts.push_back({m, c[i]});
    }
    return Poly::from_terms(r, std::move(ts));
}

// gcd of univariate polynomials in the same variable, monic result
Poly uni_gcd(Poly a, Poly b, Budget& budget) {
    while (!b.is_zero()) {
        budget.charge();
        // a mod b by long division
        Poly r = a;
        while (!r.is_zero() && b.lm().divides(r.lm()))
            r -= b.term_mul(r.lm() / b.lm(), r.lc() / b.lc());
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

// evaluate a rational univariate at an integer point
mpq_class eval_at(const std::vector<mpq_class>& c, long x) {
    mpq_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<mpz_class> divisors_signed(const mpz_class& v, Budget& budget) {
    std::vector<mpz_class> out;
    mpz_class a = abs(v);
    for (mpz_class d = 1; d * d <= a; ++d) {
        budget.charge();
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            mpz_class e = a / d;
            if (e != d) {
                out.push_back(e);
                out.push_back(-e);
            }
        }
    }
    return out;
}

// Kronecker factor search over the rationals; f squarefree-ish primitive in
// one variable, looks for a factor of degree <= deg/2
std::optional<Poly> kronecker_factor(const Poly& f, std::size_t var, Budget& budget) {
    const auto& ring = f.ring();
    auto coeffs = dense_coeffs(f, var);
    std::size_t deg = coeffs.size() - 1;
    std::vector<mpq_class> c;
    for (auto& s : coeffs) c.push_back(s.rat());
    // clear denominators
    mpz_class den = 1;
    for (auto& q : c) den = lcm(den, q.get_den());
    for (auto& q : c) q *= den;

    std::vector<long> pts{0, 1, -1, 2, -2, 3, -3};
    // a root among the sample points gives a linear factor immediately
    for (long t : pts) {
        if (eval_at(c, t) == 0) {
            std::vector<Scalar> lin{Scalar(ring->field, -t), Scalar(ring->field, 1)};
            return from_dense(ring, var, lin);
        }
    }
    for (std::size_t k = 1; 2 * k <= deg; ++k) {
        std::vector<long> xs(pts.begin(), pts.begin() + std::ptrdiff_t(k + 1));
        std::vector<std::vector<mpz_class>> divs;
        std::size_t combos = 1;
        for (long t : xs) {
            mpz_class v = mpq_class(eval_at(c, t)).get_num();
            auto d = divisors_signed(v, budget);
            combos *= d.size();
            if (combos > 2'000'000) return std::nullopt; // desk-scale give-up
            divs.push_back(std::move(d));
        }
        std::vector<std::size_t> idx(k + 1, 0);
        for (;;) {
            budget.charge();
            // Lagrange interpolation through (xs[j], divs[j][idx[j]])
            std::vector<mpq_class> g(k + 1, 0);
            for (std::size_t j = 0; j <= k; ++j) {
                std::vector<mpq_class> basis{1};
                mpq_class denom = 1;
                for (std::size_t l = 0; l <= k; ++l) {
                    if (l == j) continue;
                    // basis *= (X - xs[l])
                    std::vector<mpq_class> nb(basis.size() + 1, 0);
                    for (std::size_t a = 0; a < basis.size(); ++a) {
                        nb[a + 1] += basis[a];
                        nb[a] -= basis[a] * xs[l];
                    }
                    basis = std::move(nb);
                    denom *= (xs[j] - xs[l]);
                }
                mpq_class w = mpq_class(divs[j][idx[j]]) / denom;
                for (std::size_t a = 0; a < basis.size(); ++a) g[a] += basis[a] * w;
            }
            if (!(g.size() <= k + 1)) throw Error("interpolation degree overflow");
            bool nonconst = false;
            for (std::size_t a = 1; a < g.size(); ++a)
                if (g[a] != 0) nonconst = true;
            if (nonconst && g.back() != 0 && g.size() == k + 1) {
                std::vector<Scalar> gs;
                for (auto& q : g) gs.push_back(Scalar::rational(q));
                Poly cand = from_dense(ring, var, gs);
                auto quot = f.divided_by(cand);
                if (quot && !quot->is_constant()) return cand;
            }
            // advance tuple
            std::size_t j = 0;
            while (j <= k) {
                if (++idx[j] < divs[j].size()) break;
                idx[j] = 0;
                ++j;
            }
            if (j > k) break;
        }
    }
    return std::nullopt;
}

std::optional<Poly> univariate_factor(const Poly& f, std::size_t var, Budget& budget) {
    const auto& ring = f.ring();
    // squarefree split first: gcd(f, f') nontrivial is itself a factor
    Poly d = f.dvar(var);
    if (!d.is_zero()) {
        Poly g = uni_gcd(f, d, budget);
        if (!g.is_constant() && g.total_degree() < f.total_degree()) return g;
    }
    if (ring->field.rational()) return kronecker_factor(f, var, budget);
    // prime field: root scan
    std::uint32_t p = ring->field.p;
    auto coeffs = dense_coeffs(f, var);
    for (std::uint64_t r = 0; r < p; ++r) {
        budget.charge();
        Scalar x(ring->field, long(r));
        Scalar acc = Scalar::zero(ring->field);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        if (acc.is_zero()) {
            if (f.total_degree() == 1) return std::nullopt; // already linear
            std::vector<Scalar> lin{-x, Scalar::one(ring->field)};
            return from_dense(ring, var, lin);
        }
    }
    return std::nullopt;
}

// quadratic in variable `var` with constant leading coefficient: try the
// square-discriminant split
std::optional<Poly> quadratic_split(const Poly& f, std::size_t var, Budget& budget) {
    const auto& ring = f.ring();
    Poly A = Poly::zero(ring), B = Poly::zero(ring), C = Poly::zero(ring);
    for (const auto& t : f.terms()) {
        Term s = t;
        std::uint32_t e = t.mon.e[var];
        s.mon.e[var] = 0;
        Poly part = Poly::from_terms(ring, {s});
        if (e == 2) A += part;
        else if (e == 1) B += part;
        else if (e == 0) C += part;
        else return std::nullopt;
    }
    if (A.is_zero() || !A.is_constant()) return std::nullopt;
    Poly disc = B * B - A.scaled(Scalar(ring->field, 4)) * C;
    auto s = poly_kth_root(disc, 2);
    if (!s) return std::nullopt;
    Poly two_a_x = Poly::variable(ring, var).scaled(Scalar(ring->field, 2) * A.terms()[0].coef);
    for (const Poly& cand_raw : {two_a_x + B - *s, two_a_x + B + *s}) {
        if (cand_raw.is_zero() || cand_raw.is_constant()) continue;
        Poly cand = cand_raw.monic();
        auto quot = f.divided_by(cand);
        if (quot && !quot->is_constant()) return cand;
        (void)budget;
    }
    return std::nullopt;
}

} // namespace

std::optional<Poly> poly_kth_root(const Poly& f, std::uint32_t k) {
    if (f.is_zero()) return f;
    if (k < 2) return std::nullopt;
    const auto& ring = f.ring();
    // leading term must be an exact k-th power
    auto root_term = [&](const Term& t) -> std::optional<Term> {
        Monomial m(t.mon.nvars());
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (t.mon.e[i] % k) return std::nullopt;
            m.e[i] = t.mon.e[i] / k;
        }
        auto c = scalar_kth_root(t.coef, k);
        if (!c) return std::nullopt;
        return Term{m, *c};
    };
    auto lt_root = root_term(f.lt());
    if (!lt_root) return std::nullopt;
    Poly s = Poly::from_terms(ring, {*lt_root});
    for (int guard = 0; guard < 400; ++guard) {
        Poly r = f - s.pow(k);
        if (r.is_zero()) return s;
        // next term: lt(r) / (k * lt(s)^(k-1))
        Poly den = s;
        Poly lead = Poly::from_terms(ring, {den.lt()});
        Poly dpow = lead.pow(k - 1).scaled(Scalar(ring->field, long(k)));
        const Term& rt = r.lt();
        const Term& dt = dpow.lt();
        if (!dt.mon.divides(rt.mon)) return std::nullopt;
        Term nt{rt.mon / dt.mon, rt.coef / dt.coef};
        // must be strictly below the current lead to converge
        if (ring->order.compare(nt.mon, lt_root->mon) >= 0) return std::nullopt;
        s += Poly::from_terms(ring, {nt});
    }
    return std::nullopt;
}

std::optional<Scalar> scalar_sqrt(const Scalar& c) { return scalar_kth_root(c, 2); }

std::optional<Poly> find_factor(const Poly& f, Budget& budget) {
    if (f.is_zero() || f.is_constant()) return std::nullopt;
    const auto& ring = f.ring();
    // monomial content
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        bool divides_all = true;
        for (const auto& t : f.terms())
            if (t.mon.e[i] == 0) { divides_all = false; break; }
        if (divides_all && !(f.terms().size() == 1 && f.lm().degree() == 1))
            return Poly::variable(ring, i);
    }
    // perfect powers
    for (std::uint32_t k = 2; k <= f.total_degree(); ++k) {
        auto r = poly_kth_root(f, k);
        if (r && !r->is_constant()) return r;
    }
    int var = single_variable(f);
    if (var >= 0) {
        if (f.total_degree() == 1) return std::nullopt;
        return univariate_factor(f, std::size_t(var), budget);
    }
    // multivariate: quadratic-in-one-variable attempts
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        std::uint32_t dmax = 0;
        for (const auto& t : f.terms()) dmax = std::max(dmax, t.mon.e[i]);
        if (dmax == 2) {
            auto g = quadratic_split(f, i, budget);
            if (g) return g;
        }
    }
    return std::nullopt;
}

} // namespace cmlab::algebra
