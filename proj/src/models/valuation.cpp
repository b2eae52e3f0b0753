#include "cmlab/models/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmlab::models {

using algebra::Field;
using algebra::Monomial;
using cmlab::ParseError;
using algebra::Scalar;
using algebra::Term;

std::string ValValue::str() const {
    return "(" + std::to_string(hi) + "," + std::to_string(lo) + ")";
}

int val_cmp(const ValValue& x, const ValValue& y) {
    if (x.hi != y.hi) return x.hi < y.hi ? -1 : 1;
    if (x.lo != y.lo) return x.lo < y.lo ? -1 : 1;
    return 0;
}

ValuationModel::ValuationModel() {
    r_ = algebra::make_ring(Field{0}, {"a", "b"});
}

ValElem ValuationModel::zero() const {
    return {Poly::zero(r_), Poly::constant(r_, 1)};
}

ValElem ValuationModel::one() const {
    return {Poly::constant(r_, 1), Poly::constant(r_, 1)};
}

ValElem ValuationModel::u() const {
    return {Poly::variable(r_, 1), Poly::constant(r_, 1)};
}

ValElem ValuationModel::w() const {
    return {Poly::variable(r_, 0), Poly::constant(r_, 1)};
}

namespace {

algebra::Poly ab_monomial(const RingDescPtr& r, long a_exp, long b_exp) {
    Monomial m(r->nvars());
    m.e[0] = std::uint32_t(a_exp);
    m.e[1] = std::uint32_t(b_exp);
    return algebra::Poly::from_terms(r, {Term{m, Scalar::one(r->field)}});
}

} // namespace

ValElem ValuationModel::from_value(const ValValue& v) const {
    return {ab_monomial(r_, std::max(v.lo, 0L), std::max(v.hi, 0L)),
            ab_monomial(r_, std::max(-v.lo, 0L), std::max(-v.hi, 0L))};
}

bool ValuationModel::is_zero(const ValElem& f) const { return f.num.is_zero(); }

ValElem ValuationModel::add(const ValElem& f, const ValElem& g) const {
    return {f.num * g.den + g.num * f.den, f.den * g.den};
}

ValElem ValuationModel::sub(const ValElem& f, const ValElem& g) const {
    return add(f, neg(g));
}

ValElem ValuationModel::mul(const ValElem& f, const ValElem& g) const {
    return {f.num * g.num, f.den * g.den};
}

ValElem ValuationModel::div(const ValElem& f, const ValElem& g) const {
    if (g.num.is_zero()) throw DomainError("valuation model: division by zero");
    return {f.num * g.den, f.den * g.num};
}

ValElem ValuationModel::neg(const ValElem& f) const { return {-f.num, f.den}; }

ValElem ValuationModel::pow(const ValElem& f, std::uint32_t n) const {
    return {f.num.pow(n), f.den.pow(n)};
}

bool ValuationModel::eq(const ValElem& f, const ValElem& g) const {
    return f.num * g.den == g.num * f.den;
}

std::string ValuationModel::str(const ValElem& f) const {
    if (f.num.is_zero()) return "0";
    if (f.den.is_one()) return f.num.str();
    if (f.den.terms().size() == 1)
        return f.num.str() + " / " + f.den.str();
    return "(" + f.num.str() + ") / (" + f.den.str() + ")";
}

namespace {

ValValue poly_value(const algebra::Poly& f) {
    // v = (order in b, order in a of the lowest-b part)
    long bo = 0, ao = 0;
    bool first = true;
    for (const auto& t : f.terms()) {
        long tb = long(t.mon.e[1]);
        long ta = long(t.mon.e[0]);
        if (first || tb < bo) {
            bo = tb;
            ao = ta;
            first = false;
        } else if (tb == bo && ta < ao) {
            ao = ta;
        }
    }
    return ValValue{bo, ao};
}

} // namespace

ValValue ValuationModel::value(const ValElem& f) const {
    if (f.num.is_zero()) throw DomainError("valuation of zero");
    ValValue n = poly_value(f.num);
    ValValue d = poly_value(f.den);
    return ValValue{n.hi - d.hi, n.lo - d.lo};
}

bool ValuationModel::in_ring(const ValElem& f) const {
    if (is_zero(f)) return true;
    return val_cmp(value(f), ValValue{0, 0}) >= 0;
}

bool ValuationModel::in_maximal(const ValElem& f) const {
    if (is_zero(f)) return true;
    return val_cmp(value(f), ValValue{0, 0}) > 0;
}

bool ValuationModel::in_p(const ValElem& f) const {
    if (is_zero(f)) return true;
    return value(f).hi >= 1;
}

namespace {

// recursive descent over u, w (aliases b, a), integers, + - * / ^ ( )
struct ValParser {
    const ValuationModel& V;
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i;
        return true;
    }

    ValElem expr() {
        ValElem acc = term();
        for (;;) {
            if (eat('+')) acc = V.add(acc, term());
            else if (eat('-')) acc = V.sub(acc, term());
            else return acc;
        }
    }

    ValElem term() {
        ValElem acc = factor();
        for (;;) {
            if (eat('*')) acc = V.mul(acc, factor());
            else if (eat('/')) acc = V.div(acc, factor());
            else return acc;
        }
    }

    ValElem factor() {
        if (eat('-')) return V.neg(factor());
        ValElem base = atom();
        if (eat('^')) {
            skip();
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw ParseError("valuation parser: exponent expected at '" + s.substr(i) + "'");
            base = V.pow(base, std::uint32_t(std::stoul(s.substr(i, j - i))));
            i = j;
        }
        return base;
    }

    ValElem atom() {
        skip();
        if (i >= s.size()) throw ParseError("valuation parser: unexpected end of input");
        if (eat('(')) {
            ValElem e = expr();
            if (!eat(')')) throw ParseError("valuation parser: expected ')'");
            return e;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            long n = std::stol(s.substr(i, j - i));
            i = j;
            ValElem e = V.one();
            e.num = Poly::constant(V.frac_ring(), n);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            if (name == "u" || name == "b") return V.u();
            if (name == "w" || name == "a") return V.w();
            throw ParseError("valuation parser: unknown symbol '" + name + "' (use u, w)");
        }
        throw ParseError(std::string("valuation parser: unexpected character '") + c + "'");
    }
};

} // namespace

ValElem ValuationModel::parse(const std::string& text) const {
    ValParser p{*this, text};
    ValElem e = p.expr();
    p.skip();
    if (p.i != text.size())
        throw ParseError("valuation parser: trailing input '" + text.substr(p.i) + "'");
    return e;
}

std::optional<std::size_t> ValuationModel::principal_gen(const std::vector<ValElem>& gens) const {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (is_zero(gens[k])) continue;
        if (!best || val_cmp(value(gens[k]), value(gens[*best])) < 0) best = k;
    }
    return best;
}

bool ValuationModel::ideal_member(const ValElem& f, const std::vector<ValElem>& gens) const {
    if (is_zero(f)) return true;
    auto g = principal_gen(gens);
    if (!g) return false;
    return val_cmp(value(f), value(gens[*g])) >= 0;
}

std::vector<ValElem> ValuationModel::ideal_colon(const std::vector<ValElem>& gens,
                                                 const ValElem& f) const {
    if (is_zero(f)) return {one()};
    auto g = principal_gen(gens);
    if (!g) return {};
    ValValue vg = value(gens[*g]);
    ValValue vf = value(f);
    ValValue t{vg.hi - vf.hi, vg.lo - vf.lo};
    if (val_cmp(t, ValValue{0, 0}) <= 0) return {one()};
    return {from_value(t)};
}

algebra::Height ValuationModel::ideal_height(const std::vector<ValElem>& gens) const {
    auto g = principal_gen(gens);
    algebra::Height h;
    if (!g) return h; // zero ideal, height 0
    ValValue v = value(gens[*g]);
    if (val_cmp(v, ValValue{0, 0}) <= 0) {
        h.infinite = true; // unit ideal
        return h;
    }
    h.value = v.hi >= 1 ? 1 : 2;
    return h;
}

Example37 val_example37(const ValuationModel& V, int n_max, Budget& budget) {
    if (n_max < 1) throw DomainError("val_example37: n_max must be positive");
    Example37 out;
    out.n_max = n_max;
    out.citation = "Example 3.7";

    ValElem u = V.u(), w = V.w();
    ValElem beta = V.div(u, w); // value (1,-1), outside V

    bool all = true;
    for (int n = 1; n <= n_max; ++n) {
        budget.charge(8);
        Example37Level lvl;
        lvl.n = n;
        ValElem un = V.pow(u, std::uint32_t(n));
        ValElem wn = V.pow(w, std::uint32_t(n));
        ValElem u2n = V.pow(u, std::uint32_t(2 * n));
        ValElem w2n = V.pow(w, std::uint32_t(2 * n));
        ValElem b2n = V.pow(beta, std::uint32_t(2 * n));
        ValElem bn = V.pow(beta, std::uint32_t(n));

        // top Koszul differential e12 -> (-w^n, u^n); injective over a domain
        // when a component is nonzero, and d1(d2(e12)) = 0
        ValElem d2a = V.neg(wn), d2b = un;
        bool cycle = V.is_zero(V.add(V.mul(d2a, un), V.mul(d2b, wn)));
        lvl.h2_zero = cycle && (!V.is_zero(d2a) || !V.is_zero(d2b));

        // Z_1 of the doubled sequence is spanned by (1, -beta^2n)
        lvl.syzygy_identity =
            V.is_zero(V.add(V.mul(V.one(), u2n), V.mul(V.neg(b2n), w2n)));

        // the degree-1 power map sends e_i to x_i^n e_i; the image of the
        // spanning cycle is -beta^n times the boundary d2(e12)
        ValElem img1 = V.mul(un, V.one());
        ValElem img2 = V.mul(wn, V.neg(b2n));
        ValElem c = V.neg(bn);
        lvl.boundary_identity = V.eq(img1, V.mul(c, d2a)) && V.eq(img2, V.mul(c, d2b));

        all = all && lvl.h2_zero && lvl.syzygy_identity && lvl.boundary_identity;
        out.levels.push_back(lvl);
    }
    out.weakly_proregular = all;
    out.height = V.ideal_height({u, w});
    // (u,w)V equals wV: each generator of either side lies in the other
    out.principal_identity = V.ideal_member(u, {w}) && V.ideal_member(w, {w}) &&
                             V.ideal_member(w, {u, w});
    out.parameter = false;
    out.detail =
        "the pair (u,w) is weakly proregular: H_2 vanishes over a domain and the "
        "H_1 transition maps factor through boundaries via the cycle identity "
        "u^2n = beta^2n w^2n; yet (u,w)V = wV is principal, so the top Cech "
        "cohomology H^2 vanishes and Def 3.1(3) fails at the maximal ideal "
        "although ht (u,w)V = 2";
    return out;
}

ValuationAdapter::ValuationAdapter(ValuationModel model) : model_(std::move(model)) {}

std::string ValuationAdapter::name() const { return "valuation(rank=2)"; }

std::string ValuationAdapter::capabilities() const {
    return "rank-2 valuation domain: principal finitely generated ideals, exact "
           "value arithmetic; wpr certified for every finite sequence, parameter "
           "sequences decided by length, grade and depth by principality";
}

seq::Elem ValuationAdapter::add_element(const ValElem& f) {
    if (!model_.in_ring(f))
        throw DomainError("valuation model: element " + model_.str(f) +
                          " has value " + model_.value(f).str() +
                          " and lies outside the valuation ring");
    for (std::size_t k = 0; k < elems_.size(); ++k)
        if (model_.eq(elems_[k], f)) return k;
    elems_.push_back(f);
    return elems_.size() - 1;
}

std::vector<seq::Elem> ValuationAdapter::parse_elements(const std::string& comma_list,
                                                        Budget& budget) {
    budget.charge(1);
    std::vector<seq::Elem> out;
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        if (cur.find_first_not_of(" \t") == std::string::npos)
            throw ParseError("valuation parser: empty element in list");
        out.push_back(add_element(model_.parse(cur)));
        cur.clear();
    };
    for (char c : comma_list) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        cur += c;
    }
    if (!cur.empty() || out.empty()) flush();
    return out;
}

std::string ValuationAdapter::element_str(seq::Elem h) const {
    return model_.str(elems_.at(h));
}

std::vector<ValElem> ValuationAdapter::elems(const seq::Seq& x) const {
    std::vector<ValElem> v;
    v.reserve(x.size());
    for (auto h : x) v.push_back(elems_.at(h));
    return v;
}

int ValuationAdapter::dimension(Budget& budget) {
    budget.charge(1);
    return 2;
}

bool ValuationAdapter::is_proper(const seq::Seq& x, Budget& budget) {
    budget.charge(1);
    auto gens = elems(x);
    auto g = model_.principal_gen(gens);
    if (!g) return true;
    return val_cmp(model_.value(gens[*g]), ValValue{0, 0}) > 0;
}

algebra::Height ValuationAdapter::height(const seq::Seq& x, Budget& budget) {
    budget.charge(1);
    return model_.ideal_height(elems(x));
}

seq::WprVerdict ValuationAdapter::weakly_proregular(const seq::Seq& x, int bound,
                                                    Budget& budget) {
    budget.charge(1);
    (void)bound;
    seq::WprVerdict v;
    v.kind = seq::WprKind::CertifiedByModel;
    v.citation = "Thm 2.3; Example 3.7";
    v.detail = "every finitely generated ideal of the valuation domain is "
               "principal and weak proregularity is a radical invariant, so any "
               "finite sequence (" + std::to_string(x.size()) +
               " elements here) is weakly proregular";
    return v;
}

seq::ParamVerdict ValuationAdapter::parameter(const seq::Seq& x, Budget& budget) {
    seq::ParamVerdict v;
    v.length = x.size();
    v.height = height(x, budget);
    if (!is_proper(x, budget)) {
        v.value = false;
        v.reason = "the sequence generates the unit ideal";
        v.citation = "Def 3.1";
        return v;
    }
    if (x.empty()) {
        v.value = true;
        v.reason = "empty sequence in a nonzero ring";
        v.citation = "Def 3.1";
        return v;
    }
    auto gens = elems(x);
    auto g = model_.principal_gen(gens);
    if (x.size() == 1) {
        if (!g) {
            v.value = false;
            v.reason = "the element is zero, so H^1 vanishes";
            v.citation = "Cor 3.5; Lemma 3.4";
            return v;
        }
        v.value = true;
        v.reason = "nonzero nonunit of a domain: ht >= 1 and the colons (0:x^n) "
                   "are all zero";
        v.citation = "Cor 3.5";
        return v;
    }
    v.value = false;
    v.reason = "(x)V is principal, so the top Cech cohomology H^" +
               std::to_string(x.size()) + " vanishes at every prime containing "
               "the ideal; Def 3.1(3) fails although ht = " + v.height.str();
    v.citation = "Example 3.7";
    return v;
}

grade::GradeValue ValuationAdapter::sequence_grade(const seq::Seq& x, Budget& budget) {
    budget.charge(1);
    grade::GradeValue g;
    g.route = "model";
    if (!is_proper(x, budget)) {
        g.infinite = true;
        return g;
    }
    auto gens = elems(x);
    if (!model_.principal_gen(gens)) {
        g.value = 0; // zero ideal: (0 : 0) = V is nonzero
        return g;
    }
    g.value = 1; // nonzero proper: one regular element, then total quotient
    return g;
}

seq::RegStep ValuationAdapter::regular_step(const seq::Seq& prefix, seq::Elem x,
                                            Budget& budget) {
    budget.charge(1);
    seq::RegStep st;
    const ValElem& f = elems_.at(x);
    auto pgens = elems(prefix);
    auto colon = model_.ideal_colon(pgens, f);
    if (colon.empty()) {
        // zero prefix ideal: zerodivision is plain zerodivision in a domain
        st.nzd = !model_.is_zero(f);
        if (!st.nzd) {
            st.witness = "1";
            st.detail = "the element is zero";
        }
        return st;
    }
    const ValElem& h = colon[0];
    st.nzd = model_.ideal_member(h, pgens);
    if (!st.nzd) {
        st.witness = model_.str(h);
        st.detail = "witness value " + model_.value(h).str() + " lies in ((x')V : x) "
                    "but below the prefix value";
    }
    return st;
}

grade::GradeValue ValuationAdapter::pdepth(Budget& budget) {
    budget.charge(1);
    grade::GradeValue g;
    g.value = 1;
    g.route = "model";
    return g;
}

} // namespace cmlab::models
