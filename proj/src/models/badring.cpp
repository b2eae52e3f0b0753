#include "cmlab/models/badring.hpp"

#include <algorithm>
#include <cctype>

namespace cmlab::models {

using algebra::Field;
using algebra::IdealHandle;
using cmlab::ParseError;
using algebra::PresentedRing;

TruncatedBadRing make_bad_ring(int N, Budget& budget) {
    if (N < 1) throw DomainError("bad ring: N must be positive");
    if (N > 12) throw SizeGuard("bad ring: truncation depth capped at 12");
    std::vector<std::string> vars = {"x"};
    for (int i = 1; i <= N; ++i) vars.push_back("y" + std::to_string(i));
    auto amb = algebra::make_ring(Field{0}, vars);
    Poly x = Poly::variable(amb, 0);
    std::vector<Poly> rels;
    std::vector<Poly> ys;
    for (int i = 1; i <= N; ++i) {
        Poly yi = Poly::variable(amb, std::size_t(i));
        ys.push_back(yi);
        rels.push_back(x.pow(std::uint32_t(i)) * yi);
    }
    auto ring = PresentedRing::make(amb, rels, budget);
    for (auto& yi : ys) yi = ring->nf(yi);
    return TruncatedBadRing{N, ring, ring->nf(x), std::move(ys)};
}

BadChain bad_colon_chain(int N, Budget& budget) {
    if (N < 2) throw DomainError("bad colon chain: need N >= 2 to exhibit strict growth");
    TruncatedBadRing T = make_bad_ring(N, budget);
    BadChain out;
    out.N = N;
    out.citation = "Thm 2.3";

    IdealHandle zero(T.ring, {}, budget);
    IdealHandle prev = zero;
    bool all_strict = true;
    for (int n = 1; n <= N; ++n) {
        BadChainLevel lvl;
        lvl.n = n;
        IdealHandle cur = algebra::ideal_colon(zero, T.x.pow(std::uint32_t(n)), budget);
        for (const auto& g : cur.basis()) lvl.colon_basis.push_back(g.str());
        const Poly& yn = T.y[std::size_t(n - 1)];
        bool gained = cur.contains(yn, budget) && !prev.contains(yn, budget);
        lvl.strict_vs_prev = gained && cur != prev;
        if (lvl.strict_vs_prev) lvl.witness = yn.str();
        all_strict = all_strict && lvl.strict_vs_prev;
        out.levels.push_back(std::move(lvl));
        prev = cur;
    }
    out.strictly_increasing = all_strict;
    IdealHandle beyond = algebra::ideal_colon(zero, T.x.pow(std::uint32_t(N + 1)), budget);
    out.stabilizes_at_N = beyond == prev;
    out.limit_conclusion =
        "each truncation certifies y_n x^(n-1) != 0 and y_n x^n = 0, so in the "
        "untruncated ring the chain (0 : x^n) never stabilizes and x is not "
        "weakly proregular; the truncation itself is Noetherian and stabilizes "
        "at level N as expected";
    return out;
}

BadRingLimitAdapter::BadRingLimitAdapter(int verify_depth)
    : verify_depth_(std::max(verify_depth, 2)) {}

std::string BadRingLimitAdapter::name() const { return "badring(limit)"; }

std::string BadRingLimitAdapter::capabilities() const {
    return "untruncated ring QQ[x, y1, y2, ...]/(x y1, x^2 y2, ...): answers are "
           "available for sequences of pure powers of x only, each verified "
           "inside truncations of depth up to " + std::to_string(verify_depth_);
}

std::vector<seq::Elem> BadRingLimitAdapter::parse_elements(const std::string& comma_list,
                                                           Budget& budget) {
    budget.charge(1);
    std::vector<seq::Elem> out;
    std::string cur;
    auto flush = [&] {
        std::string t;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        cur.clear();
        std::uint32_t e = 0;
        if (t == "x") e = 1;
        else if (t.rfind("x^", 0) == 0) {
            for (char c : t.substr(2)) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("bad ring limit: expected a power of x, got '" + t + "'");
                e = e * 10 + std::uint32_t(c - '0');
            }
        } else {
            throw DomainError("bad ring limit: only pure powers of x are answerable, got '" +
                              t + "'");
        }
        if (e == 0) throw DomainError("bad ring limit: x^0 is a unit, not an answerable element");
        for (std::size_t k = 0; k < powers_.size(); ++k)
            if (powers_[k] == e) {
                out.push_back(k);
                return;
            }
        powers_.push_back(e);
        out.push_back(powers_.size() - 1);
    };
    for (char c : comma_list) {
        if (c == ',') {
            flush();
            continue;
        }
        cur += c;
    }
    flush();
    return out;
}

std::string BadRingLimitAdapter::element_str(seq::Elem h) const {
    std::uint32_t e = powers_.at(h);
    return e == 1 ? "x" : "x^" + std::to_string(e);
}

int BadRingLimitAdapter::dimension(Budget&) {
    throw DomainError("bad ring limit: the ring has infinite Krull dimension "
                      "witnesses outside every truncation; dimension is not reported");
}

bool BadRingLimitAdapter::is_proper(const seq::Seq&, Budget& budget) {
    budget.charge(1);
    return true; // powers of x lie in (x, y1, y2, ...)
}

algebra::Height BadRingLimitAdapter::height(const seq::Seq& x, Budget& budget) {
    budget.charge(1);
    if (x.empty()) return algebra::Height{};
    // (x) is itself prime (the quotient is the polynomial ring on the y's) and
    // is minimal: any prime inside it must contain x because it misses every y_i
    return algebra::Height{false, 0};
}

seq::WprVerdict BadRingLimitAdapter::weakly_proregular(const seq::Seq& x, int bound,
                                                       Budget& budget) {
    seq::WprVerdict v;
    v.level = 1;
    v.bound = bound;
    v.kind = seq::WprKind::Counterexample;
    v.citation = "Thm 2.3";
    (void)x;
    // verify the witness family inside truncations: y_m kills x^m yet survives
    // multiplication by x^(m-1), so no H_1 transition map is zero
    int depth = std::min(bound > 0 ? bound : verify_depth_, verify_depth_);
    std::string checked;
    for (int m = 1; m <= depth; ++m) {
        TruncatedBadRing T = make_bad_ring(std::max(m, 2), budget);
        Poly xm = T.x.pow(std::uint32_t(m));
        Poly survivor = T.ring->nf(T.x.pow(std::uint32_t(m - 1)) * T.y[std::size_t(m - 1)]);
        bool kills = T.ring->is_zero_elem(T.ring->nf(xm * T.y[std::size_t(m - 1)]));
        if (!kills || survivor.is_zero())
            throw DomainError("bad ring limit: truncation witness failed, the model is wrong");
        if (!checked.empty()) checked += ", ";
        checked += "m=" + std::to_string(m);
    }
    v.detail = "for every m the class of y_m lies in (0 : x^m) but x^(m-1) y_m != 0, "
               "so the transition H_1(x^m) -> H_1(x) is nonzero; witnesses verified in "
               "truncations at " + checked;
    return v;
}

seq::ParamVerdict BadRingLimitAdapter::parameter(const seq::Seq& x, Budget& budget) {
    seq::ParamVerdict v;
    v.length = x.size();
    v.height = height(x, budget);
    v.value = false;
    v.reason = "fails both parameter requirements: the sequence is not weakly "
               "proregular and ht (x) = 0 since (x) is a minimal prime";
    v.citation = "Def 3.1; Cor 3.5";
    return v;
}

grade::GradeValue BadRingLimitAdapter::sequence_grade(const seq::Seq& x, Budget& budget) {
    budget.charge(1);
    grade::GradeValue g;
    g.route = "model";
    if (x.empty()) {
        g.value = 0;
        return g;
    }
    g.value = 0; // (0 : x^e) contains y_e, so depth on the ideal is zero
    return g;
}

seq::RegStep BadRingLimitAdapter::regular_step(const seq::Seq& prefix, seq::Elem x,
                                               Budget& budget) {
    budget.charge(1);
    seq::RegStep st;
    std::uint32_t e = powers_.at(x);
    st.nzd = false;
    st.witness = "y" + std::to_string(e);
    st.detail = prefix.empty()
                    ? "x^" + std::to_string(e) + " y" + std::to_string(e) + " = 0"
                    : "already a zerodivisor modulo nothing; prefixes of x-powers "
                      "only enlarge the annihilator";
    return st;
}

grade::GradeValue BadRingLimitAdapter::pdepth(Budget&) {
    throw DomainError("bad ring limit: p-depth needs colons against the full "
                      "maximal ideal, which no truncation certifies");
}

} // namespace cmlab::models
