#include "cmlab/models/trivext.hpp"

#include "cmlab/dimension.hpp"
#include "cmlab/grade.hpp"

namespace cmlab::models {

using algebra::IdealHandle;
using algebra::ModulePresentation;
using cmlab::ParseError;

TrivialExtension make_trivext(PresentedRingPtr base, std::vector<Poly> max_ideal,
                              int level) {
    if (!base) throw DomainError("trivial extension: missing base ring");
    if (level < 0) throw DomainError("trivial extension: level must be nonnegative");
    std::vector<Poly> m;
    for (auto& f : max_ideal) {
        Poly g = base->nf(f);
        if (!g.is_zero()) m.push_back(g);
    }
    if (m.empty())
        throw DomainError("trivial extension: the distinguished maximal ideal is zero");
    return TrivialExtension{std::move(base), std::move(m), level};
}

algebra::Height tx_height(const TrivialExtension& S, const std::vector<Poly>& gens,
                         Budget& budget) {
    IdealHandle I(S.base, gens, budget);
    return algebra::ideal_height(I, budget);
}

grade::GradeValue tx_p_grade(const TrivialExtension& S, const std::vector<Poly>& gens,
                             Budget& budget) {
    IdealHandle I(S.base, gens, budget);
    grade::GradeValue g;
    if (I.is_unit()) {
        g.infinite = true;
        g.route = "model";
        return g;
    }
    algebra::Height h = algebra::ideal_height(I, budget);
    if (!h.infinite && h.value <= S.level) {
        g.value = 0;
        g.route = "model";
        return g;
    }
    return grade::p_grade(S.base, gens, ModulePresentation::free_module(S.base), budget);
}

seq::ParamVerdict tx_parameter(const TrivialExtension& S, const std::vector<Poly>& x,
                               Budget& budget) {
    seq::ParamVerdict v;
    v.length = x.size();
    IdealHandle I(S.base, x, budget);
    v.height = algebra::ideal_height(I, budget);
    if (I.is_unit()) {
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
    v.value = !v.height.infinite && v.height.value == int(x.size());
    v.reason = "parameter sequences on the extension match those of the Noetherian "
               "base, where the test is ht (x)R = length; here ht = " +
               v.height.str() + ", length = " + std::to_string(x.size());
    v.citation = "Prop 3.8; Remark 3.2";
    return v;
}

TrivExtAdapter::TrivExtAdapter(TrivialExtension S) : S_(std::move(S)) {}

std::string TrivExtAdapter::name() const {
    std::string m;
    for (std::size_t k = 0; k < S_.max_ideal.size(); ++k) {
        if (k) m += ", ";
        m += S_.max_ideal[k].str();
    }
    return "trivext(" + S_.base->str() + " at (" + m + "), level=" +
           std::to_string(S_.level) + ")";
}

std::string TrivExtAdapter::capabilities() const {
    return "square-zero extension of a Noetherian base by residue fields of the "
           "primes of height <= " + std::to_string(S_.level) +
           "; heights, grades, parameter and regular verdicts all reduce to exact "
           "base computations";
}

seq::Elem TrivExtAdapter::add_element(const Poly& f) {
    Poly g = S_.base->nf(f);
    for (std::size_t k = 0; k < elems_.size(); ++k)
        if (elems_[k] == g) return k;
    elems_.push_back(g);
    return elems_.size() - 1;
}

std::vector<seq::Elem> TrivExtAdapter::parse_elements(const std::string& comma_list,
                                                      Budget& budget) {
    budget.charge(1);
    auto polys = algebra::parse_poly_list(S_.base->ambient(), comma_list);
    if (polys.empty()) throw ParseError("empty element list");
    std::vector<seq::Elem> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(add_element(f));
    return out;
}

std::string TrivExtAdapter::element_str(seq::Elem h) const {
    return elems_.at(h).str();
}

std::vector<Poly> TrivExtAdapter::polys(const seq::Seq& x) const {
    std::vector<Poly> v;
    v.reserve(x.size());
    for (auto h : x) v.push_back(elems_.at(h));
    return v;
}

int TrivExtAdapter::dimension(Budget& budget) {
    return algebra::krull_dimension(S_.base, budget);
}

bool TrivExtAdapter::is_proper(const seq::Seq& x, Budget& budget) {
    IdealHandle I(S_.base, polys(x), budget);
    return !I.is_unit();
}

algebra::Height TrivExtAdapter::height(const seq::Seq& x, Budget& budget) {
    return tx_height(S_, polys(x), budget);
}

seq::WprVerdict TrivExtAdapter::weakly_proregular(const seq::Seq& x, int bound,
                                                  Budget& budget) {
    budget.charge(1);
    (void)bound;
    seq::WprVerdict v;
    v.kind = seq::WprKind::CertifiedByModel;
    v.citation = "Prop 2.8; Thm 2.3";
    v.detail = "weak proregularity transfers across the square-zero extension to "
               "the projected sequence of " + std::to_string(x.size()) +
               " elements, which lives in a Noetherian ring";
    return v;
}

seq::ParamVerdict TrivExtAdapter::parameter(const seq::Seq& x, Budget& budget) {
    return tx_parameter(S_, polys(x), budget);
}

grade::GradeValue TrivExtAdapter::sequence_grade(const seq::Seq& x, Budget& budget) {
    return tx_p_grade(S_, polys(x), budget);
}

seq::RegStep TrivExtAdapter::regular_step(const seq::Seq& prefix, seq::Elem x,
                                          Budget& budget) {
    seq::RegStep st;
    auto pref = polys(prefix);
    const Poly& f = elems_.at(x);
    IdealHandle P(S_.base, pref, budget);
    IdealHandle colon = algebra::ideal_colon(P, f, budget);
    bool base_nzd = colon == P;

    auto all = pref;
    all.push_back(f);
    IdealHandle J(S_.base, all, budget);
    algebra::Height hj = algebra::ideal_height(J, budget);
    bool killed = !hj.infinite && hj.value <= S_.level;

    st.nzd = base_nzd && !killed;
    if (st.nzd) return st;

    if (killed) {
        // socle witness: alpha spans the k(p) component for a low prime over J
        for (const auto& p : algebra::minimal_primes(J, budget)) {
            algebra::Height hp = algebra::prime_height(p, budget);
            if (!hp.infinite && hp.value <= S_.level) {
                st.witness = "(0, alpha) with alpha spanning k(p), p = " + p.str();
                st.detail = "every prime of height <= " + std::to_string(S_.level) +
                            " containing the prefix and the element contributes a "
                            "socle element killed by it";
                return st;
            }
        }
        st.witness = "(0, alpha)";
        st.detail = "ht of the extended ideal is " + hj.str() +
                    " <= level, so a residue-field component is killed";
        return st;
    }
    for (const auto& g : colon.basis()) {
        if (!P.contains(g, budget)) {
            st.witness = "(" + S_.base->nf(g).str() + ", 0)";
            st.detail = "base-ring zerodivision witness from the colon ideal";
            return st;
        }
    }
    st.witness = "(colon witness, 0)";
    st.detail = "base colon strictly exceeds the prefix ideal";
    return st;
}

grade::GradeValue TrivExtAdapter::pdepth(Budget& budget) {
    IdealHandle m(S_.base, S_.max_ideal, budget);
    algebra::Height h = algebra::ideal_height(m, budget);
    grade::GradeValue g;
    if (!h.infinite && h.value <= S_.level) {
        g.value = 0;
        g.route = "model";
        return g;
    }
    return grade::p_grade(S_.base, S_.max_ideal,
                          ModulePresentation::free_module(S_.base), budget);
}

} // namespace cmlab::models
