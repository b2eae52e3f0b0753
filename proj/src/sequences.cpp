#include "cmlab/sequences.hpp"

#include "cmlab/primes.hpp"

#include <algorithm>
#include <sstream>

namespace cmlab::seq {

using namespace algebra;

WprVerdict is_weakly_proregular(RingAdapter& A, const Seq& x, int bound, Budget& budget) {
    return A.weakly_proregular(x, bound, budget);
}

ParamVerdict is_parameter_sequence(RingAdapter& A, const Seq& x, Budget& budget) {
    return A.parameter(x, budget);
}

SpsVerdict is_strong_parameter_sequence(RingAdapter& A, const Seq& x, Budget& budget) {
    SpsVerdict v;
    v.value = true;
    for (std::size_t k = 1; k <= x.size(); ++k) {
        Seq prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
        ParamVerdict p = A.parameter(prefix, budget);
        v.trace.push_back(p);
        if (!p.value) {
            v.value = false;
            v.failing_prefix = k;
            break;
        }
    }
    return v;
}

RegVerdict is_regular_sequence(RingAdapter& A, const Seq& x, Budget& budget) {
    RegVerdict v;
    for (std::size_t k = 0; k < x.size(); ++k) {
        Seq prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
        RegStep s = A.regular_step(prefix, x[k], budget);
        if (!s.nzd) {
            v.value = false;
            v.failing_step = k + 1;
            v.witness = s.witness;
            v.detail = s.detail;
            return v;
        }
    }
    if (!A.is_proper(x, budget)) {
        v.value = false;
        v.improper = true;
        v.detail = "possibly improper regular sequence: generates the unit ideal";
        return v;
    }
    v.value = true;
    return v;
}

SequenceReport sequence_report(RingAdapter& A, const Seq& x, int wpr_bound, bool with_grade,
                               Budget& budget) {
    SequenceReport r;
    for (Elem h : x)
        r.elements.push_back(A.element_str(h));
    r.strong_parameter = true;
    for (std::size_t k = 1; k <= x.size(); ++k) {
        Seq prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
        PrefixReport pr;
        pr.length = k;
        pr.wpr = A.weakly_proregular(prefix, wpr_bound, budget);
        pr.parameter = A.parameter(prefix, budget);
        if (with_grade)
            pr.grade = A.sequence_grade(prefix, budget);
        if (!pr.parameter.value)
            r.strong_parameter = false;
        r.prefixes.push_back(std::move(pr));
    }
    r.regular = is_regular_sequence(A, x, budget);
    return r;
}

std::vector<Seq> enumerate_pool(std::size_t pool_size, std::size_t maxlen) {
    std::vector<Seq> out;
    std::vector<Seq> frontier{{}};
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::vector<Seq> next;
        for (const Seq& s : frontier) {
            for (Elem e = 0; e < pool_size; ++e) {
                if (std::find(s.begin(), s.end(), e) != s.end())
                    continue;
                Seq t = s;
                t.push_back(e);
                out.push_back(t);
                next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

Seq sorted_key(const Seq& s) {
    Seq k = s;
    std::sort(k.begin(), k.end());
    return k;
}

ParamVerdict memo_parameter(RingAdapter& A, CmMemo* memo, const Seq& prefix, Budget& budget) {
    if (!memo)
        return A.parameter(prefix, budget);
    Seq key = sorted_key(prefix);
    auto it = memo->parameter.find(key);
    if (it != memo->parameter.end())
        return it->second;
    ParamVerdict v = A.parameter(prefix, budget);
    ++memo->height_computations;
    memo->parameter.emplace(std::move(key), v);
    return v;
}

grade::GradeValue memo_grade(RingAdapter& A, CmMemo* memo, const Seq& prefix, Budget& budget) {
    if (!memo)
        return A.sequence_grade(prefix, budget);
    Seq key = sorted_key(prefix);
    auto it = memo->grade.find(key);
    if (it != memo->grade.end())
        return it->second;
    grade::GradeValue g = A.sequence_grade(prefix, budget);
    memo->grade.emplace(std::move(key), g);
    return g;
}

RegStep memo_step(RingAdapter& A, CmMemo* memo, const Seq& prefix, Elem x, Budget& budget) {
    if (!memo)
        return A.regular_step(prefix, x, budget);
    auto key = std::make_pair(sorted_key(prefix), x);
    auto it = memo->step.find(key);
    if (it != memo->step.end())
        return it->second;
    RegStep s = A.regular_step(prefix, x, budget);
    memo->step.emplace(std::move(key), s);
    return s;
}

} // namespace

CmVerdict cohen_macaulay_verdict(RingAdapter& A, const std::vector<Seq>& pool, Budget& budget,
                                 CmMemo* memo) {
    CmVerdict verdict;
    verdict.note = "pool-bounded search per Def 4.1: a clean pass is evidence, not a "
                   "proof of Cohen-Macaulayness";
    CmMemo local;
    if (!memo)
        memo = &local;
    for (const Seq& x : pool) {
        ++verdict.sequences_checked;
        bool sps = true;
        for (std::size_t k = 1; k <= x.size() && sps; ++k) {
            Seq prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
            sps = memo_parameter(A, memo, prefix, budget).value;
        }
        if (!sps)
            continue;
        ++verdict.sps_found;
        // Prop 4.2(c): a strong parameter sequence whose ideal has p-grade
        // below its length breaks Cohen-Macaulayness; prefixes are themselves
        // strong parameter sequences, so test each one
        bool violated = false;
        for (std::size_t k = 1; k <= x.size() && !violated; ++k) {
            Seq prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
            grade::GradeValue g = memo_grade(A, memo, prefix, budget);
            if (!g.infinite && g.value < static_cast<int>(k)) {
                CmViolation viol;
                for (Elem h : prefix)
                    viol.elements.push_back(A.element_str(h));
                viol.length = k;
                viol.grade = g;
                viol.citation = "Def 4.1; Prop 4.2";
                std::ostringstream os;
                os << "strong parameter sequence of length " << k << " with p-grade "
                   << g.str() << " (route " << g.route << ")";
                viol.certificate = os.str();
                verdict.violation_found = true;
                verdict.violation = std::move(viol);
                violated = true;
            }
        }
        if (violated)
            return verdict;
        // supplementary colon-route evidence
        bool regular = true;
        for (std::size_t k = 0; k < x.size() && regular; ++k) {
            Seq prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
            regular = memo_step(A, memo, prefix, x[k], budget).nzd;
        }
        if (regular && A.is_proper(x, budget))
            ++verdict.regular_confirmed;
    }
    return verdict;
}

UnmixedResult unmixedness_probe(const IdealHandle& I, int degree_bound, Budget& budget) {
    if (I.is_unit())
        throw DomainError("unmixedness probe: improper input");
    UnmixedResult res;
    res.ideal_height = ideal_height(I, budget);
    const RingDescPtr amb = I.ring()->ambient();
    const std::size_t nv = amb->nvars();
    if (nv > 8)
        throw SizeGuard("unmixedness probe limited to 8 variables");

    // all monomials of degree 1..bound, increasing degree then term order
    std::vector<Poly> candidates;
    std::vector<Monomial> layer{Monomial(nv)};
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Monomial> next;
        for (const Monomial& m : layer) {
            for (std::size_t i = 0; i < nv; ++i) {
                Monomial t = m;
                t.e[i] += 1;
                // avoid duplicates: only bump at or left of the first bumped slot
                bool lead = true;
                for (std::size_t j = i + 1; j < nv && lead; ++j)
                    if (m.e[j] > 0)
                        lead = false;
                if (lead)
                    next.push_back(t);
            }
        }
        std::sort(next.begin(), next.end(), [&](const Monomial& a, const Monomial& b) {
            return amb->order.compare(a, b) > 0;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Monomial& a, const Monomial& b) { return a.e == b.e; }),
                   next.end());
        for (const Monomial& m : next)
            candidates.push_back(Poly::from_terms(amb, {Term{m, Scalar(amb->field, 1)}}));
        layer = std::move(next);
    }

    for (const Poly& f : candidates) {
        ++res.candidates_tried;
        if (I.ring()->is_zero_elem(f) || I.contains(f, budget))
            continue;
        IdealHandle C = ideal_colon(I, f, budget);
        Height hc = C.is_unit() ? Height{true, 0} : ideal_height(C, budget);
        if (hc.infinite)
            continue; // f in I after normalization; defensive
        if (!res.ideal_height.infinite && hc.value > res.ideal_height.value) {
            res.witness_found = true;
            res.witness = I.ring()->nf(f, budget).str();
            res.colon_str = C.str();
            res.colon_height = hc;
            for (const IdealHandle& p : minimal_primes(C, budget)) {
                Height hp = prime_height(p, budget);
                if (!hp.infinite && hp.value > res.ideal_height.value) {
                    for (const Poly& g : p.basis())
                        res.witness_prime.push_back(g.str());
                    break;
                }
            }
            return res;
        }
    }
    res.note = "no embedded witness among " + std::to_string(res.candidates_tried) +
               " candidates; evidence only, not a proof of unmixedness";
    return res;
}

std::vector<LocalityPlanEntry> locality_reduction(PresentedRingAdapter& A, const Seq& x,
                                                  Budget& budget) {
    std::vector<LocalityPlanEntry> plan;
    IdealHandle I(A.ring(), A.polys(x), budget);
    if (I.is_unit())
        return plan;
    for (const IdealHandle& p : minimal_primes(I, budget)) {
        LocalityPlanEntry entry;
        for (const Poly& g : p.basis())
            entry.prime.push_back(g.str());
        entry.locally_regular = true;
        for (std::size_t k = 0; k < x.size(); ++k) {
            Seq prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
            IdealHandle P(A.ring(), A.polys(prefix), budget);
            IdealHandle C = ideal_colon(P, A.elements().at(x[k]), budget);
            LocalityStep step;
            step.step = k + 1;
            // the class of g dies in the localization at p exactly when its
            // annihilator escapes p; a colon generator surviving at p blocks
            // regularity there
            step.locally_regular = true;
            for (const Poly& g : C.basis()) {
                if (P.contains(g, budget))
                    continue;
                IdealHandle ann = ideal_colon(P, g, budget);
                bool escapes = false;
                for (const Poly& a : ann.basis()) {
                    if (!p.contains(a, budget)) {
                        escapes = true;
                        break;
                    }
                }
                if (!escapes) {
                    step.locally_regular = false;
                    step.obstruction = A.ring()->nf(g, budget).str();
                    break;
                }
            }
            if (!step.locally_regular)
                entry.locally_regular = false;
            entry.steps.push_back(std::move(step));
        }
        plan.push_back(std::move(entry));
    }
    return plan;
}

} // namespace cmlab::seq
