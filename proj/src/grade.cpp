#include "cmlab/grade.hpp"

#include "cmlab/complexes.hpp"

#include <sstream>

namespace cmlab::grade {

using namespace algebra;

GradeValue p_grade(const PresentedRingPtr& ring, const std::vector<Poly>& gens,
                   const ModulePresentation& M, Budget& budget) {
    KoszulComplex K = koszul(ring, gens, budget);
    const int l = static_cast<int>(gens.size());
    int zeros = 0;
    for (int i = l; i >= 0; --i) {
        if (homology_is_zero(*K.cx, i, M, budget))
            ++zeros;
        else
            break;
    }
    GradeValue g;
    g.route = "koszul";
    if (zeros == l + 1) {
        g.infinite = true;
    } else {
        g.value = zeros;
    }
    return g;
}

GradeValue p_grade(const IdealHandle& I, const ModulePresentation& M, Budget& budget) {
    return p_grade(I.ring(), I.gens(), M, budget);
}

std::string VanishingProfile::str() const {
    std::ostringstream os;
    os << "grade " << grade.str() << ";";
    for (std::size_t i = 0; i < by_degree.size(); ++i) {
        os << " H^" << i;
        switch (by_degree[i]) {
        case Vanish::Vanishes: os << "=0"; break;
        case Vanish::NonZero: os << "!=0"; break;
        case Vanish::Undetermined: os << "=?"; break;
        }
    }
    return os.str();
}

VanishingProfile cech_vanishing_profile(const PresentedRingPtr& ring,
                                        const std::vector<Poly>& gens,
                                        const ModulePresentation& M, Budget& budget) {
    VanishingProfile P;
    P.grade = p_grade(ring, gens, M, budget);
    const int l = static_cast<int>(gens.size());
    P.by_degree.assign(static_cast<std::size_t>(l) + 1, Vanish::Undetermined);
    for (int i = 0; i <= l; ++i) {
        if (P.grade.infinite || i < P.grade.value)
            P.by_degree[static_cast<std::size_t>(i)] = Vanish::Vanishes;
        else if (i == P.grade.value)
            P.by_degree[static_cast<std::size_t>(i)] = Vanish::NonZero;
    }
    return P;
}

GradeValue classical_grade(const IdealHandle& I, const ModulePresentation& M,
                           Budget& budget) {
    GradeValue g;
    g.route = "ext";
    if (M.is_zero(budget) || I.is_unit()) {
        g.infinite = true;
        return g;
    }
    const int bound = static_cast<int>(I.gens().size());
    for (int i = 0; i <= bound; ++i) {
        if (!ext_is_zero(static_cast<std::size_t>(i), I, M, budget)) {
            g.value = i;
            return g;
        }
    }
    // all Ext up to the generator count vanish, so the grade is not finite
    g.infinite = true;
    return g;
}

HochsterData hochster_element(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                              Budget& budget) {
    if (seq.empty())
        throw DomainError("hochster element needs a nonempty sequence");
    const RingDescPtr amb = ring->ambient();
    std::string var = "t";
    while (amb->var_index(var) >= 0)
        var += "_";
    RingDescPtr ext = extend_ring(amb, {var});
    std::vector<Poly> rel;
    for (const Poly& r : ring->relation_basis())
        rel.push_back(r.transport(ext));
    HochsterData H;
    H.extended = PresentedRing::make(ext, rel, budget);
    H.var = var;
    const std::size_t ti = ext->nvars() - 1;
    Poly t = Poly::variable(ext, ti);
    Poly h = Poly::zero(ext);
    for (std::size_t i = 0; i < seq.size(); ++i)
        h = h + seq[i].transport(ext) * t.pow(static_cast<std::uint32_t>(i));
    H.element = H.extended->nf(h, budget);
    return H;
}

HochsterCheck hochster_check(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                             const std::vector<Poly>& module_ideal, Budget& budget) {
    HochsterCheck C{hochster_element(ring, seq, budget), false, false};
    IdealHandle K(ring, module_ideal, budget);
    C.annihilator_zero = ideal_colon_ideal(K, seq, budget) == K;

    const PresentedRingPtr S = C.data.extended;
    std::vector<Poly> kext;
    for (const Poly& f : module_ideal)
        kext.push_back(f.transport(S->ambient()));
    IdealHandle KS(S, kext, budget);
    C.nzd_on_extension = ideal_colon(KS, C.data.element, budget) == KS;
    return C;
}

GradeValue p_depth(const PresentedRingPtr& ring, const std::vector<Poly>& max_ideal,
                   const ModulePresentation& M, Budget& budget) {
    return p_grade(ring, max_ideal, M, budget);
}

bool localized_depth_zero(const IdealHandle& I, const IdealHandle& p, Budget& budget) {
    IdealHandle ann = ideal_colon_ideal(I, p.gens().empty() ? p.basis() : p.gens(), budget);
    for (const Poly& g : ann.basis()) {
        if (I.contains(g, budget))
            continue;
        // class of g is a nonzero socle-like element; it survives at p exactly
        // when its annihilator sits inside p
        IdealHandle anng = ideal_colon(I, g, budget);
        bool inside = true;
        for (const Poly& a : anng.basis()) {
            if (!p.contains(a, budget)) {
                inside = false;
                break;
            }
        }
        if (inside)
            return true;
    }
    return false;
}

} // namespace cmlab::grade
