#include "cmlab/adapter.hpp"

#include "cmlab/complexes.hpp"
#include "cmlab/dimension.hpp"

#include <sstream>

namespace cmlab::seq {

using namespace algebra;

std::string WprVerdict::kind_str() const {
    switch (kind) {
    case WprKind::CertifiedNoetherian: return "certified-noetherian";
    case WprKind::CertifiedByModel: return "certified-by-model";
    case WprKind::VerifiedUpToBound: return "verified-up-to-bound";
    case WprKind::Counterexample: return "counterexample";
    }
    return "?";
}

PresentedRingAdapter::PresentedRingAdapter(PresentedRingPtr ring, std::vector<Poly> max_ideal)
    : ring_(std::move(ring)), max_ideal_(std::move(max_ideal)) {
    if (max_ideal_.empty()) {
        for (std::size_t i = 0; i < ring_->ambient()->nvars(); ++i)
            max_ideal_.push_back(Poly::variable(ring_->ambient(), i));
    }
}

std::string PresentedRingAdapter::name() const { return ring_->str(); }

std::string PresentedRingAdapter::capabilities() const {
    return "membership, colon, height, minimal primes, Koszul homology: exact; "
           "weak proregularity: certified (Noetherian), optional bounded search";
}

Elem PresentedRingAdapter::add_element(const Poly& f, Budget& budget) {
    Poly n = ring_->nf(f, budget);
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == n)
            return i;
    elems_.push_back(n);
    return elems_.size() - 1;
}

std::vector<Elem> PresentedRingAdapter::parse_elements(const std::string& comma_list,
                                                       Budget& budget) {
    std::vector<Elem> out;
    for (const Poly& f : parse_poly_list(ring_->ambient(), comma_list))
        out.push_back(add_element(f, budget));
    return out;
}

std::string PresentedRingAdapter::element_str(Elem h) const { return elems_.at(h).str(); }

std::vector<Poly> PresentedRingAdapter::polys(const Seq& x) const {
    std::vector<Poly> out;
    out.reserve(x.size());
    for (Elem h : x)
        out.push_back(elems_.at(h));
    return out;
}

int PresentedRingAdapter::dimension(Budget& budget) { return krull_dimension(ring_, budget); }

bool PresentedRingAdapter::is_proper(const Seq& x, Budget& budget) {
    IdealHandle I(ring_, polys(x), budget);
    return !I.is_unit();
}

Height PresentedRingAdapter::height(const Seq& x, Budget& budget) {
    IdealHandle I(ring_, polys(x), budget);
    return ideal_height(I, budget);
}

WprVerdict PresentedRingAdapter::weakly_proregular(const Seq&, int, Budget&) {
    WprVerdict v;
    v.kind = WprKind::CertifiedNoetherian;
    v.citation = "Thm 2.3";
    v.detail = "finitely presented algebra over a field is Noetherian; every finite "
               "sequence is weakly proregular";
    return v;
}

WprVerdict PresentedRingAdapter::wpr_by_search(const Seq& x, int bound, Budget& budget) {
    WprVerdict v;
    v.kind = WprKind::VerifiedUpToBound;
    v.citation = "§2 definition";
    v.bound = bound;
    std::vector<Poly> fs = polys(x);
    ModulePresentation M = ModulePresentation::free_module(ring_, 1);
    std::ostringstream detail;
    int verified = 0;
    for (int n = 1; n <= bound; ++n) {
        bool found = false;
        for (int m = n; m <= bound && !found; ++m) {
            ChainMap phi = koszul_power_map(ring_, fs, static_cast<std::uint32_t>(m),
                                            static_cast<std::uint32_t>(n), budget);
            bool all_zero = true;
            for (int i = 1; i <= static_cast<int>(fs.size()) && all_zero; ++i)
                all_zero = induced_zero_on_homology(phi, i, M, budget).zero;
            if (all_zero) {
                detail << "(n=" << n << ",m=" << m << ") ";
                found = true;
            }
        }
        if (!found)
            break;
        verified = n;
    }
    v.level = verified;
    v.detail = verified > 0 ? "zero maps found at " + detail.str()
                            : "no level admitted a zero map within the bound";
    return v;
}

ParamVerdict PresentedRingAdapter::parameter(const Seq& x, Budget& budget) {
    ParamVerdict v;
    v.length = x.size();
    IdealHandle I(ring_, polys(x), budget);
    if (I.is_unit()) {
        v.value = false;
        v.reason = "improper";
        v.citation = "Def 3.1(2)";
        v.height = Height{true, 0};
        return v;
    }
    v.height = ideal_height(I, budget);
    v.value = !v.height.infinite && v.height.value == static_cast<int>(x.size());
    v.citation = x.size() == 1 ? "Remark 3.2; Cor 3.5" : "Remark 3.2";
    std::ostringstream os;
    os << "ht = " << v.height.str() << ", length = " << x.size();
    v.reason = os.str();
    return v;
}

grade::GradeValue PresentedRingAdapter::sequence_grade(const Seq& x, Budget& budget) {
    return grade::p_grade(ring_, polys(x), ModulePresentation::free_module(ring_, 1), budget);
}

RegStep PresentedRingAdapter::regular_step(const Seq& prefix, Elem x, Budget& budget) {
    RegStep s;
    IdealHandle P(ring_, polys(prefix), budget);
    IdealHandle C = ideal_colon(P, elems_.at(x), budget);
    s.nzd = C == P;
    if (!s.nzd) {
        for (const Poly& g : C.basis()) {
            if (!P.contains(g, budget)) {
                s.witness = ring_->nf(g, budget).str();
                break;
            }
        }
        s.detail = "colon strictly contains the prefix ideal";
    }
    return s;
}

grade::GradeValue PresentedRingAdapter::pdepth(Budget& budget) {
    return grade::p_depth(ring_, max_ideal_, ModulePresentation::free_module(ring_, 1), budget);
}

} // namespace cmlab::seq
