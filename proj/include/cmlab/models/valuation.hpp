#pragma once

#include "cmlab/adapter.hpp"

namespace cmlab::models {

using cmlab::Budget;
using algebra::Poly;
using algebra::RingDescPtr;

// Rank-2 valuation domain with value group Z x Z ordered lexicographically.
// Elements are rational functions in two indeterminates a, b over Q;
// v(f) = (order in b, order in a of the residue at b = 0).  The distinguished
// u = b has v = (1,0) and sits in the height-1 prime P; w = a has v = (0,1)
// and sits in m outside P.
struct ValElem {
    Poly num;
    Poly den;
};

struct ValValue {
    long hi = 0; // b-order, the dominant lex component
    long lo = 0; // a-order of the residue

    bool operator==(const ValValue&) const = default;
    std::string str() const;
};

int val_cmp(const ValValue& x, const ValValue& y); // lex

class ValuationModel {
public:
    ValuationModel();

    const RingDescPtr& frac_ring() const { return r_; }

    ValElem zero() const;
    ValElem one() const;
    ValElem u() const; // b
    ValElem w() const; // a
    ValElem from_value(const ValValue& v) const; // monomial realization

    bool is_zero(const ValElem& f) const;
    ValElem add(const ValElem& f, const ValElem& g) const;
    ValElem sub(const ValElem& f, const ValElem& g) const;
    ValElem mul(const ValElem& f, const ValElem& g) const;
    ValElem div(const ValElem& f, const ValElem& g) const; // g nonzero
    ValElem neg(const ValElem& f) const;
    ValElem pow(const ValElem& f, std::uint32_t n) const;
    bool eq(const ValElem& f, const ValElem& g) const;
    std::string str(const ValElem& f) const;

    // throws DomainError on zero input
    ValValue value(const ValElem& f) const;

    bool in_ring(const ValElem& f) const;    // v >= (0,0)
    bool in_maximal(const ValElem& f) const; // v > (0,0)
    bool in_p(const ValElem& f) const;       // hi component >= 1

    // expressions over u, w, integers, + - * / ^ ( )
    ValElem parse(const std::string& text) const;

    // generator of the finitely generated ideal: any element of minimal value;
    // nullopt for the zero ideal
    std::optional<std::size_t> principal_gen(const std::vector<ValElem>& gens) const;
    bool ideal_member(const ValElem& f, const std::vector<ValElem>& gens) const;
    // ((gens) : f), principal; zero ideal encoded as empty
    std::vector<ValElem> ideal_colon(const std::vector<ValElem>& gens, const ValElem& f) const;
    algebra::Height ideal_height(const std::vector<ValElem>& gens) const;

private:
    RingDescPtr r_;
};

struct Example37Level {
    int n = 0;
    bool h2_zero = false;             // degree-2 differential injective (domain)
    bool syzygy_identity = false;     // u^2n - beta^2n * w^2n = 0
    bool boundary_identity = false;   // power-map image of the cycle = -beta^n * d2(e12)
};

struct Example37 {
    int n_max = 0;
    std::vector<Example37Level> levels;
    bool weakly_proregular = false;
    algebra::Height height;      // of (u,w)V
    bool parameter = false;     // verdict for the pair (u,w)
    bool principal_identity = false; // (u,w)V = wV
    std::string citation;
    std::string detail;
};

Example37 val_example37(const ValuationModel& V, int n_max, Budget& budget);

class ValuationAdapter final : public seq::RingAdapter {
public:
    explicit ValuationAdapter(ValuationModel model = {});

    std::string name() const override;
    bool noetherian() const override { return false; }
    std::string capabilities() const override;

    std::vector<seq::Elem> parse_elements(const std::string& comma_list, Budget& budget) override;
    std::string element_str(seq::Elem h) const override;

    int dimension(Budget& budget) override;
    bool is_proper(const seq::Seq& x, Budget& budget) override;
    algebra::Height height(const seq::Seq& x, Budget& budget) override;
    seq::WprVerdict weakly_proregular(const seq::Seq& x, int bound, Budget& budget) override;
    seq::ParamVerdict parameter(const seq::Seq& x, Budget& budget) override;
    grade::GradeValue sequence_grade(const seq::Seq& x, Budget& budget) override;
    seq::RegStep regular_step(const seq::Seq& prefix, seq::Elem x, Budget& budget) override;
    grade::GradeValue pdepth(Budget& budget) override;

    const ValuationModel& model() const { return model_; }
    seq::Elem add_element(const ValElem& f);

private:
    std::vector<ValElem> elems(const seq::Seq& x) const;
    ValuationModel model_;
    std::vector<ValElem> elems_;
};

} // namespace cmlab::models
