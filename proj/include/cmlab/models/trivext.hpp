#pragma once

#include "cmlab/adapter.hpp"
#include "cmlab/primes.hpp"

namespace cmlab::models {

using cmlab::Budget;
using algebra::Poly;
using algebra::PresentedRingPtr;

// Square-zero extension S = R x M_i of a Noetherian base R by the direct sum
// M_i of the residue fields k(p) over all primes of height at most `level`.
// Elements handled by the toolkit are the base elements (r, 0); every reported
// quantity reduces to an exact computation on R.
struct TrivialExtension {
    PresentedRingPtr base;
    std::vector<Poly> max_ideal; // distinguished maximal ideal of the base
    int level = 0;
};

TrivialExtension make_trivext(PresentedRingPtr base, std::vector<Poly> max_ideal,
                              int level);

// ht IS = ht j(I)R across the nilpotent kernel
algebra::Height tx_height(const TrivialExtension& S, const std::vector<Poly>& gens,
                         Budget& budget);

// 0 when ht I <= level (a socle element of some k(p) kills the ideal),
// otherwise the base polynomial grade
grade::GradeValue tx_p_grade(const TrivialExtension& S, const std::vector<Poly>& gens,
                             Budget& budget);

seq::ParamVerdict tx_parameter(const TrivialExtension& S, const std::vector<Poly>& x,
                               Budget& budget);

class TrivExtAdapter final : public seq::RingAdapter {
public:
    explicit TrivExtAdapter(TrivialExtension S);

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

    const TrivialExtension& extension() const { return S_; }
    seq::Elem add_element(const Poly& f);

private:
    std::vector<Poly> polys(const seq::Seq& x) const;
    TrivialExtension S_;
    std::vector<Poly> elems_;
};

} // namespace cmlab::models
