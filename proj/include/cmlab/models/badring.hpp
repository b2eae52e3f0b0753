#pragma once

#include "cmlab/adapter.hpp"

namespace cmlab::models {

using cmlab::Budget;
using algebra::Poly;
using algebra::PresentedRingPtr;

// Truncation Q[x, y1..yN]/(x y1, x^2 y2, ..., x^N yN) of the classical ring
// whose image of x fails weak proregularity.  The truncations are Noetherian;
// the limit adapter below extrapolates only the statements whose witnesses
// live in every sufficiently deep truncation.
struct TruncatedBadRing {
    int N = 0;
    PresentedRingPtr ring;
    Poly x;                  // image of x
    std::vector<Poly> y;     // images of y1..yN
};

TruncatedBadRing make_bad_ring(int N, Budget& budget);

struct BadChainLevel {
    int n = 0;
    std::vector<std::string> colon_basis; // reduced basis of (0 : x^n)
    bool strict_vs_prev = false;
    std::string witness; // element of (0 : x^n) outside (0 : x^(n-1))
};

struct BadChain {
    int N = 0;
    std::vector<BadChainLevel> levels; // n = 1..N
    bool strictly_increasing = false;  // through level N
    bool stabilizes_at_N = false;      // (0 : x^(N+1)) = (0 : x^N) in the truncation
    std::string limit_conclusion;
    std::string citation;
};

BadChain bad_colon_chain(int N, Budget& budget);

// Adapter for the untruncated limit ring.  Only sequences of pure powers of x
// are answerable; everything else raises DomainError.  Witness claims are
// verified inside truncations deep enough to contain them.
class BadRingLimitAdapter final : public seq::RingAdapter {
public:
    explicit BadRingLimitAdapter(int verify_depth = 6);

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

private:
    int verify_depth_;
    std::vector<std::uint32_t> powers_; // element h is x^powers_[h]
};

} // namespace cmlab::models
