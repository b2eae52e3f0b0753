#pragma once

#include "cmlab/presented_ring.hpp"

namespace cmlab::models {

using cmlab::Budget;
using algebra::Poly;
using algebra::RingDescPtr;

// Subring D = Q + x Q[x,y] of S = Q[x,y]: polynomials whose x-free part is
// constant.  Every ideal involved in the colon identities is spanned by the
// monomials it contains, so degreewise monomial bookkeeping is exact.
class SubringModel {
public:
    explicit SubringModel(int degree_bound);

    int degree_bound() const { return B_; }
    const RingDescPtr& ambient() const { return r_; }

    bool member(const Poly& f) const;               // f in D
    static bool monomial_in_d(int a, int b);        // x^a y^b in D
    static bool monomial_in_xyD(int a, int b);      // x^a y^b in xy*D
    static bool monomial_in_xyS(int a, int b);      // x^a y^b in xy*S

    Poly parse(const std::string& text) const;

private:
    int B_;
    RingDescPtr r_;
};

struct SubringCertificate {
    int B = 0;
    bool colon_x_is_xyS = false;    // (xyD :_D x) = xyS through degree B
    bool colon_x2_is_xyS = false;   // (xyD :_D x^2) = xyS through degree B
    bool witness_in_colon = false;  // x y^2
    bool witness_in_xyS = false;
    bool witness_outside_xyD = false;
    bool xS_in_D = false;           // x S subset of D, so S/D is m-torsion
    bool x_xyS_in_xyD = false;      // x * xyS subset of xyD, the colon upper bound
    bool yS_cap_D_is_xyS = false;   // yS intersected with D equals xyS (xyS prime)
    bool x_powers_escape = false;   // no power of x falls into xyD
    int monomials_checked = 0;
    std::string note;
    std::string citation;
};

SubringCertificate subring_colon_identities(int degree_bound);

} // namespace cmlab::models
