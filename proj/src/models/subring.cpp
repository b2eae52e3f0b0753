#include "cmlab/models/subring.hpp"

namespace cmlab::models {

using algebra::Field;

SubringModel::SubringModel(int degree_bound) : B_(degree_bound) {
    if (degree_bound < 4)
        throw DomainError("subring model: degree bound must be at least 4");
    if (degree_bound > 64)
        throw SizeGuard("subring model: degree bound capped at 64");
    r_ = algebra::make_ring(Field{0}, {"x", "y"});
}

bool SubringModel::member(const Poly& f) const {
    for (const auto& t : f.terms())
        if (t.mon.e[0] == 0 && t.mon.e[1] > 0) return false;
    return true;
}

bool SubringModel::monomial_in_d(int a, int b) { return a >= 1 || b == 0; }

bool SubringModel::monomial_in_xyD(int a, int b) {
    // xy * (x^i y^j) with x^i y^j in D: either the constant, or i >= 1
    return (a == 1 && b == 1) || (a >= 2 && b >= 1);
}

bool SubringModel::monomial_in_xyS(int a, int b) { return a >= 1 && b >= 1; }

Poly SubringModel::parse(const std::string& text) const {
    return algebra::parse_poly(r_, text);
}

SubringCertificate subring_colon_identities(int degree_bound) {
    SubringModel D(degree_bound);
    const int B = D.degree_bound();
    SubringCertificate c;
    c.B = B;
    c.citation = "Example 4.9";

    bool colon_x = true, colon_x2 = true, xs_in_d = true, ys_cap = true;
    bool x_xys = true;
    int checked = 0;
    for (int a = 0; a + 0 <= B; ++a) {
        for (int b = 0; a + b <= B; ++b) {
            ++checked;
            // (xyD :_D x) degreewise: D-monomials m with x*m in xyD
            bool in_colon_x = SubringModel::monomial_in_d(a, b) &&
                              SubringModel::monomial_in_xyD(a + 1, b);
            bool in_colon_x2 = SubringModel::monomial_in_d(a, b) &&
                               SubringModel::monomial_in_xyD(a + 2, b);
            bool in_xys = SubringModel::monomial_in_xyS(a, b);
            if (in_colon_x != in_xys) colon_x = false;
            if (in_colon_x2 != in_xys) colon_x2 = false;
            if (a + b <= B - 1 && !SubringModel::monomial_in_d(a + 1, b))
                xs_in_d = false;
            bool in_ys_cap_d = b >= 1 && SubringModel::monomial_in_d(a, b);
            if (in_ys_cap_d != in_xys) ys_cap = false;
            if (a + b <= B - 1 && SubringModel::monomial_in_xyS(a, b) &&
                !SubringModel::monomial_in_xyD(a + 1, b))
                x_xys = false;
        }
    }
    c.monomials_checked = checked;
    c.colon_x_is_xyS = colon_x;
    c.colon_x2_is_xyS = colon_x2;
    c.yS_cap_D_is_xyS = ys_cap;

    c.witness_in_colon = SubringModel::monomial_in_d(1, 2) &&
                         SubringModel::monomial_in_xyD(2, 2);
    c.witness_in_xyS = SubringModel::monomial_in_xyS(1, 2);
    c.witness_outside_xyD = !SubringModel::monomial_in_xyD(1, 2);
    c.xS_in_D = xs_in_d;
    c.x_xyS_in_xyD = x_xys;

    bool escape = true;
    for (int k = 1; k <= B; ++k)
        if (SubringModel::monomial_in_xyD(k, 0)) escape = false;
    c.x_powers_escape = escape;

    c.note =
        "every ideal here is spanned by the monomials it contains, so the "
        "degreewise comparison through total degree " + std::to_string(B) +
        " is exact in each checked degree; the identities make the colon "
        "(xyD : x) equal to (xyD : x^2) while x is a parameter and x y^2 "
        "witnesses (xyD : x) != xyD, so x, viewed inside D, is a parameter "
        "sequence that is not regular on D/xyD-type quotients; the verdict "
        "about the power-series original is a statement of the source "
        "development, not a certificate of this toolkit";
    return c;
}

} // namespace cmlab::models
