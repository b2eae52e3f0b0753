#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmlab/monomial.hpp"
#include "cmlab/scalar.hpp"

namespace cmlab::algebra {

// Ambient polynomial ring descriptor.  Immutable and shared by every value
// built over it; pointer identity is not required, equality is structural.
struct RingDesc {
    Field field;
    std::vector<std::string> vars;
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }
    bool operator==(const RingDesc&) const = default;

    std::string str() const;
    int var_index(const std::string& name) const; // -1 when absent
};

using RingDescPtr = std::shared_ptr<const RingDesc>;

RingDescPtr make_ring(Field f, std::vector<std::string> vars,
                      MonomialOrder ord = MonomialOrder::grevlex());

// same field and variables, different order
RingDescPtr reorder_ring(const RingDescPtr& r, MonomialOrder ord);
// append fresh variables at the end
RingDescPtr extend_ring(const RingDescPtr& r, const std::vector<std::string>& extra);

struct Term {
    Monomial mon;
    Scalar coef;
};

// Sparse multivariate polynomial, terms strictly descending in the ring
// order, no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingDescPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(const RingDescPtr& r) { return Poly(r); }
    static Poly constant(const RingDescPtr& r, const Scalar& c);
    static Poly constant(const RingDescPtr& r, long n);
    static Poly variable(const RingDescPtr& r, std::size_t i, std::uint32_t exp = 1);
    static Poly from_terms(const RingDescPtr& r, std::vector<Term> terms); // normalizes

    const RingDescPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mon.is_one(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mon.is_one() && terms_[0].coef.is_one();
    }

    const Term& lt() const {
        if (terms_.empty()) throw DomainError("leading term of zero");
        return terms_[0];
    }
    const Monomial& lm() const { return lt().mon; }
    const Scalar& lc() const { return lt().coef; }

    std::uint64_t total_degree() const; // 0 for the zero polynomial

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Scalar& c) const;             // c * this
    Poly term_mul(const Monomial& m, const Scalar& c) const;
    Poly monic() const;                             // divide by leading coefficient

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // exact division; nullopt when the division leaves a remainder
    std::optional<Poly> divided_by(const Poly& g) const;

    Poly pow(std::uint32_t n) const;

    // derivative with respect to variable i
    Poly dvar(std::size_t i) const;

    // true when every term has the same total degree (zero counts as graded)
    bool homogeneous() const;

    // substitute: variable i is replaced by images[i], which live in `target`
    Poly substitute(const RingDescPtr& target, const std::vector<Poly>& images) const;

    // move to a ring with the same variables in the same positions (order or
    // tail extension may differ); re-sorts terms
    Poly transport(const RingDescPtr& target) const;

    std::string str() const;

private:
    void normalize(); // sort + merge + drop zeros
    RingDescPtr ring_;
    std::vector<Term> terms_;
};

// infix parser for elements; accepts + - * / ^ ( ) integers and variables,
// '/' only by nonzero constants
Poly parse_poly(const RingDescPtr& r, const std::string& text);

std::vector<Poly> parse_poly_list(const RingDescPtr& r, const std::string& text); // "f, g, h"

} // namespace cmlab::algebra
