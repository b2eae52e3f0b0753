#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cmlab/errors.hpp"

namespace cmlab::algebra {

// Coefficient field: p == 0 means the rationals, otherwise the prime field
// Z/p.  p is trusted to be prime (the parser checks small candidates).
struct Field {
    std::uint32_t p = 0;

    bool rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
    std::string str() const { return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

// Exact field element.  Tagged on the field characteristic so mixed-field
// arithmetic is caught instead of silently coerced.
class Scalar {
public:
    Scalar() : p_(0), r_(0) {}

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    Scalar(Field f, long n) : p_(f.p) {
        if (p_ == 0) q_ = n;
        else r_ = norm(n);
    }

    static Scalar rational(const mpq_class& q) {
        Scalar s;
        s.p_ = 0;
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }

    static Scalar mod_p(Field f, long n) { return Scalar(f, n); }

    Field field() const { return Field{p_}; }

    bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    Scalar operator-() const {
        Scalar s(*this);
        if (p_ == 0) s.q_ = -s.q_;
        else s.r_ = (r_ == 0) ? 0 : p_ - r_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        match(o);
        if (p_ == 0) q_ += o.q_;
        else r_ = (std::uint64_t(r_) + o.r_) % p_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) {
        match(o);
        if (p_ == 0) q_ *= o.q_;
        else r_ = std::uint32_t((std::uint64_t(r_) * o.r_) % p_);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) throw DomainError("division by zero scalar");
        Scalar s(*this);
        if (p_ == 0) {
            s.q_ = 1 / q_;
        } else {
            // extended Euclid on (r_, p_)
            std::int64_t t = 0, nt = 1, r = p_, nr = r_;
            while (nr != 0) {
                std::int64_t q = r / nr;
                std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
                tmp = r - q * nr; r = nr; nr = tmp;
            }
            if (t < 0) t += p_;
            s.r_ = std::uint32_t(t);
        }
        return s;
    }

    bool operator==(const Scalar& o) const {
        if (p_ != o.p_) return false;
        return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // total order used only for canonical sorting and printing decisions
    int cmp(const Scalar& o) const {
        match(o);
        if (p_ == 0) return ::cmp(q_, o.q_);
        return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
    }

    std::string str() const {
        if (p_ == 0) return q_.get_str();
        return std::to_string(r_);
    }

    const mpq_class& rat() const { return q_; }
    std::uint32_t residue() const { return r_; }

private:
    void match(const Scalar& o) const {
        if (p_ != o.p_) throw DomainError("scalar field mismatch");
    }
    std::uint32_t norm(long n) const {
        long m = n % long(p_);
        if (m < 0) m += p_;
        return std::uint32_t(m);
    }

    std::uint32_t p_;
    std::uint32_t r_ = 0; // value when p_ > 0
    mpq_class q_;         // value when p_ == 0
};

} // namespace cmlab::algebra
