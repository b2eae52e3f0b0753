#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "cmlab/errors.hpp"

namespace cmlab::algebra {

// Exponent vector; the owning ring fixes the length.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}

    std::size_t nvars() const { return e.size(); }

    std::uint64_t degree() const {
        return std::accumulate(e.begin(), e.end(), std::uint64_t(0));
    }

    bool is_one() const {
        for (auto x : e) if (x) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    // exact quotient; caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (r.e[i] < m.e[i]) throw DomainError("monomial quotient not exact");
            r.e[i] -= m.e[i];
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] < r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    bool coprime(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && m.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;
};

enum class OrderKind { Lex, GrevLex, Block };

// Block orders eliminate the first `split` variables: any monomial touching
// the first block beats every monomial supported on the tail, grevlex within
// each block.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::size_t split = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder block(std::size_t split) { return {OrderKind::Block, split}; }

    bool graded() const { return kind == OrderKind::GrevLex; }

    // returns <0, 0, >0 as a < b, a == b, a > b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(a, b, 0, a.e.size());
        case OrderKind::GrevLex:
            return cmp_grevlex(a, b, 0, a.e.size());
        case OrderKind::Block: {
            int c = cmp_grevlex(a, b, 0, split);
            if (c != 0) return c;
            return cmp_grevlex(a, b, split, a.e.size());
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    static int cmp_lex(const Monomial& a, const Monomial& b,
                       std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
    }
    static int cmp_grevlex(const Monomial& a, const Monomial& b,
                           std::size_t lo, std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
};

} // namespace cmlab::algebra
