#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an engine computation exhausts its reduction-step budget.
// Catchers must treat any partial state as unusable.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Arithmetic misuse: division by zero, field mismatch, ring mismatch.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Prime decomposition asked over a coefficient field where the splitting
// procedure has no factorization routine.
struct FactorUnsupported : Error {
    explicit FactorUnsupported(const std::string& msg) : Error(msg) {}
};

// Input exceeds the size guard of a desk-scale procedure.
struct SizeGuard : Error {
    explicit SizeGuard(const std::string& msg) : Error(msg) {}
};

// Counter threaded through every Groebner-type computation.  One unit is one
// single-term cancellation inside polynomial or module division.
struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    explicit Budget(std::uint64_t lim = kDefault) : limit(lim) {}

    static constexpr std::uint64_t kDefault = 200'000'000ULL;

    void charge(std::uint64_t n = 1) {
        used += n;
        if (used > limit)
            throw BudgetExceeded("reduction budget exhausted (" +
                                 std::to_string(limit) + " steps)");
    }
};

} // namespace cmlab
