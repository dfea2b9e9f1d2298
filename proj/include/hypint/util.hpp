#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace hypint {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an input is outside an operation's stated domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when a capped computation (factorization, enumeration, BSGS)
// exceeds its effort budget.  The caller decides whether this is fatal
// or means "fall back to supplied data / skip this prime".
struct EffortExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an iterative numeric procedure fails to certify its result
// at the maximum permitted precision.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for malformed or inconsistent problem configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for inputs the artifact deliberately does not handle
// (e.g. reducible right-hand sides).
struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Deterministic 64-bit FNV-1a, used for config/checkpoint fingerprints.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace hypint
