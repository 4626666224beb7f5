// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace relprime {

// Arbitrary-precision nonnegative count. All public counting results use it.
using Count = mpz_class;

// Sieved Möbius values mu(1..limit), immutable after construction.
class MoebiusTable {
public:
    explicit MoebiusTable(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }

    // mu(d) for 1 <= d <= limit.
    int operator[](std::uint64_t d) const noexcept { return values_[d]; }
    int at(std::uint64_t d) const;

    // Primes up to limit, ascending. Produced by the same linear sieve.
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<std::int8_t> values_; // index 0 unused
    std::vector<std::uint64_t> primes_;
};

// Largest sieve the library will allocate.
inline constexpr std::uint64_t kMaxSieveLimit = 200'000'000;

// Throws std::domain_error for limit 0, ResourceError above kMaxSieveLimit.
MoebiusTable moebius_sieve(std::uint64_t limit);

struct DivisorEntry {
    std::uint64_t divisor;
    int mu;

    friend bool operator==(const DivisorEntry&, const DivisorEntry&) = default;
};

// Every divisor of `modulus`, ascending, each paired with mu.
struct DivisorList {
    std::uint64_t modulus;
    std::vector<DivisorEntry> entries;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial division up to sqrt(n). Empty for n = 1; throws std::domain_error for n = 0.
std::vector<PrimePower> factorize(std::uint64_t n);

DivisorList divisors_with_mu(std::uint64_t n);

// Single-value mu via factorization.
int moebius(std::uint64_t n);

struct ExtendedGcd {
    std::int64_t gcd;
    std::int64_t x;
    std::int64_t y;
};

// gcd(a, b) = a*x + b*y with gcd >= 0.
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// x in [0, d-1] with b*x = 1 (mod d). d = 1 yields 0.
// std::domain_error when d = 0 or gcd(b, d) != 1.
std::uint64_t mod_inverse(std::int64_t b, std::uint64_t d);

namespace detail {
// mod_inverse for an already-reduced unsigned residue (full 64-bit range).
std::uint64_t mod_inverse_u64(std::uint64_t residue, std::uint64_t d);
} // namespace detail

// Product of the primes <= x (1 for x = 1).
Count primorial_up_to(std::uint64_t x);

// Product of the distinct primes dividing n.
std::uint64_t radical(std::uint64_t n);

// Squarefree divisors d <= bound of `modulus`, ascending, with mu(d) != 0.
// Only primes <= bound are tried, so `modulus` may be arbitrarily large.
// Any divisor above `bound` is omitted.
std::vector<DivisorEntry> squarefree_divisors_up_to(const Count& modulus, std::uint64_t bound);

} // namespace relprime
