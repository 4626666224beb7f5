// SPDX-License-Identifier: Apache-2.0
#include "relprime/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "relprime/errors.hpp"

namespace relprime {

namespace {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        if (i <= limit / i) {
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
    }
    return primes;
}

bool fits_u64(const Count& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Count& n) {
    // mpz_get_ui is 64-bit on LP64 targets.
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_get_ui(n.get_mpz_t());
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) {
        --r;
    }
    while ((r + 1) <= n / (r + 1)) {
        ++r;
    }
    return r;
}

} // namespace

MoebiusTable::MoebiusTable(std::uint64_t limit) : limit_(limit) {
    if (limit == 0) {
        throw std::domain_error("moebius_sieve: limit must be positive");
    }
    if (limit > kMaxSieveLimit) {
        throw ResourceError("moebius_sieve: limit " + std::to_string(limit) + " exceeds the sieve cap of "
                            + std::to_string(kMaxSieveLimit));
    }
    // Linear sieve: every composite is struck exactly once by its least prime factor.
    values_.assign(limit + 1, 0);
    std::vector<bool> composite(limit + 1, false);
    values_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes_.push_back(i);
            values_[i] = -1;
        }
        for (const auto p : primes_) {
            if (p > limit / i) {
                break;
            }
            const auto q = p * i;
            composite[q] = true;
            if (i % p == 0) {
                values_[q] = 0;
                break;
            }
            values_[q] = static_cast<std::int8_t>(-values_[i]);
        }
    }
}

int MoebiusTable::at(std::uint64_t d) const {
    if (d == 0 || d > limit_) {
        throw std::out_of_range("MoebiusTable::at: " + std::to_string(d) + " outside [1, "
                                + std::to_string(limit_) + "]");
    }
    return values_[d];
}

MoebiusTable moebius_sieve(std::uint64_t limit) { return MoebiusTable(limit); }

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("factorize: n must be positive");
    }
    std::vector<PrimePower> factors;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            factors.push_back({p, e});
        }
    };
    strip(2);
    for (std::uint64_t p = 3; p <= n / p; p += 2) {
        strip(p);
    }
    if (n > 1) {
        factors.push_back({n, 1});
    }
    return factors;
}

DivisorList divisors_with_mu(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("divisors_with_mu: n must be positive");
    }
    DivisorList list{n, {{1, 1}}};
    for (const auto& [p, e] : factorize(n)) {
        const auto existing = list.entries.size();
        std::uint64_t power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < existing; ++j) {
                const auto& base = list.entries[j];
                const int mu = i == 1 ? -base.mu : 0;
                list.entries.push_back({base.divisor * power, mu});
            }
        }
    }
    std::ranges::sort(list.entries, {}, &DivisorEntry::divisor);
    return list;
}

int moebius(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("moebius: n must be positive");
    }
    int mu = 1;
    for (const auto& f : factorize(n)) {
        if (f.exponent > 1) {
            return 0;
        }
        mu = -mu;
    }
    return mu;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    __int128 old_r = a, r = b;
    __int128 old_s = 1, s = 0;
    __int128 old_t = 0, t = 1;
    while (r != 0) {
        const __int128 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {static_cast<std::int64_t>(old_r), static_cast<std::int64_t>(old_s), static_cast<std::int64_t>(old_t)};
}

std::uint64_t mod_inverse(std::int64_t b, std::uint64_t d) {
    if (d == 0) {
        throw std::domain_error("mod_inverse: modulus must be positive");
    }
    const auto md = static_cast<__int128>(d);
    auto residue = static_cast<__int128>(b) % md;
    if (residue < 0) {
        residue += md;
    }
    try {
        return detail::mod_inverse_u64(static_cast<std::uint64_t>(residue), d);
    } catch (const std::domain_error&) {
        throw std::domain_error("mod_inverse: " + std::to_string(b) + " has no inverse modulo " + std::to_string(d));
    }
}

namespace detail {

std::uint64_t mod_inverse_u64(std::uint64_t residue, std::uint64_t d) {
    if (d == 0) {
        throw std::domain_error("mod_inverse: modulus must be positive");
    }
    if (d == 1) {
        return 0;
    }
    const auto md = static_cast<__int128>(d);
    __int128 old_r = residue % d, r = md;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) {
        throw std::domain_error("mod_inverse: residue " + std::to_string(residue) + " has no inverse modulo "
                                + std::to_string(d));
    }
    auto x = old_s % md;
    if (x < 0) {
        x += md;
    }
    return static_cast<std::uint64_t>(x);
}

} // namespace detail

Count primorial_up_to(std::uint64_t x) {
    if (x == 0) {
        throw std::domain_error("primorial_up_to: x must be positive");
    }
    if (x > kMaxSieveLimit) {
        throw ResourceError("primorial_up_to: x exceeds the sieve cap");
    }
    Count product = 1;
    for (const auto p : sieve_primes(x)) {
        product *= static_cast<unsigned long>(p);
    }
    return product;
}

std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& f : factorize(n)) {
        r *= f.prime;
    }
    return r;
}

std::vector<DivisorEntry> squarefree_divisors_up_to(const Count& modulus, std::uint64_t bound) {
    if (sgn(modulus) <= 0) {
        throw std::domain_error("squarefree_divisors_up_to: modulus must be positive");
    }
    std::vector<std::uint64_t> primes;
    if (fits_u64(modulus) && isqrt(to_u64(modulus)) <= bound) {
        for (const auto& f : factorize(to_u64(modulus))) {
            if (f.prime <= bound) {
                primes.push_back(f.prime);
            }
        }
    } else {
        const auto limit = fits_u64(modulus) ? std::min(bound, to_u64(modulus)) : bound;
        if (limit > kMaxSieveLimit) {
            throw ResourceError("squarefree_divisors_up_to: bound exceeds the sieve cap");
        }
        for (const auto p : sieve_primes(limit)) {
            if (mpz_divisible_ui_p(modulus.get_mpz_t(), p) != 0) {
                primes.push_back(p);
            }
        }
    }

    std::vector<DivisorEntry> out;
    if (bound == 0) {
        return out;
    }
    out.push_back({1, 1});
    // Primes ascend, so once p exceeds bound / d no later prime fits either.
    for (const auto p : primes) {
        const auto existing = out.size();
        for (std::size_t j = 0; j < existing; ++j) {
            const auto base = out[j];
            if (base.divisor <= bound / p) {
                out.push_back({base.divisor * p, -base.mu});
            }
        }
    }
    std::ranges::sort(out, {}, &DivisorEntry::divisor);
    return out;
}

} // namespace relprime
