// SPDX-License-Identifier: Apache-2.0
#include "relprime/shonhiwa.hpp"

#include <stdexcept>

#include "relprime/counting.hpp"

namespace relprime {

namespace {

void require_positive(std::uint64_t n, std::uint64_t k) {
    if (n == 0 || k == 0) {
        throw std::domain_error("tuple counts need n >= 1 and k >= 1");
    }
}

void require_positive(const Count& m) {
    if (sgn(m) <= 0) {
        throw std::domain_error("tuple counts need m >= 1");
    }
}

// term(floor(n/d)) must vanish at 0 for k >= 1, so divisors above n drop out.
template <typename Term>
Count sum_over_modulus(std::uint64_t n, const Count& m, Term term) {
    Count positive = 0;
    Count negative = 0;
    for (const auto& [d, mu] : squarefree_divisors_up_to(m, n)) {
        (mu > 0 ? positive : negative) += term(n / d);
    }
    return positive - negative;
}

template <typename Term>
Count sum_over_range(std::uint64_t n, Term term) {
    const auto table = moebius_sieve(n);
    Count positive = 0;
    Count negative = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (const int mu = table[d]; mu != 0) {
            (mu > 0 ? positive : negative) += term(n / d);
        }
    }
    return positive - negative;
}

Count power(std::uint64_t base, std::uint64_t exponent) {
    Count out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

} // namespace

Count s_count(std::uint64_t n, std::uint64_t k, const Count& m) {
    require_positive(n, k);
    require_positive(m);
    return sum_over_modulus(n, m, [k](std::uint64_t q) { return power(q, k); });
}

Count g_count(std::uint64_t n, std::uint64_t k) {
    require_positive(n, k);
    return sum_over_range(n, [k](std::uint64_t q) { return power(q, k); });
}

Count l_count(std::uint64_t n, std::uint64_t k, const Count& m) {
    require_positive(n, k);
    require_positive(m);
    return sum_over_modulus(n, m, [k](std::uint64_t q) { return q == 0 ? Count(0) : binomial(q + k - 1, k); });
}

Count h_count(std::uint64_t n, std::uint64_t k) {
    require_positive(n, k);
    return sum_over_range(n, [k](std::uint64_t q) { return binomial(q + k - 1, k); });
}

Count t_count(std::uint64_t n, std::uint64_t k, const Count& m) {
    require_positive(n, k);
    require_positive(m);
    return sum_over_modulus(n, m, [k](std::uint64_t q) { return binomial(q, k); });
}

} // namespace relprime
