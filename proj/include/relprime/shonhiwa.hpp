// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "relprime/numtheory.hpp"

namespace relprime {

// Tuples (a_1, ..., a_k) drawn from [1, n], optionally constrained by
// gcd(a_1, ..., a_k, m) = 1.
struct TupleQuery {
    std::uint64_t n;
    std::uint64_t k;
    std::optional<Count> m;
};

// Ordered k-tuples from [1, n] with gcd(tuple, m) = 1:  sum_{d|m} mu(d) floor(n/d)^k.
Count s_count(std::uint64_t n, std::uint64_t k, const Count& m);

// Ordered k-tuples from [1, n] with gcd(tuple) = 1:  sum_{d<=n} mu(d) floor(n/d)^k.
Count g_count(std::uint64_t n, std::uint64_t k);

// Nondecreasing k-tuples (multisets):  sum_{d|m} mu(d) C(floor(n/d)+k-1, k).
Count l_count(std::uint64_t n, std::uint64_t k, const Count& m);

// Nondecreasing k-tuples with gcd 1:  sum_{d<=n} mu(d) C(floor(n/d)+k-1, k).
Count h_count(std::uint64_t n, std::uint64_t k);

// Strictly increasing k-tuples (k-subsets):  sum_{d|m} mu(d) C(floor(n/d), k).
// k > n yields 0.
Count t_count(std::uint64_t n, std::uint64_t k, const Count& m);

// All five throw std::domain_error when n, k or m is zero.

} // namespace relprime
