// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "relprime/numtheory.hpp"
#include "relprime/setmodel.hpp"

namespace relprime {

// Exact C(n, k); 0 when k > n.
Count binomial(std::uint64_t n, std::uint64_t k);

// Exact 2^e - 1.
Count power_of_two_minus_one(std::uint64_t e);

// How the divisor sums are evaluated. Results never depend on these settings.
struct EvalOptions {
    // Worker threads for the divisor sum; 0 and 1 both mean serial.
    unsigned threads = 1;
};

// Relatively prime counts over a ground set X. Every function counts nonempty
// subsets only. Each is a Moebius sum over d of mu(d) * g(|X_d|), where only
// squarefree d <= max X can contribute.
//
//   phi_k(X, n, k) = #{A subset X : |A| = k, gcd(A u {n}) = 1}
//   phi(X, n)      = #{A subset X : A nonempty, gcd(A u {n}) = 1}
//   f_k(X, k)      = #{A subset X : |A| = k, gcd(A) = 1}
//   f(X)           = #{A subset X : A nonempty, gcd(A) = 1}
//
// n may be arbitrarily large; only its prime factors <= max X are inspected.
// Throws std::domain_error for n = 0 or k = 0.
Count phi_k(const ProgressionUnion& x, const Count& n, std::uint64_t k, EvalOptions options = {});
Count phi(const ProgressionUnion& x, const Count& n, EvalOptions options = {});
Count f_k(const ProgressionUnion& x, std::uint64_t k, EvalOptions options = {});
Count f(const ProgressionUnion& x, EvalOptions options = {});

// phi(X, n) evaluated as sum over every divisor d | n of mu(d) * 2^|X_d|
// (n > 1), or 2^|X| - 1 (n = 1). Independent of the pruned route used by phi;
// needs the full factorization of n, so it is restricted to 64-bit moduli.
Count phi_full_divisor_sum(const ProgressionUnion& x, std::uint64_t n);

// f([1, n]) and phi([1, n], n).
Count nathanson_f(std::uint64_t n);
Count nathanson_phi(std::uint64_t n);

// One of the four functions, selected by which optional fields are present:
// modulus selects the phi family, cardinality the _k variants.
struct CountingQuery {
    ProgressionUnion set;
    std::optional<Count> modulus;
    std::optional<std::uint64_t> cardinality;
};

Count evaluate(const CountingQuery& query, EvalOptions options = {});

} // namespace relprime
