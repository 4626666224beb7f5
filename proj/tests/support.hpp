// SPDX-License-Identifier: Apache-2.0
// Test-only helpers: literal transcriptions of the closed-form AP multiple
// counts, a Pascal-triangle binomial, and random ground-set generators.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "relprime/errors.hpp"
#include "relprime/numtheory.hpp"
#include "relprime/setmodel.hpp"

namespace relprime::testing {

// Inverse by exhaustive scan, kept apart from the library's Euclid route.
inline std::uint64_t scan_inverse(std::uint64_t b, std::uint64_t d) {
    if (d == 1) {
        return 0;
    }
    for (std::uint64_t y = 0; y < d; ++y) {
        if (b % d * y % d == 1) {
            return y;
        }
    }
    return d; // no inverse
}

// floor(mk/d) + eps_d, the general-gcd form. Defined only when k | a.
inline std::optional<std::uint64_t> lemma1_count(std::uint64_t a, std::uint64_t b, std::uint64_t m,
                                                 std::uint64_t d) {
    const auto k = std::gcd(d, b);
    if (a % k != 0) {
        return std::nullopt;
    }
    const auto dk = d / k;
    const auto x0 = (dk - (a / k) % dk) % dk * scan_inverse(b / k, dk) % dk;
    const auto window_top = m - 1 - (m - 1) * k / d * dk;
    const std::uint64_t eps = ((m * k) % d != 0 && x0 <= window_top) ? 1 : 0;
    return m * k / d + eps;
}

// floor(m/d) + eps_d, valid when gcd(a, b) = 1 and gcd(d, b) = 1.
inline std::uint64_t lemma2_count(std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t d) {
    const auto x0 = (d - a % d) % d * scan_inverse(b, d) % d;
    const auto rem = m - m / d * d; // the window is {0, ..., rem - 1}
    const std::uint64_t eps = (m % d != 0 && x0 + 1 <= rem) ? 1 : 0;
    return m / d + eps;
}

// C(n, k) from Pascal's triangle, built up to row `rows`.
class PascalTriangle {
public:
    explicit PascalTriangle(std::uint64_t rows) : rows_(rows + 1) {
        for (std::uint64_t n = 0; n <= rows; ++n) {
            rows_[n].resize(n + 1);
            rows_[n][0] = rows_[n][n] = 1;
            for (std::uint64_t k = 1; k < n; ++k) {
                rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
            }
        }
    }
    Count operator()(std::uint64_t n, std::uint64_t k) const { return k > n ? Count(0) : rows_[n][k]; }

private:
    std::vector<std::vector<Count>> rows_;
};

// A random interval, AP, or 2-3 part union with |X| <= max_size, first
// elements <= 40 and steps <= 12.
inline ProgressionUnion random_union(std::mt19937_64& rng, std::uint64_t max_size) {
    auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };
    while (true) {
        const auto shape = uniform(0, 2);
        const std::uint64_t parts = shape == 2 ? uniform(2, 3) : 1;
        std::vector<Progression> list;
        std::uint64_t budget = uniform(parts, max_size);
        for (std::uint64_t i = 0; i < parts; ++i) {
            const auto remaining_parts = parts - i - 1;
            const auto length = i + 1 == parts ? budget : uniform(1, budget - remaining_parts);
            budget -= length;
            const auto first = uniform(1, 40);
            const auto step = shape == 0 ? 1 : uniform(1, 12);
            list.emplace_back(first, step, length);
        }
        try {
            return validate_union(std::move(list));
        } catch (const ValidationError&) {
            // overlapping draw; try again
        }
    }
}

} // namespace relprime::testing
