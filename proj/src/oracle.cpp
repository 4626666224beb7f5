// SPDX-License-Identifier: Apache-2.0
#include "relprime/oracle.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "relprime/errors.hpp"

namespace relprime::oracle {

namespace {

std::vector<std::uint64_t> checked_elements(const ProgressionUnion& x, const OracleBudget& budget) {
    const auto limit = std::min(budget.max_set_size, kHardSetSizeLimit);
    if (x.size() > limit) {
        throw ResourceError("oracle: |X| = " + std::to_string(x.size()) + " exceeds the subset budget of "
                            + std::to_string(limit) + " elements");
    }
    return enumerate_elements(x, limit);
}

// gcd(n, v) with n possibly huge; gcd(n, v) = gcd(n mod v, v).
std::uint64_t gcd_with(const Count& n, std::uint64_t v) {
    return std::gcd(mpz_fdiv_ui(n.get_mpz_t(), v), v);
}

// Binary counter over all nonempty subsets. `values[i]` already has the
// modulus folded in (gcd(n, e_i)), so the subset gcd is the plain fold.
std::vector<Count> subset_profile(const std::vector<std::uint64_t>& values) {
    const auto size = values.size();
    std::vector<std::uint64_t> hits(size + 1, 0);
    const std::uint64_t end = std::uint64_t{1} << size;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        std::uint64_t g = 0;
        for (auto rest = mask; rest != 0; rest &= rest - 1) {
            g = std::gcd(g, values[static_cast<std::size_t>(std::countr_zero(rest))]);
            if (g == 1) {
                break;
            }
        }
        if (g == 1) {
            ++hits[static_cast<std::size_t>(std::popcount(mask))];
        }
    }
    std::vector<Count> out;
    out.reserve(hits.size());
    for (const auto h : hits) {
        out.emplace_back(static_cast<unsigned long>(h));
    }
    return out;
}

Count total(const std::vector<Count>& by_size) {
    Count sum = 0;
    for (const auto& c : by_size) {
        sum += c;
    }
    return sum;
}

Count pick(const std::vector<Count>& by_size, std::uint64_t k) {
    if (k == 0) {
        throw std::domain_error("oracle: subset size k must be positive");
    }
    return k < by_size.size() ? by_size[static_cast<std::size_t>(k)] : Count(0);
}

Count tuple_space(std::uint64_t n, std::uint64_t k, TupleOrdering ordering) {
    Count out;
    switch (ordering) {
    case TupleOrdering::ordered:
        mpz_ui_pow_ui(out.get_mpz_t(), n, k);
        break;
    case TupleOrdering::nondecreasing:
        mpz_bin_uiui(out.get_mpz_t(), n + k - 1, k);
        break;
    case TupleOrdering::strict:
        mpz_bin_uiui(out.get_mpz_t(), n, k);
        break;
    }
    return out;
}

} // namespace

std::vector<Count> brute_f_by_size(const ProgressionUnion& x, const OracleBudget& budget) {
    return subset_profile(checked_elements(x, budget));
}

std::vector<Count> brute_phi_by_size(const ProgressionUnion& x, const Count& n, const OracleBudget& budget) {
    if (sgn(n) <= 0) {
        throw std::domain_error("oracle: modulus n must be positive");
    }
    auto values = checked_elements(x, budget);
    for (auto& v : values) {
        v = gcd_with(n, v);
    }
    return subset_profile(values);
}

Count brute_f(const ProgressionUnion& x, const OracleBudget& budget) { return total(brute_f_by_size(x, budget)); }

Count brute_f_k(const ProgressionUnion& x, std::uint64_t k, const OracleBudget& budget) {
    return pick(brute_f_by_size(x, budget), k);
}

Count brute_phi(const ProgressionUnion& x, const Count& n, const OracleBudget& budget) {
    return total(brute_phi_by_size(x, n, budget));
}

Count brute_phi_k(const ProgressionUnion& x, const Count& n, std::uint64_t k, const OracleBudget& budget) {
    return pick(brute_phi_by_size(x, n, budget), k);
}

Count brute_tuples(const TupleQuery& query, TupleOrdering ordering, const OracleBudget& budget) {
    const auto n = query.n;
    const auto k = query.k;
    if (n == 0 || k == 0) {
        throw std::domain_error("oracle: tuple queries need n >= 1 and k >= 1");
    }
    if (query.m && sgn(*query.m) <= 0) {
        throw std::domain_error("oracle: modulus m must be positive");
    }
    if (tuple_space(n, k, ordering) > Count(static_cast<unsigned long>(budget.max_tuple_space))) {
        throw ResourceError("oracle: tuple space for n = " + std::to_string(n) + ", k = " + std::to_string(k)
                            + " exceeds the budget of " + std::to_string(budget.max_tuple_space));
    }
    if (ordering == TupleOrdering::strict && k > n) {
        return 0;
    }

    // value[v] is v with the modulus folded in.
    std::vector<std::uint64_t> value(n + 1);
    for (std::uint64_t v = 1; v <= n; ++v) {
        value[v] = query.m ? gcd_with(*query.m, v) : v;
    }

    // Odometer over a_1..a_k, each position starting at its lower bound.
    const auto lower = [&](const std::vector<std::uint64_t>& a, std::size_t i) -> std::uint64_t {
        if (i == 0 || ordering == TupleOrdering::ordered) {
            return 1;
        }
        return ordering == TupleOrdering::nondecreasing ? a[i - 1] : a[i - 1] + 1;
    };
    std::vector<std::uint64_t> a(k);
    for (std::size_t i = 0; i < k; ++i) {
        a[i] = lower(a, i);
    }

    std::uint64_t hits = 0;
    while (true) {
        std::uint64_t g = 0;
        for (const auto v : a) {
            g = std::gcd(g, value[v]);
            if (g == 1) {
                break;
            }
        }
        if (g == 1) {
            ++hits;
        }
        // Advance the rightmost position that still has room, then reset the tail.
        std::size_t i = k;
        while (i > 0) {
            --i;
            const auto room = ordering == TupleOrdering::strict ? n - (k - 1 - i) : n;
            if (a[i] < room) {
                ++a[i];
                for (auto j = i + 1; j < k; ++j) {
                    a[j] = lower(a, j);
                }
                break;
            }
            if (i == 0) {
                return Count(static_cast<unsigned long>(hits));
            }
        }
    }
}

} // namespace relprime::oracle
