// SPDX-License-Identifier: Apache-2.0
#include "relprime/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace relprime {

namespace {

struct SignedParts {
    Count positive = 0;
    Count negative = 0;
};

// Sums mu(d) * term(|X_d|) over the given squarefree divisors. term(0) must be
// 0, which lets empty X_d be skipped. Chunks are contiguous and combined in
// order; exact integer addition makes the result independent of threading.
template <typename Term>
Count moebius_sum(const ProgressionUnion& x, const std::vector<DivisorEntry>& divisors, Term term,
                  EvalOptions options) {
    const auto eval_range = [&](std::size_t begin, std::size_t end, SignedParts& acc) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& [d, mu] = divisors[i];
            if (mu == 0) {
                continue;
            }
            const auto multiples = union_multiples(x, d);
            if (multiples == 0) {
                continue;
            }
            (mu > 0 ? acc.positive : acc.negative) += term(multiples);
        }
    };

    const auto workers = static_cast<std::size_t>(std::max(1u, options.threads));
    std::vector<SignedParts> partials(std::min<std::size_t>(workers, std::max<std::size_t>(divisors.size(), 1)));
    if (partials.size() == 1) {
        eval_range(0, divisors.size(), partials[0]);
    } else {
        const auto chunk = (divisors.size() + partials.size() - 1) / partials.size();
        std::vector<std::jthread> pool;
        pool.reserve(partials.size());
        for (std::size_t t = 0; t < partials.size(); ++t) {
            const auto begin = std::min(divisors.size(), t * chunk);
            const auto end = std::min(divisors.size(), begin + chunk);
            pool.emplace_back([&, begin, end, t] { eval_range(begin, end, partials[t]); });
        }
    }

    SignedParts total;
    for (const auto& part : partials) {
        total.positive += part.positive;
        total.negative += part.negative;
    }
    Count result = total.positive - total.negative;
    if (sgn(result) < 0) {
        throw std::logic_error("moebius_sum: negative total " + result.get_str());
    }
    return result;
}

std::vector<DivisorEntry> squarefree_up_to(std::uint64_t bound) {
    const auto table = moebius_sieve(bound);
    std::vector<DivisorEntry> out;
    for (std::uint64_t d = 1; d <= bound; ++d) {
        if (table[d] != 0) {
            out.push_back({d, table[d]});
        }
    }
    return out;
}

void require_modulus(const Count& n) {
    if (sgn(n) <= 0) {
        throw std::domain_error("modulus n must be positive");
    }
}

void require_cardinality(std::uint64_t k) {
    if (k == 0) {
        throw std::domain_error("subset size k must be positive");
    }
}

} // namespace

Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // After step i the running value is C(n-k+i, i), so each division is exact.
    Count result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        mpz_mul_ui(result.get_mpz_t(), result.get_mpz_t(), n - k + i);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

Count power_of_two_minus_one(std::uint64_t e) {
    Count result = 0;
    mpz_setbit(result.get_mpz_t(), e);
    return result - 1;
}

Count phi_k(const ProgressionUnion& x, const Count& n, std::uint64_t k, EvalOptions options) {
    require_modulus(n);
    require_cardinality(k);
    if (k > x.size()) {
        return 0;
    }
    return moebius_sum(x, squarefree_divisors_up_to(n, x.max_element()),
                       [k](std::uint64_t c) { return binomial(c, k); }, options);
}

Count phi(const ProgressionUnion& x, const Count& n, EvalOptions options) {
    require_modulus(n);
    return moebius_sum(x, squarefree_divisors_up_to(n, x.max_element()), power_of_two_minus_one, options);
}

Count f_k(const ProgressionUnion& x, std::uint64_t k, EvalOptions options) {
    require_cardinality(k);
    if (k > x.size()) {
        return 0;
    }
    return moebius_sum(x, squarefree_up_to(x.max_element()), [k](std::uint64_t c) { return binomial(c, k); },
                       options);
}

Count f(const ProgressionUnion& x, EvalOptions options) {
    return moebius_sum(x, squarefree_up_to(x.max_element()), power_of_two_minus_one, options);
}

Count phi_full_divisor_sum(const ProgressionUnion& x, std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("modulus n must be positive");
    }
    if (n == 1) {
        return power_of_two_minus_one(x.size());
    }
    Count positive = 0;
    Count negative = 0;
    for (const auto& [d, mu] : divisors_with_mu(n).entries) {
        if (mu == 0) {
            continue;
        }
        Count term = 0;
        mpz_setbit(term.get_mpz_t(), union_multiples(x, d));
        (mu > 0 ? positive : negative) += term;
    }
    return positive - negative;
}

Count nathanson_f(std::uint64_t n) { return f(make_union(Progression::interval(1, n))); }

Count nathanson_phi(std::uint64_t n) { return phi(make_union(Progression::interval(1, n)), Count(n)); }

Count evaluate(const CountingQuery& query, EvalOptions options) {
    if (query.modulus) {
        return query.cardinality ? phi_k(query.set, *query.modulus, *query.cardinality, options)
                                 : phi(query.set, *query.modulus, options);
    }
    return query.cardinality ? f_k(query.set, *query.cardinality, options) : f(query.set, options);
}

} // namespace relprime
