// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "relprime/numtheory.hpp"
#include "relprime/setmodel.hpp"
#include "relprime/shonhiwa.hpp"

namespace relprime::oracle {

// Brute-force reference counts, straight from the definitions. Nothing here
// uses a Moebius sum or a closed form; the only shared pieces are std::gcd and
// enumerate_elements.

struct OracleBudget {
    std::uint64_t max_set_size = 22;
    std::uint64_t max_tuple_space = 10'000'000;
};

// Subset enumeration never goes past this many elements regardless of budget.
inline constexpr std::uint64_t kHardSetSizeLimit = 40;

// Counts of subsets A of X with gcd(A) = 1, indexed by |A| (entry 0 is always 0).
std::vector<Count> brute_f_by_size(const ProgressionUnion& x, const OracleBudget& budget = {});

// Same with n folded into the gcd.
std::vector<Count> brute_phi_by_size(const ProgressionUnion& x, const Count& n, const OracleBudget& budget = {});

Count brute_f(const ProgressionUnion& x, const OracleBudget& budget = {});
Count brute_f_k(const ProgressionUnion& x, std::uint64_t k, const OracleBudget& budget = {});
Count brute_phi(const ProgressionUnion& x, const Count& n, const OracleBudget& budget = {});
Count brute_phi_k(const ProgressionUnion& x, const Count& n, std::uint64_t k, const OracleBudget& budget = {});

enum class TupleOrdering { ordered, nondecreasing, strict };

// Enumerates k-tuples from [1, n] in the given regime and counts those whose
// gcd (folded with m when present) is 1. Throws ResourceError if the tuple
// space exceeds budget.max_tuple_space.
Count brute_tuples(const TupleQuery& query, TupleOrdering ordering, const OracleBudget& budget = {});

} // namespace relprime::oracle
