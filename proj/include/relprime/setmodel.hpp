// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace relprime {

// The finite progression {first, first + step, ..., first + (length-1)*step}
// of positive integers. Intervals are progressions with step 1.
class Progression {
public:
    // Throws std::domain_error for a zero field and std::overflow_error when
    // the last element does not fit in 64 bits.
    Progression(std::uint64_t first, std::uint64_t step, std::uint64_t length);

    // [lo, hi] as a step-1 progression. Requires 1 <= lo <= hi.
    static Progression interval(std::uint64_t lo, std::uint64_t hi);

    std::uint64_t first() const noexcept { return first_; }
    std::uint64_t step() const noexcept { return step_; }
    std::uint64_t length() const noexcept { return length_; }
    std::uint64_t last() const noexcept { return first_ + (length_ - 1) * step_; }
    bool is_interval() const noexcept { return step_ == 1; }

    friend bool operator==(const Progression&, const Progression&) = default;

private:
    std::uint64_t first_;
    std::uint64_t step_;
    std::uint64_t length_;
};

// A validated, pairwise-disjoint union of progressions sorted by first element.
// Only validate_union constructs one.
class ProgressionUnion {
public:
    std::span<const Progression> parts() const noexcept { return parts_; }

    // |X|; overflow of the length sum is rejected at validation time.
    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t max_element() const noexcept { return max_; }

    friend bool operator==(const ProgressionUnion&, const ProgressionUnion&) = default;

private:
    friend ProgressionUnion validate_union(std::vector<Progression> parts);
    ProgressionUnion() = default;

    std::vector<Progression> parts_;
    std::uint64_t size_ = 0;
    std::uint64_t max_ = 0;
};

// |{x in p : d | x}|. Throws std::domain_error for d = 0.
std::uint64_t count_ap_multiples(const Progression& p, std::uint64_t d);

// floor(hi/d) - floor((lo-1)/d). Throws std::domain_error unless 1 <= lo <= hi and d >= 1.
std::uint64_t count_interval_multiples(std::uint64_t lo, std::uint64_t hi, std::uint64_t d);

// |X_d|, summed part by part.
std::uint64_t union_multiples(const ProgressionUnion& x, std::uint64_t d);

// Rejects an empty list (std::domain_error) and any pair of parts sharing an
// element (ValidationError naming both parts). Never merges.
ProgressionUnion validate_union(std::vector<Progression> parts);

// Convenience for a single part.
ProgressionUnion make_union(const Progression& p);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Sorted elements of X. Throws ResourceError when |X| > cap.
std::vector<std::uint64_t> enumerate_elements(const ProgressionUnion& x,
                                              std::uint64_t cap = kDefaultEnumerationCap);

} // namespace relprime
