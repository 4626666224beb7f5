// SPDX-License-Identifier: Apache-2.0
#include "relprime/setmodel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "relprime/errors.hpp"
#include "relprime/numtheory.hpp"
#include "relprime/setspec.hpp"

namespace relprime {

namespace {

using u128 = unsigned __int128;

// Smallest common element of two progressions, if any. Solves
// x = a1 (mod b1), x = a2 (mod b2) by CRT and checks the solution against the
// overlap of both index ranges.
std::optional<std::uint64_t> first_common_element(const Progression& p, const Progression& q) {
    const auto lo = std::max(p.first(), q.first());
    const auto hi = std::min(p.last(), q.last());
    if (lo > hi) {
        return std::nullopt;
    }
    if (p.is_interval() && q.is_interval()) {
        return lo;
    }
    const auto g = std::gcd(p.step(), q.step());
    const bool q_ahead = q.first() >= p.first();
    const auto gap = q_ahead ? q.first() - p.first() : p.first() - q.first();
    if (gap % g != 0) {
        return std::nullopt;
    }
    // p.first() + p.step() * t = q.first() (mod q.step()), with t taken mod q.step()/g.
    const auto qg = q.step() / g;
    const auto pg = (p.step() / g) % qg;
    auto rhs = (gap / g) % qg;
    if (!q_ahead && rhs != 0) {
        rhs = qg - rhs;
    }
    const auto t = static_cast<std::uint64_t>(static_cast<u128>(rhs) * detail::mod_inverse_u64(pg, qg) % qg);
    const u128 period = static_cast<u128>(p.step()) * qg;
    u128 x = static_cast<u128>(p.first()) + static_cast<u128>(p.step()) * t;
    if (x < lo) {
        x += (static_cast<u128>(lo) - x + period - 1) / period * period;
    } else {
        x -= (x - lo) / period * period;
    }
    if (x > hi) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(x);
}

} // namespace

Progression::Progression(std::uint64_t first, std::uint64_t step, std::uint64_t length)
    : first_(first), step_(step), length_(length) {
    if (first == 0 || step == 0 || length == 0) {
        throw std::domain_error("Progression: first, step and length must all be positive");
    }
    const u128 last = static_cast<u128>(first) + static_cast<u128>(length - 1) * step;
    if (last > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("Progression: last element exceeds 64 bits");
    }
}

Progression Progression::interval(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) {
        throw std::domain_error("Progression::interval: require 1 <= lo <= hi, got " + std::to_string(lo) + ".."
                                + std::to_string(hi));
    }
    return Progression(lo, 1, hi - lo + 1);
}

std::uint64_t count_ap_multiples(const Progression& p, std::uint64_t d) {
    if (d == 0) {
        throw std::domain_error("count_ap_multiples: d must be positive");
    }
    const auto k = std::gcd(d, p.step());
    if (p.first() % k != 0) {
        return 0;
    }
    // Index x in [0, m-1] hits a multiple iff x = -(a/k) * (b/k)^{-1} (mod d/k).
    const auto window = d / k;
    const auto a_red = (p.first() / k) % window;
    const auto b_red = (p.step() / k) % window;
    const auto neg_a = a_red == 0 ? 0 : window - a_red;
    const auto x0 =
        static_cast<std::uint64_t>(static_cast<u128>(neg_a) * detail::mod_inverse_u64(b_red, window) % window);
    const auto last_index = p.length() - 1;
    if (x0 > last_index) {
        return 0;
    }
    return (last_index - x0) / window + 1;
}

std::uint64_t count_interval_multiples(std::uint64_t lo, std::uint64_t hi, std::uint64_t d) {
    if (d == 0) {
        throw std::domain_error("count_interval_multiples: d must be positive");
    }
    if (lo == 0 || lo > hi) {
        throw std::domain_error("count_interval_multiples: require 1 <= lo <= hi");
    }
    return hi / d - (lo - 1) / d;
}

std::uint64_t union_multiples(const ProgressionUnion& x, std::uint64_t d) {
    std::uint64_t total = 0;
    for (const auto& part : x.parts()) {
        total += part.is_interval() ? count_interval_multiples(part.first(), part.last(), d)
                                    : count_ap_multiples(part, d);
    }
    return total;
}

ProgressionUnion validate_union(std::vector<Progression> parts) {
    if (parts.empty()) {
        throw std::domain_error("validate_union: at least one progression is required");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (const auto shared = first_common_element(parts[i], parts[j])) {
                throw ValidationError("parts " + std::to_string(i + 1) + " (" + format_set_spec(parts[i]) + ") and "
                                          + std::to_string(j + 1) + " (" + format_set_spec(parts[j])
                                          + ") overlap at " + std::to_string(*shared),
                                      i, j);
            }
        }
    }

    ProgressionUnion out;
    for (const auto& part : parts) {
        if (part.length() > std::numeric_limits<std::uint64_t>::max() - out.size_) {
            throw std::overflow_error("validate_union: total size exceeds 64 bits");
        }
        out.size_ += part.length();
        out.max_ = std::max(out.max_, part.last());
    }
    std::ranges::stable_sort(parts, {}, &Progression::first);
    out.parts_ = std::move(parts);
    return out;
}

ProgressionUnion make_union(const Progression& p) { return validate_union({p}); }

std::vector<std::uint64_t> enumerate_elements(const ProgressionUnion& x, std::uint64_t cap) {
    if (x.size() > cap) {
        throw ResourceError("enumerate_elements: |X| = " + std::to_string(x.size()) + " exceeds the cap of "
                            + std::to_string(cap));
    }
    std::vector<std::uint64_t> elements;
    elements.reserve(x.size());
    for (const auto& part : x.parts()) {
        for (std::uint64_t i = 0; i < part.length(); ++i) {
            elements.push_back(part.first() + i * part.step());
        }
    }
    std::ranges::sort(elements);
    return elements;
}

} // namespace relprime
