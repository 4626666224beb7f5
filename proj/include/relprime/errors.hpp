// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relprime {

// Raised when a computation would exceed a configured size limit (oracle
// budgets, enumeration caps, sieve sizes). Checked before any work starts.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A ProgressionUnion whose parts share an element.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& what, std::size_t first_part, std::size_t second_part)
        : std::invalid_argument(what), first_part_(first_part), second_part_(second_part) {}

    // Zero-based positions of the offending parts in the caller's input order.
    std::size_t first_part() const noexcept { return first_part_; }
    std::size_t second_part() const noexcept { return second_part_; }

private:
    std::size_t first_part_;
    std::size_t second_part_;
};

// Malformed SetSpec text. `position` is the byte offset of the failure.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace relprime
