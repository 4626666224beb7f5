// SPDX-License-Identifier: Apache-2.0
#include "relprime/setspec.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "relprime/errors.hpp"

namespace relprime {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Progression> parse() {
        std::vector<Progression> parts;
        parts.push_back(term());
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            expect('+');
            parts.push_back(term());
        }
        return parts;
    }

private:
    Progression term() {
        skip_space();
        const auto start = pos_;
        if (pos_ < text_.size() && text_[pos_] == 'a') {
            expect_word("ap");
            expect('(');
            const auto first = number();
            expect(',');
            const auto step = number();
            expect(',');
            const auto length = number();
            expect(')');
            return build(start, [&] { return Progression(first, step, length); });
        }
        const auto lo = number();
        skip_space();
        expect_word("..");
        const auto hi = number();
        if (lo > hi) {
            throw ParseError("interval " + std::to_string(lo) + ".." + std::to_string(hi) + " is empty", start);
        }
        return Progression::interval(lo, hi);
    }

    template <typename F>
    Progression build(std::size_t start, F&& make) {
        try {
            return make();
        } catch (const std::overflow_error&) {
            throw ParseError("progression exceeds the 64-bit element range", start);
        }
    }

    std::uint64_t number() {
        skip_space();
        const auto start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                throw ParseError("integer out of 64-bit range", start);
            }
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected an unsigned integer", start);
        }
        if (value == 0) {
            throw ParseError("values must be positive", start);
        }
        return value;
    }

    void expect(char c) {
        skip_space();
        if (at_end() || text_[pos_] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    void expect_word(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) {
            throw ParseError("expected '" + std::string(word) + "'", pos_);
        }
        pos_ += word.size();
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<Progression> parse_set_spec_parts(std::string_view text) { return Parser(text).parse(); }

ProgressionUnion parse_set_spec(std::string_view text) { return validate_union(parse_set_spec_parts(text)); }

std::string format_set_spec(const Progression& p) {
    if (p.is_interval()) {
        return std::to_string(p.first()) + ".." + std::to_string(p.last());
    }
    return "ap(" + std::to_string(p.first()) + "," + std::to_string(p.step()) + "," + std::to_string(p.length())
           + ")";
}

std::string format_set_spec(const ProgressionUnion& x) {
    std::string out;
    for (const auto& part : x.parts()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += format_set_spec(part);
    }
    return out;
}

} // namespace relprime
