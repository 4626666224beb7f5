// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relprime/setmodel.hpp"

namespace relprime {

// SetSpec grammar:
//
//   spec  := term ( '+' term )*
//   term  := NUM '..' NUM            interval [l, r]
//          | 'ap' '(' NUM ',' NUM ',' NUM ')'   progression (first, step, length)
//   NUM   := [0-9]+                  unsigned decimal, must be >= 1
//
// Whitespace between tokens is ignored. Example: "1..4 + ap(7,3,5)".

// Parses without checking disjointness. Throws ParseError.
std::vector<Progression> parse_set_spec_parts(std::string_view text);

// parse_set_spec_parts followed by validate_union.
ProgressionUnion parse_set_spec(std::string_view text);

// Canonical rendering: "l..r" for step 1, "ap(a,b,m)" otherwise, joined by " + ".
std::string format_set_spec(const Progression& p);
std::string format_set_spec(const ProgressionUnion& x);

} // namespace relprime
