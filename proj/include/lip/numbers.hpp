#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lip {

// Short-scale cardinal, lowercase, hyphenated compounds ("twenty-one"),
// "and" before the final tens/units of a group ("six thousand and twelve",
// "three hundred and five"). Values of 10^12 or more fall back to a digit
// readout.
std::string number_to_words(std::uint64_t n);

// Per-digit readout: "931" -> "nine three one".
std::string digits_to_words(std::string_view digits);

}  // namespace lip
