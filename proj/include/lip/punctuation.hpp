#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lip/assets.hpp"

namespace lip {

struct PunctuationReadout {
    std::vector<std::string> named;  // first-appearance order of distinct marks
    int suppressed_count = 0;
    std::string phrase;
};

// For text-bearing messages: every punctuation mark except '?' becomes a
// space (so hyphenated words split cleanly), apostrophes vanish ("it's" ->
// "its"), runs of '?' collapse to one, whitespace renormalizes to single
// spaces. Characters outside a-z, 0-9, space and '?' never survive.
std::string strip_punctuation(std::string_view text);

// For symbol-only messages: distinct marks in first-appearance order mapped
// through the bundle's spoken names. Without spamming, the first two are
// read and the rest fold into "and some other punctuations". Marks missing
// from the name table are skipped and counted as suppressed.
PunctuationReadout punctuation_readout(std::string_view text, const AssetBundle& bundle,
                                       bool allow_spamming);

}  // namespace lip
