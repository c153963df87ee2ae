#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lip/assets.hpp"

namespace lip {

enum class GraphemeClass { Text, Emoji, InformationalEmoji, Punctuation, Whitespace };

// One user-perceived character. Multi-codepoint clusters (ZWJ sequences,
// keycaps, flags, combining marks) stay together.
struct Grapheme {
    std::string text;
    std::size_t begin = 0;  // byte offsets into the source string
    std::size_t end = 0;
};

struct ClassifiedGrapheme {
    Grapheme grapheme;
    GraphemeClass cls = GraphemeClass::Text;
    std::optional<EmojiRecord> emoji;  // set iff cls is Emoji or InformationalEmoji
};

// Simple lowercase of the whole message: letters mapped one-to-one, emoji,
// digits and punctuation unchanged.
std::string lowercase(std::string_view text);

// Extended grapheme cluster segmentation. Lossless: concatenating the
// returned graphemes in order reproduces the input exactly.
std::vector<Grapheme> segment(std::string_view text);

// Removes skin-tone modifier codepoints (U+1F3FB..U+1F3FF). May produce an
// empty grapheme when the input was a lone modifier.
Grapheme strip_skin_tone(const Grapheme& g);

// Assigns exactly one class per grapheme. Emoji lookup uses the tone- and
// variation-selector-free form; pictographs missing from the table become
// Emoji with a fallback record (name "unknown emoji", popularity 0).
std::vector<ClassifiedGrapheme> classify(const std::vector<Grapheme>& graphemes,
                                         const AssetBundle& bundle);

// True iff some Text grapheme contains an ASCII letter or digit. Digits
// inside keycap emoji do not count.
bool has_alphanumeric(const std::vector<ClassifiedGrapheme>& classified);

// Number of distinct tone-stripped emoji graphemes (informational included).
int count_unique_emojis(const std::vector<ClassifiedGrapheme>& classified);

// Codepoint predicates shared with the rest of the pipeline.
bool is_skin_tone_modifier(char32_t cp);
// Narrow emoji range used for the unknown-emoji fallback; classic dingbat
// and symbol blocks are excluded so they read as punctuation.
bool is_fallback_emoji_range(char32_t cp);
bool is_letter_or_digit(char32_t cp);

}  // namespace lip
