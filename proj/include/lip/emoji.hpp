#pragma once

#include <string>
#include <vector>

#include "lip/segmentation.hpp"

namespace lip {

// One distinct emoji in a message, keyed by its tone-stripped grapheme.
struct EmojiOccurrence {
    EmojiRecord record;
    std::size_t first_position = 0;  // grapheme index of first occurrence
    int count = 0;
};

struct EmojiTrailer {
    std::vector<std::string> named;  // nonincreasing popularity order
    int suppressed_count = 0;
    std::string phrase;
};

struct EmojiExtraction {
    std::vector<ClassifiedGrapheme> body;  // informational emoji kept in place
    std::vector<EmojiOccurrence> occurrences;
};

// Removes every Emoji-class grapheme from the body and aggregates them into
// deduplicated occurrences. Informational emoji stay in the body so their
// position survives.
EmojiExtraction extract_emojis(const std::vector<ClassifiedGrapheme>& classified);

// Popularity descending; ties by name ascending, then by key.
std::vector<EmojiOccurrence> rank_emojis(std::vector<EmojiOccurrence> occurrences);

// Renders the trailer phrase: each name as "<name> emoji", top three kept
// unless spamming is allowed, "and some other emojis" when any are hidden,
// "with " prefix when the message has body text.
EmojiTrailer build_trailer(const std::vector<EmojiOccurrence>& ranked, bool has_body_text,
                           bool allow_spamming);

// Replaces each informational emoji with its word as Text graphemes,
// space-delimited from its neighbors.
std::vector<ClassifiedGrapheme> inline_informational(const std::vector<ClassifiedGrapheme>& body);

}  // namespace lip
