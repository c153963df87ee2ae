#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lip {

// Whole-word profanity matcher. Compiled from a word list into a single
// longest-alternative-first alternation; matches only between word
// boundaries, never inside a longer word.
class ProfanityMatcher {
public:
    ProfanityMatcher() = default;

    // Entries must be nonempty, lowercase [a-z0-9]+, no whitespace.
    // Throws ValidationError naming the offending entry otherwise.
    static ProfanityMatcher compile(const std::vector<std::string>& words);

    bool empty() const { return words_.empty(); }
    std::size_t size() const { return words_.size(); }

    // "word1|word2|word3" form, longest alternative first.
    const std::string& pattern() const { return pattern_; }

    // True iff the whole word is a profanity-list entry.
    bool matches_word(std::string_view word) const;

    // True iff text contains any whole-word match.
    bool contains_match(std::string_view text) const;

private:
    std::vector<std::string> words_;  // longest first
    std::unordered_set<std::string> set_;
    std::string pattern_;
};

// Replaces every whole-word match with the literal token "beep".
std::string censor(std::string_view text, const ProfanityMatcher& matcher);

}  // namespace lip
