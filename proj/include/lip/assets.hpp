#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lip/profanity.hpp"

namespace lip {

// One emoji the pipeline knows about. The key is the grapheme with skin-tone
// modifiers and variation selectors removed, so every presentation variant of
// the same emoji resolves to one record.
struct EmojiRecord {
    std::string key;
    std::string name;  // lowercase words, speakable as-is
    int popularity = 0;
    bool informational = false;
    std::string word;  // in-place verbalization for informational records
};

struct AssetBundle {
    std::unordered_map<std::string, EmojiRecord> emoji_table;
    std::unordered_map<std::string, std::string> contractions;
    std::unordered_map<std::string, std::string> collapsed_words;
    std::unordered_set<std::string> word_list;
    ProfanityMatcher profanity_matcher;
    std::map<std::string, std::string> punctuation_names;  // grapheme -> spoken name
    std::uint64_t footprint_bytes = 0;
    std::map<std::string, std::uint64_t> footprint_breakdown;  // file -> on-disk bytes

    // Deterministic serialization of every loaded table, for comparing loads.
    std::string canonical_digest() const;

    // Rough in-memory size of the loaded structures, reported separately from
    // the on-disk footprint.
    std::uint64_t resident_estimate_bytes() const;
};

// Loads and validates all six asset files from dir:
//   emoji_meta.json, contractions.json, collapsed_words.json,
//   wordlist.txt, profanity.txt, punctuation_names.json
// Throws LoadError (missing/bad file) or ValidationError (invariant
// violation naming the offending entry).
AssetBundle load_assets(const std::filesystem::path& dir);

// Sum of on-disk asset sizes, as recorded at load time.
std::uint64_t asset_footprint(const AssetBundle& bundle);

// Canonical lookup form of an emoji grapheme: skin-tone modifiers and
// variation selectors removed.
std::string emoji_lookup_key(std::string_view grapheme);

}  // namespace lip
