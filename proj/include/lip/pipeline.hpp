#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lip/assets.hpp"
#include "lip/config.hpp"
#include "lip/emoji.hpp"
#include "lip/punctuation.hpp"

namespace lip {

struct StageTiming {
    std::string stage;
    std::uint64_t micros = 0;
};

struct ProcessedMessage {
    std::string tts_text;
    std::vector<std::string> body;
    EmojiTrailer emoji_trailer;
    std::optional<PunctuationReadout> punctuation_phrase;
    bool have_char = false;
    int unique_emoji_count = 0;
    int informational_count = 0;  // distinct informational emoji inlined
    std::vector<StageTiming> stage_timings;
};

inline constexpr std::size_t kMaxGraphemes = 10000;

// Runs the full preprocessing flow in fixed order: lowercase, segmentation
// and classification, emoji extraction and ranking, informational inlining,
// then for text-bearing messages lexical normalization, entity verbalization,
// profanity censoring and punctuation stripping; symbol-only messages get a
// punctuation readout instead. The emoji trailer is appended last.
// Deterministic for identical (text, config, bundle). Inputs over
// kMaxGraphemes raise SizeError.
ProcessedMessage preprocess(std::string_view text, const Config& config,
                            const AssetBundle& bundle);

// Same flow with wall-clock stage timings filled in.
ProcessedMessage preprocess_with_report(std::string_view text, const Config& config,
                                        const AssetBundle& bundle);

}  // namespace lip
