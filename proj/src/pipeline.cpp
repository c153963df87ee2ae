#include "lip/pipeline.hpp"

#include <chrono>
#include <type_traits>
#include <unordered_set>

#include "lip/entities.hpp"
#include "lip/errors.hpp"
#include "lip/lexical.hpp"
#include "lip/profanity.hpp"
#include "lip/segmentation.hpp"
#include "lip/utf8.hpp"

namespace lip {

namespace {

class StageClock {
public:
    StageClock(bool enabled, std::vector<StageTiming>& out) : enabled_(enabled), out_(out) {}

    template <typename F>
    auto run(const char* stage, F&& f) {
        if (!enabled_) {
            return f();
        }
        auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(stage, start);
        } else {
            auto result = f();
            record(stage, start);
            return result;
        }
    }

private:
    void record(const char* stage, std::chrono::steady_clock::time_point start) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        out_.push_back({stage, static_cast<std::uint64_t>(us)});
    }

    bool enabled_;
    std::vector<StageTiming>& out_;
};

bool is_space_char(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space_char(text[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !is_space_char(text[j])) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(text.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (w.empty()) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += w;
    }
    return out;
}

int distinct_informational(const std::vector<ClassifiedGrapheme>& classified) {
    std::unordered_set<std::string> seen;
    for (const auto& cg : classified) {
        if (cg.cls == GraphemeClass::InformationalEmoji) {
            seen.insert(emoji_lookup_key(cg.grapheme.text));
        }
    }
    return static_cast<int>(seen.size());
}

ProcessedMessage run_pipeline(std::string_view text, const Config& config,
                              const AssetBundle& bundle, bool timed) {
    ProcessedMessage msg;
    StageClock clock(timed, msg.stage_timings);

    std::string lowered = clock.run("lowercase", [&] { return lowercase(text); });

    std::vector<Grapheme> graphemes = clock.run("segment", [&] { return segment(lowered); });
    if (graphemes.size() > kMaxGraphemes) {
        throw SizeError("input of " + std::to_string(graphemes.size()) +
                        " graphemes exceeds the cap of " + std::to_string(kMaxGraphemes));
    }

    std::vector<ClassifiedGrapheme> classified =
        clock.run("classify", [&] { return classify(graphemes, bundle); });

    msg.have_char = has_alphanumeric(classified);
    msg.unique_emoji_count = count_unique_emojis(classified);

    EmojiExtraction extraction =
        clock.run("emoji_extract", [&] { return extract_emojis(classified); });
    std::vector<EmojiOccurrence> ranked = rank_emojis(std::move(extraction.occurrences));

    msg.informational_count = distinct_informational(extraction.body);
    std::vector<ClassifiedGrapheme> body_graphemes =
        clock.run("emoji_inline", [&] { return inline_informational(extraction.body); });

    if (msg.have_char) {
        std::string body_text;
        for (const auto& cg : body_graphemes) {
            body_text += cg.grapheme.text;
        }
        std::vector<std::string> tokens = split_tokens(body_text);
        if (config.rm_common_abbr) {
            tokens = clock.run("lexical", [&] { return normalize_text(tokens, bundle); });
        }
        tokens = clock.run("entities", [&] { return apply_entities(tokens, config); });
        body_text = join_words(tokens);
        body_text =
            clock.run("profanity", [&] { return censor(body_text, bundle.profanity_matcher); });
        body_text = clock.run("punctuation", [&] {
            // Stripping can expose words that were glued to symbols, and
            // apostrophe removal can fuse letters into a new word; those get
            // one more normalization and censor pass.
            std::string stripped = strip_punctuation(body_text);
            if (config.rm_common_abbr) {
                stripped = join_words(normalize_text(split_tokens(stripped), bundle));
            }
            return censor(stripped, bundle.profanity_matcher);
        });
        msg.body = split_tokens(body_text);
    } else {
        // No readable text: the inlined informational words become the body,
        // punctuation marks get a spoken readout.
        std::string inlined;
        for (const auto& cg : body_graphemes) {
            const std::string& g = cg.grapheme.text;
            if (cg.cls == GraphemeClass::Text && g.size() == 1 && g[0] >= 'a' && g[0] <= 'z') {
                inlined += g[0];
            } else {
                inlined += ' ';
            }
        }
        msg.body = split_tokens(inlined);
        msg.punctuation_phrase = clock.run("punctuation", [&] {
            return punctuation_readout(lowered, bundle, config.allow_punctuation_spamming);
        });
    }

    msg.emoji_trailer = build_trailer(ranked, msg.have_char, config.allow_emoji_spamming);

    clock.run("assemble", [&] {
        std::string out = join_words(msg.body);
        if (msg.punctuation_phrase && !msg.punctuation_phrase->phrase.empty()) {
            if (!out.empty()) {
                out += ' ';
            }
            out += msg.punctuation_phrase->phrase;
        }
        if (!msg.emoji_trailer.phrase.empty()) {
            if (!out.empty()) {
                out += ' ';
            }
            out += msg.emoji_trailer.phrase;
        }
        // Safety pass over the whole assembled string. All parts are already
        // clean (body censored, asset names audited at load), so this cannot
        // change the text, only guard it.
        msg.tts_text = censor(out, bundle.profanity_matcher);
    });

    return msg;
}

}  // namespace

ProcessedMessage preprocess(std::string_view text, const Config& config,
                            const AssetBundle& bundle) {
    return run_pipeline(text, config, bundle, false);
}

ProcessedMessage preprocess_with_report(std::string_view text, const Config& config,
                                        const AssetBundle& bundle) {
    return run_pipeline(text, config, bundle, true);
}

}  // namespace lip
