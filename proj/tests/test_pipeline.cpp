#include <doctest.h>

#include "lip/errors.hpp"
#include "lip/pipeline.hpp"
#include "test_support.hpp"

using namespace lip;

namespace {

std::string tts(const std::string& text) {
    return preprocess(text, test_config(), test_bundle()).tts_text;
}

}  // namespace

TEST_CASE("golden end-to-end rewrites") {
    CHECK(tts("Yesss!!!! It's holiday today \U0001F973\U0001F973\U0001F973") ==
          "yes its holiday today with partying face emoji");
    CHECK(tts("My phone number is 9321673878") ==
          "my phone number is nine three two one six seven three eight seven eight");
    CHECK(tts("") == "");
}

TEST_CASE("emoji only message orders punctuation before trailer") {
    std::string out = tts("!@#$%^&* \U0001F602\U0001F923\U0001F60A\U0001F389\U0001F60E");
    CHECK(out ==
          "exclamation mark at symbol and some other punctuations face with tears of joy emoji "
          "rolling on the floor laughing emoji smiling face with smiling eyes emoji and some "
          "other emojis");
}

TEST_CASE("informational emoji keeps its position without body text") {
    CHECK(tts("4️⃣\U0001F923") ==
          "four rolling on the floor laughing emoji");
}

TEST_CASE("have_char and counters are populated") {
    ProcessedMessage msg = preprocess("I will be there in 4️⃣ \U0001F923\U0001F923 hours.",
                                      test_config(), test_bundle());
    CHECK(msg.have_char);
    CHECK(msg.unique_emoji_count == 2);
    CHECK(msg.informational_count == 1);
    CHECK(msg.emoji_trailer.named.size() == 1);
    CHECK(msg.tts_text == "i will be there in four hours with rolling on the floor laughing emoji");
}

TEST_CASE("flags change the pipeline behavior") {
    Config config = test_config();

    SUBCASE("emoji spamming lists every distinct emoji") {
        config.allow_emoji_spamming = true;
        ProcessedMessage msg =
            preprocess("hi \U0001F3E0\U0001F929\U0001F57A✨", config, test_bundle());
        CHECK(msg.emoji_trailer.named.size() == 4);
        CHECK(msg.emoji_trailer.suppressed_count == 0);
    }
    SUBCASE("punctuation spamming reads the full run") {
        config.allow_punctuation_spamming = true;
        ProcessedMessage msg = preprocess("!@#", config, test_bundle());
        CHECK(msg.tts_text == "exclamation mark at symbol hash symbol");
    }
    SUBCASE("rm_common_abbr off leaves shorthand alone") {
        config.rm_common_abbr = false;
        CHECK(preprocess("plz chk", config, test_bundle()).tts_text == "plz chk");
    }
    SUBCASE("masked phone wording") {
        config.show_phonenumber = false;
        CHECK(preprocess("call 9321673878", config, test_bundle()).tts_text ==
              "call a ten digit number");
    }
    SUBCASE("disable_pii_masking reads the email aloud") {
        config.disable_pii_masking = true;
        CHECK(preprocess("mail mohan@gmail.com", config, test_bundle()).tts_text ==
              "mail mohan at gmail dot com");
    }
}

TEST_CASE("structural invariant: parts compose tts_text") {
    for (const char* s : {"Yesss!!!! It's holiday today \U0001F973", "!@#$%&*()",
                          "plain words", "", "4️⃣\U0001F923"}) {
        ProcessedMessage msg = preprocess(s, test_config(), test_bundle());
        std::string joined;
        for (const auto& w : msg.body) {
            if (!joined.empty()) {
                joined += ' ';
            }
            joined += w;
        }
        if (msg.punctuation_phrase && !msg.punctuation_phrase->phrase.empty()) {
            if (!joined.empty()) {
                joined += ' ';
            }
            joined += msg.punctuation_phrase->phrase;
        }
        if (!msg.emoji_trailer.phrase.empty()) {
            if (!joined.empty()) {
                joined += ' ';
            }
            joined += msg.emoji_trailer.phrase;
        }
        CHECK(msg.tts_text == joined);
    }
}

TEST_CASE("emoji count equals trailer names plus suppressed plus informational") {
    for (const char* s :
         {"hi \U0001F602✨\U0001F923\U0001F64F\U0001F389", "4️⃣\U0001F923",
          "\U0001F9D2\U0001F9D2\U0001F3FD", "no emoji", ""}) {
        ProcessedMessage msg = preprocess(s, test_config(), test_bundle());
        CHECK(msg.unique_emoji_count == static_cast<int>(msg.emoji_trailer.named.size()) +
                                            msg.emoji_trailer.suppressed_count +
                                            msg.informational_count);
    }
}

TEST_CASE("oversized input raises a size error") {
    std::string big(kMaxGraphemes + 1, 'a');
    CHECK_THROWS_AS(preprocess(big, test_config(), test_bundle()), SizeError);
    std::string ok(kMaxGraphemes, 'a');
    CHECK_NOTHROW(preprocess(ok, test_config(), test_bundle()));
}

TEST_CASE("timings cover every executed stage exactly once") {
    ProcessedMessage msg =
        preprocess_with_report("hello \U0001F602 2day!!", test_config(), test_bundle());
    std::vector<std::string> stages;
    for (const auto& t : msg.stage_timings) {
        stages.push_back(t.stage);
    }
    std::vector<std::string> expected = {"lowercase", "segment",  "classify",
                                         "emoji_extract", "emoji_inline", "lexical",
                                         "entities",  "profanity", "punctuation", "assemble"};
    CHECK(stages == expected);

    msg = preprocess_with_report("!@#", test_config(), test_bundle());
    stages.clear();
    for (const auto& t : msg.stage_timings) {
        stages.push_back(t.stage);
    }
    expected = {"lowercase", "segment", "classify", "emoji_extract", "emoji_inline",
                "punctuation", "assemble"};
    CHECK(stages == expected);

    CHECK(preprocess("hello", test_config(), test_bundle()).stage_timings.empty());

    // empty input still reports its (near-zero) stages
    msg = preprocess_with_report("", test_config(), test_bundle());
    CHECK_FALSE(msg.stage_timings.empty());
    CHECK(msg.tts_text.empty());
}

TEST_CASE("determinism") {
    for (const char* s : {"Yesss!!!! It's holiday today \U0001F973\U0001F973",
                          "My phone number is 9321673878"}) {
        CHECK(tts(s) == tts(s));
    }
}
