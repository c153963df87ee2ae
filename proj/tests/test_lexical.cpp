#include <doctest.h>

#include <algorithm>

#include "lip/lexical.hpp"
#include "test_support.hpp"

using namespace lip;

namespace {

// Character-scan oracle: emit each char only when it differs from its
// predecessor.
std::string collapse_oracle(const std::string& token) {
    std::string out;
    char prev = 0;
    bool first = true;
    for (char c : token) {
        if (first || c != prev) {
            out += c;
        }
        prev = c;
        first = false;
    }
    return out;
}

}  // namespace

TEST_CASE("collapse_full examples") {
    CHECK(collapse_full("yesss") == "yes");
    CHECK(collapse_full("abc") == "abc");
    CHECK(collapse_full("messsaaageee") == "mesage");
}

TEST_CASE("collapse_full matches the scan oracle") {
    for (const char* t : {"aaa", "aabbaa", "x", "", "zzzzzzz", "banana", "mississippi"}) {
        CHECK(collapse_full(t) == collapse_oracle(t));
    }
}

TEST_CASE("candidate_forms enumerates double-then-single, left to right") {
    CHECK(candidate_forms("yesss") == std::vector<std::string>{"yess", "yes"});
    CHECK(candidate_forms("abc") == std::vector<std::string>{"abc"});

    auto forms = candidate_forms("messsaaageee");
    CHECK(forms.size() == 8);  // three runs, two choices each
    CHECK(forms.front() == "messaagee");
    CHECK(forms.back() == "mesage");  // ends with the full collapse
    CHECK(std::find(forms.begin(), forms.end(), "message") != forms.end());
}

TEST_CASE("candidate explosion guard") {
    // nine runs of length two
    std::string t = "aabbccddeeffgghhii";
    auto forms = candidate_forms(t);
    CHECK(forms == std::vector<std::string>{"abcdefghi"});
    CHECK(candidate_forms("aabbccddeeffgghh").size() == 256);  // eight runs is still exact
}

TEST_CASE("normalize_token follows the lookup chain") {
    const auto& bundle = test_bundle();
    CHECK(normalize_token("msg", bundle) == "message");
    CHECK(normalize_token("message", bundle) == "message");
    CHECK(normalize_token("messsaaageee", bundle) == "message");
    CHECK(normalize_token("2day", bundle) == "today");
    CHECK(normalize_token("yesss", bundle) == "yes");
    CHECK(normalize_token("guuuud", bundle) == "good");   // collapsed_words fallback
    CHECK(normalize_token("plsss", bundle) == "please");  // collapse hits a contraction
    CHECK(normalize_token("qwzx", bundle) == "qwzx");     // unknown tokens pass through
}

TEST_CASE("normalize_token is idempotent over the dictionaries") {
    const auto& bundle = test_bundle();
    for (const auto& [key, value] : bundle.contractions) {
        std::size_t start = 0;
        while (start <= value.size()) {
            auto space = value.find(' ', start);
            std::string word = space == std::string::npos ? value.substr(start)
                                                          : value.substr(start, space - start);
            if (!word.empty()) {
                REQUIRE(normalize_token(word, bundle) == word);
            }
            if (space == std::string::npos) {
                break;
            }
            start = space + 1;
        }
    }
    for (const auto& [key, value] : bundle.collapsed_words) {
        std::size_t start = 0;
        while (start <= value.size()) {
            auto space = value.find(' ', start);
            std::string word = space == std::string::npos ? value.substr(start)
                                                          : value.substr(start, space - start);
            if (!word.empty()) {
                REQUIRE(normalize_token(word, bundle) == word);
            }
            if (space == std::string::npos) {
                break;
            }
            start = space + 1;
        }
    }
}

TEST_CASE("word list members map to themselves") {
    const auto& bundle = test_bundle();
    for (const auto& word : bundle.word_list) {
        if (bundle.contractions.count(word)) {
            continue;  // explicit contraction entries win by design
        }
        REQUIRE(normalize_token(word, bundle) == word);
    }
}

TEST_CASE("normalize_text expands chat shorthand") {
    const auto& bundle = test_bundle();
    std::vector<std::string> in = {"i", "hv", "sent", "u", "a", "msg", "on", "fb"};
    std::vector<std::string> want = {"i", "have", "sent", "you", "a", "message", "on", "facebook"};
    CHECK(normalize_text(in, bundle) == want);

    in = {"plz", "chk", "it", "n", "let", "me", "knw"};
    want = {"please", "check", "it", "and", "let", "me", "know"};
    CHECK(normalize_text(in, bundle) == want);

    CHECK(normalize_text({}, bundle).empty());
}

TEST_CASE("normalize_text keeps affixes and skips entity-bearing tokens") {
    const auto& bundle = test_bundle();
    CHECK(normalize_text({"fb,"}, bundle) == std::vector<std::string>{"facebook,"});
    CHECK(normalize_text({"yesss!!!!"}, bundle) == std::vector<std::string>{"yes!!!!"});
    CHECK(normalize_text({"mohan@gmail.com"}, bundle) ==
          std::vector<std::string>{"mohan@gmail.com"});
    CHECK(normalize_text({"it's"}, bundle) == std::vector<std::string>{"it's"});
    CHECK(normalize_text({"brb!"}, bundle) ==
          std::vector<std::string>{"be", "right", "back!"});
}
