#include <doctest.h>

#include "lip/utf8.hpp"

using namespace lip;

TEST_CASE("decode round-trips valid sequences") {
    std::string s = "aé中\U0001F600";
    auto cps = utf8::decode_all(s);
    REQUIRE(cps.size() == 4);
    CHECK(cps[0] == U'a');
    CHECK(cps[1] == 0xE9);
    CHECK(cps[2] == 0x4E2D);
    CHECK(cps[3] == 0x1F600);
    CHECK(utf8::encode_all(cps) == s);
}

TEST_CASE("invalid bytes decode as single raw bytes") {
    std::string s = "a\xFF\x80z";
    std::size_t i = 0;
    std::string rebuilt;
    while (i < s.size()) {
        auto d = utf8::decode(s, i);
        if (d.valid) {
            utf8::encode(d.cp, rebuilt);
        } else {
            rebuilt.push_back(s[i]);
        }
        i += d.size;
    }
    CHECK(rebuilt == s);
}

TEST_CASE("truncated multibyte at end of string") {
    std::string s = "\xF0\x9F";  // first half of a 4-byte emoji
    auto d = utf8::decode(s, 0);
    CHECK_FALSE(d.valid);
    CHECK(d.size == 1);
}

TEST_CASE("lowercase maps letters only") {
    CHECK(utf8::lowercase("Yesss!!!!") == "yesss!!!!");
    CHECK(utf8::lowercase("") == "");
    CHECK(utf8::lowercase("ABC123\U0001F604") == "abc123\U0001F604");
    CHECK(utf8::lowercase("ÉTÉ") == "été");   // ÉTÉ -> été
    CHECK(utf8::lowercase("Ж") == "ж");                 // Cyrillic Zhe
}

TEST_CASE("overlong encodings are rejected") {
    std::string overlong = "\xC0\xAF";  // '/' encoded in two bytes
    auto d = utf8::decode(overlong, 0);
    CHECK_FALSE(d.valid);
}
