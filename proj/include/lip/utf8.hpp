#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lip::utf8 {

struct Decoded {
    char32_t cp = 0;
    std::size_t size = 1;
    bool valid = false;
};

// Decodes the codepoint starting at byte offset i. An invalid or truncated
// sequence decodes as a single raw byte so that callers never lose data.
Decoded decode(std::string_view s, std::size_t i);

void encode(char32_t cp, std::string& out);
std::string encode(char32_t cp);

std::vector<char32_t> decode_all(std::string_view s);
std::string encode_all(const std::vector<char32_t>& cps);

// Simple (non-locale, one-to-one) lowercase mapping. Covers ASCII, Latin-1,
// Latin Extended-A, Greek and Cyrillic; everything else passes through.
char32_t to_lower(char32_t cp);
std::string lowercase(std::string_view s);

bool is_ascii_alnum(char32_t cp);
bool is_whitespace(char32_t cp);

}  // namespace lip::utf8
