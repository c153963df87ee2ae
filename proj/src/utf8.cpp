#include "lip/utf8.hpp"

namespace lip::utf8 {

namespace {

bool is_continuation(unsigned char b) {
    return (b & 0xC0) == 0x80;
}

}  // namespace

Decoded decode(std::string_view s, std::size_t i) {
    Decoded d;
    if (i >= s.size()) {
        return d;
    }
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        return {b0, 1, true};
    }
    if ((b0 >> 5) == 0x6) {
        if (i + 1 < s.size() && is_continuation(s[i + 1])) {
            char32_t cp = (b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
            if (cp >= 0x80) {
                return {cp, 2, true};
            }
        }
    } else if ((b0 >> 4) == 0xE) {
        if (i + 2 < s.size() && is_continuation(s[i + 1]) && is_continuation(s[i + 2])) {
            char32_t cp = (b0 & 0x0Fu) << 12 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                          (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
            if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) {
                return {cp, 3, true};
            }
        }
    } else if ((b0 >> 3) == 0x1E) {
        if (i + 3 < s.size() && is_continuation(s[i + 1]) && is_continuation(s[i + 2]) &&
            is_continuation(s[i + 3])) {
            char32_t cp = (b0 & 0x07u) << 18 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                          (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                          (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
            if (cp >= 0x10000 && cp <= 0x10FFFF) {
                return {cp, 4, true};
            }
        }
    }
    // Raw byte fallback; cp carries the byte value, size 1, valid false.
    return {b0, 1, false};
}

void encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(char32_t cp) {
    std::string out;
    encode(cp, out);
    return out;
}

std::vector<char32_t> decode_all(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        Decoded d = decode(s, i);
        cps.push_back(d.cp);
        i += d.size;
    }
    return cps;
}

std::string encode_all(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        encode(cp, out);
    }
    return out;
}

char32_t to_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') {
        return cp + 0x20;
    }
    // Latin-1 supplement, excluding the multiplication sign.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) {
        return cp + 0x20;
    }
    // Latin Extended-A: mostly even/odd upper/lower pairs.
    if (cp >= 0x100 && cp <= 0x137 && (cp % 2) == 0) {
        return cp + 1;
    }
    if (cp >= 0x139 && cp <= 0x148 && (cp % 2) == 1) {
        return cp + 1;
    }
    if (cp >= 0x14A && cp <= 0x177 && (cp % 2) == 0) {
        return cp + 1;
    }
    if (cp == 0x178) {
        return 0xFF;  // Y with diaeresis
    }
    if (cp >= 0x179 && cp <= 0x17E && (cp % 2) == 1) {
        return cp + 1;
    }
    // Greek capitals.
    if (cp >= 0x391 && cp <= 0x3A1) {
        return cp + 0x20;
    }
    if (cp >= 0x3A3 && cp <= 0x3AB) {
        return cp + 0x20;
    }
    // Cyrillic.
    if (cp >= 0x410 && cp <= 0x42F) {
        return cp + 0x20;
    }
    if (cp >= 0x400 && cp <= 0x40F) {
        return cp + 0x50;
    }
    return cp;
}

std::string lowercase(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        Decoded d = decode(s, i);
        if (!d.valid) {
            out.push_back(s[i]);  // preserve raw byte exactly
        } else {
            encode(to_lower(d.cp), out);
        }
        i += d.size;
    }
    return out;
}

bool is_ascii_alnum(char32_t cp) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') || (cp >= U'0' && cp <= U'9');
}

bool is_whitespace(char32_t cp) {
    if (cp == U' ' || (cp >= 0x09 && cp <= 0x0D)) {
        return true;
    }
    switch (cp) {
        case 0x85:
        case 0xA0:
        case 0x1680:
        case 0x2028:
        case 0x2029:
        case 0x202F:
        case 0x205F:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

}  // namespace lip::utf8
