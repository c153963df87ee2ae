#include "lip/segmentation.hpp"

#include "lip/utf8.hpp"

namespace lip {

namespace {

constexpr char32_t kZwj = 0x200D;
constexpr char32_t kKeycapCombiner = 0x20E3;

bool is_variation_selector(char32_t cp) {
    return cp >= 0xFE00 && cp <= 0xFE0F;
}

bool is_regional_indicator(char32_t cp) {
    return cp >= 0x1F1E6 && cp <= 0x1F1FF;
}

// Broad Extended_Pictographic approximation, used only for cluster joining
// (ZWJ sequences like heart-on-fire start outside the F plane).
bool is_ext_pictographic(char32_t cp) {
    if (cp >= 0x1F000 && cp <= 0x1FBFF) {
        return !is_regional_indicator(cp) && !is_skin_tone_modifier(cp);
    }
    switch (cp) {
        case 0xA9:
        case 0xAE:
        case 0x203C:
        case 0x2049:
        case 0x2122:
        case 0x2139:
        case 0x3030:
        case 0x303D:
        case 0x3297:
        case 0x3299:
            return true;
        default:
            break;
    }
    return (cp >= 0x2190 && cp <= 0x21FF) || (cp >= 0x2300 && cp <= 0x23FF) ||
           (cp >= 0x24C2 && cp <= 0x24C2) || (cp >= 0x25A0 && cp <= 0x25FF) ||
           (cp >= 0x2600 && cp <= 0x27BF) || (cp >= 0x2900 && cp <= 0x297F) ||
           (cp >= 0x2B00 && cp <= 0x2BFF);
}

// Grapheme-extending codepoints: combining marks, variation selectors,
// the keycap combiner, skin tones and tag characters.
bool is_extend(char32_t cp) {
    if (is_variation_selector(cp) || is_skin_tone_modifier(cp)) {
        return true;
    }
    if ((cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF) ||
        (cp >= 0x1DC0 && cp <= 0x1DFF) || (cp >= 0x20D0 && cp <= 0x20FF) ||
        (cp >= 0xFE20 && cp <= 0xFE2F)) {
        return true;
    }
    if (cp == 0x200C) {  // zero width non-joiner
        return true;
    }
    return cp == 0xE0001 || (cp >= 0xE0020 && cp <= 0xE007F);
}

// Hangul syllable types for the L/V/T jamo rules.
enum class Hangul { None, L, V, T, LV, LVT };

Hangul hangul_type(char32_t cp) {
    if ((cp >= 0x1100 && cp <= 0x115F) || (cp >= 0xA960 && cp <= 0xA97C)) {
        return Hangul::L;
    }
    if ((cp >= 0x1160 && cp <= 0x11A7) || (cp >= 0xD7B0 && cp <= 0xD7C6)) {
        return Hangul::V;
    }
    if ((cp >= 0x11A8 && cp <= 0x11FF) || (cp >= 0xD7CB && cp <= 0xD7FB)) {
        return Hangul::T;
    }
    if (cp >= 0xAC00 && cp <= 0xD7A3) {
        return (cp - 0xAC00) % 28 == 0 ? Hangul::LV : Hangul::LVT;
    }
    return Hangul::None;
}

struct Cp {
    char32_t cp;
    std::size_t offset;
    std::size_t size;
    bool valid;
};

// Decides whether a grapheme boundary exists between prev and next.
// prev_pictographic_zwj: prev sequence is <pictographic> Extend* ZWJ.
// ri_run: consecutive regional indicators ending at prev; pairs stay joined.
bool is_break(const Cp& prev, const Cp& next, bool prev_pictographic_zwj, int ri_run) {
    // Invalid bytes always stand alone.
    if (!prev.valid || !next.valid) {
        return true;
    }
    char32_t a = prev.cp;
    char32_t b = next.cp;
    if (a == U'\r' && b == U'\n') {
        return false;
    }
    if (a == U'\r' || a == U'\n' || b == U'\r' || b == U'\n') {
        return true;
    }
    if (is_extend(b) || b == kZwj) {
        return false;
    }
    Hangul ha = hangul_type(a);
    Hangul hb = hangul_type(b);
    if (ha == Hangul::L &&
        (hb == Hangul::L || hb == Hangul::V || hb == Hangul::LV || hb == Hangul::LVT)) {
        return false;
    }
    if ((ha == Hangul::LV || ha == Hangul::V) && (hb == Hangul::V || hb == Hangul::T)) {
        return false;
    }
    if ((ha == Hangul::LVT || ha == Hangul::T) && hb == Hangul::T) {
        return false;
    }
    if (a == kZwj && is_ext_pictographic(b) && prev_pictographic_zwj) {
        return false;
    }
    if (is_regional_indicator(a) && is_regional_indicator(b) && (ri_run % 2) == 1) {
        return false;
    }
    return true;
}

const EmojiRecord* table_lookup(const AssetBundle& bundle, const std::string& key) {
    auto it = bundle.emoji_table.find(key);
    return it == bundle.emoji_table.end() ? nullptr : &it->second;
}

// A grapheme renders as emoji if any codepoint is pictographic, it is a
// keycap or flag sequence, or it is a lone tone modifier. Plain dingbat-range
// symbols that are not in the table do not count; they read as punctuation.
bool looks_like_emoji(const std::vector<char32_t>& cps) {
    for (char32_t cp : cps) {
        if (is_fallback_emoji_range(cp) || is_regional_indicator(cp) ||
            is_skin_tone_modifier(cp) || cp == kKeycapCombiner) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_skin_tone_modifier(char32_t cp) {
    return cp >= 0x1F3FB && cp <= 0x1F3FF;
}

bool is_fallback_emoji_range(char32_t cp) {
    return cp >= 0x1F000 && cp <= 0x1FBFF && !is_regional_indicator(cp) &&
           !is_skin_tone_modifier(cp);
}

bool is_letter_or_digit(char32_t cp) {
    if (utf8::is_ascii_alnum(cp)) {
        return true;
    }
    if (cp < 0x80) {
        return false;
    }
    // Coarse letter ranges for the major scripts; symbol and punctuation
    // blocks are excluded.
    if ((cp >= 0xC0 && cp <= 0x2AF && cp != 0xD7 && cp != 0xF7) ||
        (cp >= 0x370 && cp <= 0x3FF && cp != 0x374 && cp != 0x375 && cp != 0x37E) ||
        (cp >= 0x400 && cp <= 0x52F) || (cp >= 0x530 && cp <= 0x58F) ||
        (cp >= 0x5D0 && cp <= 0x5EA) || (cp >= 0x620 && cp <= 0x64A) ||
        (cp >= 0x660 && cp <= 0x669) || (cp >= 0x900 && cp <= 0x97F) ||
        (cp >= 0x980 && cp <= 0x9FF) || (cp >= 0xA00 && cp <= 0xAFF) ||
        (cp >= 0xB00 && cp <= 0xBFF) || (cp >= 0xC00 && cp <= 0xCFF) ||
        (cp >= 0xD00 && cp <= 0xD7F) || (cp >= 0xE00 && cp <= 0xE5B) ||
        (cp >= 0x10A0 && cp <= 0x10FF) || (cp >= 0x3040 && cp <= 0x30FF && cp != 0x3099) ||
        (cp >= 0x3400 && cp <= 0x4DBF) || (cp >= 0x4E00 && cp <= 0x9FFF) ||
        (cp >= 0xAC00 && cp <= 0xD7A3) || (cp >= 0x1E00 && cp <= 0x1FFF)) {
        return true;
    }
    return false;
}

std::string lowercase(std::string_view text) {
    return utf8::lowercase(text);
}

std::vector<Grapheme> segment(std::string_view text) {
    std::vector<Grapheme> out;
    if (text.empty()) {
        return out;
    }

    // Decode once, keeping offsets.
    std::vector<Cp> cps;
    cps.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        utf8::Decoded d = utf8::decode(text, i);
        cps.push_back({d.cp, i, d.size, d.valid});
        i += d.size;
    }

    std::size_t start = 0;  // index into cps
    bool pictographic_zwj = cps[0].valid && is_ext_pictographic(cps[0].cp);
    int ri_run = (cps[0].valid && is_regional_indicator(cps[0].cp)) ? 1 : 0;

    auto flush = [&](std::size_t end_idx) {
        std::size_t b = cps[start].offset;
        std::size_t e = cps[end_idx - 1].offset + cps[end_idx - 1].size;
        out.push_back({std::string(text.substr(b, e - b)), b, e});
        start = end_idx;
    };

    for (std::size_t k = 1; k < cps.size(); ++k) {
        const Cp& prev = cps[k - 1];
        const Cp& next = cps[k];
        if (is_break(prev, next, pictographic_zwj, ri_run)) {
            flush(k);
        }
        // Track the <pictographic> Extend* ZWJ state for GB11.
        if (next.valid && is_ext_pictographic(next.cp)) {
            pictographic_zwj = true;
        } else if (!next.valid || !(is_extend(next.cp) || next.cp == kZwj)) {
            pictographic_zwj = false;
        }
        if (next.valid && is_regional_indicator(next.cp)) {
            ri_run = (start == k) ? 1 : ri_run + 1;
        } else {
            ri_run = 0;
        }
    }
    flush(cps.size());
    return out;
}

Grapheme strip_skin_tone(const Grapheme& g) {
    Grapheme out;
    out.begin = g.begin;
    out.end = g.end;
    std::size_t i = 0;
    while (i < g.text.size()) {
        utf8::Decoded d = utf8::decode(g.text, i);
        if (!(d.valid && is_skin_tone_modifier(d.cp))) {
            out.text.append(g.text, i, d.size);
        }
        i += d.size;
    }
    return out;
}

std::string emoji_lookup_key(std::string_view grapheme) {
    std::string key;
    key.reserve(grapheme.size());
    std::size_t i = 0;
    while (i < grapheme.size()) {
        utf8::Decoded d = utf8::decode(grapheme, i);
        if (!(d.valid && (is_skin_tone_modifier(d.cp) || is_variation_selector(d.cp)))) {
            key.append(grapheme, i, d.size);
        }
        i += d.size;
    }
    return key;
}

std::vector<ClassifiedGrapheme> classify(const std::vector<Grapheme>& graphemes,
                                         const AssetBundle& bundle) {
    std::vector<ClassifiedGrapheme> out;
    out.reserve(graphemes.size());
    for (const Grapheme& g : graphemes) {
        ClassifiedGrapheme cg;
        cg.grapheme = g;

        std::vector<char32_t> cps = utf8::decode_all(g.text);

        // Fast path: single ASCII codepoint.
        if (cps.size() == 1 && cps[0] < 0x80) {
            char32_t cp = cps[0];
            if (utf8::is_whitespace(cp)) {
                cg.cls = GraphemeClass::Whitespace;
            } else if (utf8::is_ascii_alnum(cp)) {
                cg.cls = GraphemeClass::Text;
            } else {
                cg.cls = GraphemeClass::Punctuation;
            }
            out.push_back(std::move(cg));
            continue;
        }

        std::string key = emoji_lookup_key(g.text);
        const EmojiRecord* rec = key.empty() ? nullptr : table_lookup(bundle, key);
        if (rec) {
            cg.cls = rec->informational ? GraphemeClass::InformationalEmoji : GraphemeClass::Emoji;
            cg.emoji = *rec;
        } else if (looks_like_emoji(cps)) {
            cg.cls = GraphemeClass::Emoji;
            EmojiRecord fallback;
            fallback.key = key;
            fallback.name = "unknown emoji";
            fallback.popularity = 0;
            cg.emoji = std::move(fallback);
        } else {
            bool all_space = true;
            bool any_alnum = false;
            for (char32_t cp : cps) {
                all_space = all_space && utf8::is_whitespace(cp);
                any_alnum = any_alnum || is_letter_or_digit(cp);
            }
            if (all_space) {
                cg.cls = GraphemeClass::Whitespace;
            } else if (any_alnum) {
                cg.cls = GraphemeClass::Text;
            } else {
                cg.cls = GraphemeClass::Punctuation;
            }
        }
        out.push_back(std::move(cg));
    }
    return out;
}

bool has_alphanumeric(const std::vector<ClassifiedGrapheme>& classified) {
    for (const auto& cg : classified) {
        if (cg.cls != GraphemeClass::Text) {
            continue;
        }
        for (char c : cg.grapheme.text) {
            if (utf8::is_ascii_alnum(static_cast<unsigned char>(c))) {
                return true;
            }
        }
    }
    return false;
}

int count_unique_emojis(const std::vector<ClassifiedGrapheme>& classified) {
    std::unordered_set<std::string> seen;
    for (const auto& cg : classified) {
        if (cg.cls != GraphemeClass::Emoji && cg.cls != GraphemeClass::InformationalEmoji) {
            continue;
        }
        std::string key = emoji_lookup_key(cg.grapheme.text);
        if (!key.empty()) {
            seen.insert(key);
        }
    }
    return static_cast<int>(seen.size());
}

}  // namespace lip
