#include "lip/emoji.hpp"

#include <algorithm>
#include <unordered_map>

namespace lip {

EmojiExtraction extract_emojis(const std::vector<ClassifiedGrapheme>& classified) {
    EmojiExtraction result;
    result.body.reserve(classified.size());

    std::unordered_map<std::string, std::size_t> index_by_key;
    for (std::size_t pos = 0; pos < classified.size(); ++pos) {
        const ClassifiedGrapheme& cg = classified[pos];
        if (cg.cls != GraphemeClass::Emoji) {
            result.body.push_back(cg);
            continue;
        }
        std::string key = emoji_lookup_key(cg.grapheme.text);
        if (key.empty()) {
            continue;  // lone tone modifier, nothing left after stripping
        }
        auto it = index_by_key.find(key);
        if (it == index_by_key.end()) {
            EmojiOccurrence occ;
            occ.record = *cg.emoji;
            occ.first_position = pos;
            occ.count = 1;
            index_by_key.emplace(std::move(key), result.occurrences.size());
            result.occurrences.push_back(std::move(occ));
        } else {
            ++result.occurrences[it->second].count;
        }
    }
    return result;
}

std::vector<EmojiOccurrence> rank_emojis(std::vector<EmojiOccurrence> occurrences) {
    std::stable_sort(occurrences.begin(), occurrences.end(),
                     [](const EmojiOccurrence& a, const EmojiOccurrence& b) {
                         if (a.record.popularity != b.record.popularity) {
                             return a.record.popularity > b.record.popularity;
                         }
                         if (a.record.name != b.record.name) {
                             return a.record.name < b.record.name;
                         }
                         return a.record.key < b.record.key;
                     });
    return occurrences;
}

EmojiTrailer build_trailer(const std::vector<EmojiOccurrence>& ranked, bool has_body_text,
                           bool allow_spamming) {
    EmojiTrailer trailer;
    std::size_t keep = allow_spamming ? ranked.size() : std::min<std::size_t>(3, ranked.size());
    for (std::size_t i = 0; i < keep; ++i) {
        trailer.named.push_back(ranked[i].record.name);
    }
    trailer.suppressed_count = static_cast<int>(ranked.size() - keep);

    if (trailer.named.empty()) {
        return trailer;
    }
    std::string phrase;
    for (const std::string& name : trailer.named) {
        if (!phrase.empty()) {
            phrase += ' ';
        }
        phrase += name;
        phrase += " emoji";
    }
    if (trailer.suppressed_count > 0) {
        phrase += " and some other emojis";
    }
    if (has_body_text) {
        phrase = "with " + phrase;
    }
    trailer.phrase = std::move(phrase);
    return trailer;
}

std::vector<ClassifiedGrapheme> inline_informational(const std::vector<ClassifiedGrapheme>& body) {
    std::vector<ClassifiedGrapheme> out;
    out.reserve(body.size());

    auto push_synthetic = [&out](char c, GraphemeClass cls) {
        ClassifiedGrapheme cg;
        cg.grapheme.text.assign(1, c);
        cg.cls = cls;
        out.push_back(std::move(cg));
    };

    for (const ClassifiedGrapheme& cg : body) {
        if (cg.cls != GraphemeClass::InformationalEmoji) {
            out.push_back(cg);
            continue;
        }
        push_synthetic(' ', GraphemeClass::Whitespace);
        for (char c : cg.emoji->word) {
            if (c == ' ') {
                push_synthetic(' ', GraphemeClass::Whitespace);
            } else {
                push_synthetic(c, GraphemeClass::Text);
            }
        }
        push_synthetic(' ', GraphemeClass::Whitespace);
    }
    return out;
}

}  // namespace lip
