#include "lip/assets.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lip/errors.hpp"
#include "lip/segmentation.hpp"
#include "lip/utf8.hpp"

namespace lip {

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LoadError("missing asset file: " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw LoadError("malformed JSON in " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw LoadError(path.string() + " must hold a JSON object");
    }
    return doc;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LoadError("missing asset file: " + path.string());
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        lines.push_back(line);
    }
    return lines;
}

bool is_lower_alpha_phrase(std::string_view s) {
    if (s.empty() || s.front() == ' ' || s.back() == ' ') {
        return false;
    }
    for (char c : s) {
        if (!((c >= 'a' && c <= 'z') || c == ' ')) {
            return false;
        }
    }
    return true;
}

bool is_lower_alnum_word(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) {
            return false;
        }
    }
    return true;
}

bool contains_skin_tone(std::string_view grapheme) {
    std::size_t i = 0;
    while (i < grapheme.size()) {
        utf8::Decoded d = utf8::decode(grapheme, i);
        if (d.valid && is_skin_tone_modifier(d.cp)) {
            return true;
        }
        i += d.size;
    }
    return false;
}

void check_clean(const ProfanityMatcher& matcher, std::string_view value, const std::string& where) {
    if (matcher.contains_match(value)) {
        throw ValidationError(where + " \"" + std::string(value) +
                              "\" collides with the profanity list (fixed-point violation)");
    }
}

std::uint64_t file_bytes(const std::filesystem::path& path) {
    std::error_code ec;
    auto size = std::filesystem::file_size(path, ec);
    return ec ? 0 : static_cast<std::uint64_t>(size);
}

}  // namespace

AssetBundle load_assets(const std::filesystem::path& dir) {
    AssetBundle bundle;

    const auto emoji_path = dir / "emoji_meta.json";
    const auto contractions_path = dir / "contractions.json";
    const auto collapsed_path = dir / "collapsed_words.json";
    const auto wordlist_path = dir / "wordlist.txt";
    const auto profanity_path = dir / "profanity.txt";
    const auto punctuation_path = dir / "punctuation_names.json";

    // Profanity first: the other tables are audited against it.
    bundle.profanity_matcher = ProfanityMatcher::compile(read_lines(profanity_path));
    if (bundle.profanity_matcher.matches_word("beep")) {
        throw ValidationError("profanity list must not contain \"beep\"");
    }

    for (const std::string& word : read_lines(wordlist_path)) {
        if (!is_lower_alnum_word(word)) {
            throw ValidationError("wordlist entry \"" + word + "\" must be lowercase");
        }
        bundle.word_list.insert(word);
    }

    json emoji_doc = read_json(emoji_path);
    for (const auto& [raw_key, value] : emoji_doc.items()) {
        std::string key = emoji_lookup_key(raw_key);
        if (key.empty()) {
            throw ValidationError("emoji entry \"" + raw_key + "\" is empty after canonicalization");
        }
        if (contains_skin_tone(raw_key)) {
            throw ValidationError("emoji entry \"" + raw_key +
                                  "\" carries a skin-tone modifier; store the neutral form");
        }
        if (!value.is_object()) {
            throw ValidationError("emoji entry \"" + raw_key + "\" must map to an object");
        }
        EmojiRecord record;
        record.key = key;
        record.name = value.value("name", std::string());
        record.popularity = value.value("rank", 0);
        record.informational = value.value("informational", false);
        record.word = value.value("word", std::string());
        if (!is_lower_alpha_phrase(record.name)) {
            throw ValidationError("emoji name for \"" + raw_key +
                                  "\" must be lowercase letters and spaces");
        }
        if (record.popularity < 0) {
            throw ValidationError("emoji rank for \"" + raw_key + "\" must be non-negative");
        }
        if (record.informational && !is_lower_alpha_phrase(record.word)) {
            throw ValidationError("informational emoji \"" + raw_key +
                                  "\" needs a lowercase verbalization word");
        }
        check_clean(bundle.profanity_matcher, record.name, "emoji name");
        if (!record.word.empty()) {
            check_clean(bundle.profanity_matcher, record.word, "emoji word");
        }
        if (!bundle.emoji_table.emplace(key, std::move(record)).second) {
            throw ValidationError("duplicate emoji entry \"" + raw_key + "\"");
        }
    }

    json contractions_doc = read_json(contractions_path);
    for (const auto& [key, value] : contractions_doc.items()) {
        if (!is_lower_alnum_word(key)) {
            throw ValidationError("contraction key \"" + key + "\" must be lowercase alphanumeric");
        }
        if (!value.is_string() || !is_lower_alpha_phrase(value.get<std::string>())) {
            throw ValidationError("contraction value for \"" + key +
                                  "\" must be lowercase letters and spaces");
        }
        std::string expansion = value.get<std::string>();
        check_clean(bundle.profanity_matcher, expansion, "contraction value");
        bundle.contractions.emplace(key, std::move(expansion));
    }

    json collapsed_doc = read_json(collapsed_path);
    for (const auto& [key, value] : collapsed_doc.items()) {
        if (!is_lower_alnum_word(key)) {
            throw ValidationError("collapsed_words key \"" + key +
                                  "\" must be lowercase alphanumeric");
        }
        if (!value.is_string() || !is_lower_alpha_phrase(value.get<std::string>())) {
            throw ValidationError("collapsed_words value for \"" + key +
                                  "\" must be lowercase letters and spaces");
        }
        std::string canonical = value.get<std::string>();
        check_clean(bundle.profanity_matcher, canonical, "collapsed_words value");
        bundle.collapsed_words.emplace(key, std::move(canonical));
    }

    json punctuation_doc = read_json(punctuation_path);
    for (const auto& [key, value] : punctuation_doc.items()) {
        if (key.empty()) {
            throw ValidationError("punctuation_names has an empty key");
        }
        if (!value.is_string() || !is_lower_alpha_phrase(value.get<std::string>())) {
            throw ValidationError("punctuation name for \"" + key +
                                  "\" must be lowercase letters and spaces");
        }
        std::string name = value.get<std::string>();
        check_clean(bundle.profanity_matcher, name, "punctuation name");
        bundle.punctuation_names.emplace(key, std::move(name));
    }

    bundle.footprint_breakdown = {
        {"emoji_meta.json", file_bytes(emoji_path)},
        {"contractions.json", file_bytes(contractions_path)},
        {"collapsed_words.json", file_bytes(collapsed_path)},
        {"wordlist.txt", file_bytes(wordlist_path)},
        {"profanity.txt", file_bytes(profanity_path)},
        {"punctuation_names.json", file_bytes(punctuation_path)},
    };
    bundle.footprint_bytes = 0;
    for (const auto& [_, bytes] : bundle.footprint_breakdown) {
        bundle.footprint_bytes += bytes;
    }
    return bundle;
}

std::uint64_t asset_footprint(const AssetBundle& bundle) {
    return bundle.footprint_bytes;
}

std::string AssetBundle::canonical_digest() const {
    std::ostringstream out;

    std::map<std::string, const EmojiRecord*> emoji_sorted;
    for (const auto& [key, record] : emoji_table) {
        emoji_sorted.emplace(key, &record);
    }
    out << "emoji\n";
    for (const auto& [key, record] : emoji_sorted) {
        out << key << '\t' << record->name << '\t' << record->popularity << '\t'
            << record->informational << '\t' << record->word << '\n';
    }

    auto dump_map = [&out](const char* title,
                           const std::unordered_map<std::string, std::string>& table) {
        std::map<std::string, std::string> sorted(table.begin(), table.end());
        out << title << '\n';
        for (const auto& [k, v] : sorted) {
            out << k << '\t' << v << '\n';
        }
    };
    dump_map("contractions", contractions);
    dump_map("collapsed_words", collapsed_words);

    std::vector<std::string> words(word_list.begin(), word_list.end());
    std::sort(words.begin(), words.end());
    out << "words\n";
    for (const auto& w : words) {
        out << w << '\n';
    }

    out << "profanity\n" << profanity_matcher.pattern() << '\n';

    out << "punctuation\n";
    for (const auto& [k, v] : punctuation_names) {
        out << k << '\t' << v << '\n';
    }
    return out.str();
}

std::uint64_t AssetBundle::resident_estimate_bytes() const {
    // Container bookkeeping estimates; close enough for the footprint report.
    constexpr std::uint64_t kNodeOverhead = 64;
    std::uint64_t total = sizeof(AssetBundle);
    for (const auto& [key, record] : emoji_table) {
        total += kNodeOverhead + key.capacity() + record.key.capacity() +
                 record.name.capacity() + record.word.capacity() + sizeof(EmojiRecord);
    }
    for (const auto& [k, v] : contractions) {
        total += kNodeOverhead + k.capacity() + v.capacity();
    }
    for (const auto& [k, v] : collapsed_words) {
        total += kNodeOverhead + k.capacity() + v.capacity();
    }
    for (const auto& w : word_list) {
        total += kNodeOverhead + w.capacity();
    }
    for (const auto& [k, v] : punctuation_names) {
        total += kNodeOverhead + k.capacity() + v.capacity();
    }
    total += profanity_matcher.pattern().capacity() * 3;
    return total;
}

}  // namespace lip
