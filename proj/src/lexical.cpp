#include "lip/lexical.hpp"

#include "lip/utf8.hpp"

namespace lip {

namespace {

constexpr std::size_t kMaxRuns = 8;

struct Run {
    char ch;
    std::size_t length;
};

std::vector<Run> split_runs(std::string_view token) {
    std::vector<Run> runs;
    for (char c : token) {
        if (!runs.empty() && runs.back().ch == c) {
            ++runs.back().length;
        } else {
            runs.push_back({c, 1});
        }
    }
    return runs;
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

bool is_ascii_alnum_token(std::string_view token) {
    if (token.empty()) {
        return false;
    }
    for (char c : token) {
        if (!utf8::is_ascii_alnum(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// Punctuation that may wrap a word without changing it: quotes, brackets and
// sentence marks. Entity-significant characters ('@', '#', '$', '%', '+')
// are deliberately absent.
bool is_affix_char(char c) {
    switch (c) {
        case '.':
        case ',':
        case '!':
        case '?':
        case ';':
        case ':':
        case '"':
        case '\'':
        case '(':
        case ')':
        case '[':
        case ']':
        case '{':
        case '}':
            return true;
        default:
            return false;
    }
}

std::vector<std::string> split_words(const std::string& phrase) {
    std::vector<std::string> words;
    std::size_t start = 0;
    while (start <= phrase.size()) {
        auto space = phrase.find(' ', start);
        if (space == std::string::npos) {
            words.push_back(phrase.substr(start));
            break;
        }
        words.push_back(phrase.substr(start, space - start));
        start = space + 1;
    }
    return words;
}

// "heyyy2u" -> "hey 2 you": letter and digit runs normalize independently
// when the token as a whole has no dictionary meaning.
std::string normalize_mixed(std::string_view core, const AssetBundle& bundle) {
    std::string out;
    std::size_t i = 0;
    while (i < core.size()) {
        std::size_t j = i;
        while (j < core.size() && is_digit(core[j]) == is_digit(core[i])) {
            ++j;
        }
        std::string part(core.substr(i, j - i));
        if (!out.empty()) {
            out += ' ';
        }
        out += is_digit(part[0]) ? part : normalize_token(part, bundle);
        i = j;
    }
    return out;
}

}  // namespace

std::string collapse_full(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (char c : token) {
        if (out.empty() || out.back() != c) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> candidate_forms(std::string_view token) {
    std::vector<Run> runs = split_runs(token);
    std::vector<std::size_t> long_runs;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].length >= 2) {
            long_runs.push_back(i);
        }
    }
    if (long_runs.empty()) {
        return {std::string(token)};
    }
    if (long_runs.size() > kMaxRuns) {
        return {collapse_full(token)};
    }

    // Enumerate choices as a bit vector, leftmost run most significant,
    // 0 = keep two, 1 = keep one. Counting upward tries doubles first.
    std::vector<std::string> out;
    const std::size_t total = std::size_t{1} << long_runs.size();
    out.reserve(total);
    for (std::size_t bits = 0; bits < total; ++bits) {
        std::string form;
        form.reserve(token.size());
        std::size_t choice_idx = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            std::size_t keep = runs[i].length;
            if (runs[i].length >= 2) {
                bool single = bits >> (long_runs.size() - 1 - choice_idx) & 1u;
                keep = single ? 1 : 2;
                ++choice_idx;
            }
            form.append(keep, runs[i].ch);
        }
        out.push_back(std::move(form));
    }
    return out;
}

std::string normalize_token(const std::string& token, const AssetBundle& bundle) {
    auto hit = bundle.contractions.find(token);
    if (hit != bundle.contractions.end()) {
        return hit->second;
    }
    for (const std::string& form : candidate_forms(token)) {
        if (bundle.word_list.count(form)) {
            return form;
        }
    }
    std::string collapsed = collapse_full(token);
    auto canon = bundle.collapsed_words.find(collapsed);
    if (canon != bundle.collapsed_words.end()) {
        return canon->second;
    }
    hit = bundle.contractions.find(collapsed);
    if (hit != bundle.contractions.end()) {
        return hit->second;
    }
    return token;
}

std::vector<std::string> normalize_text(const std::vector<std::string>& tokens,
                                        const AssetBundle& bundle) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const std::string& token : tokens) {
        std::size_t lead = 0;
        std::size_t trail = 0;
        while (lead < token.size() && is_affix_char(token[lead])) {
            ++lead;
        }
        while (lead + trail < token.size() && is_affix_char(token[token.size() - 1 - trail])) {
            ++trail;
        }
        std::string_view core(token.data() + lead, token.size() - lead - trail);
        if (!is_ascii_alnum_token(core)) {
            out.push_back(token);
            continue;
        }

        std::string normalized = normalize_token(std::string(core), bundle);
        if (normalized == core) {
            bool has_letter = false;
            bool has_digit = false;
            for (char c : core) {
                has_letter = has_letter || !is_digit(c);
                has_digit = has_digit || is_digit(c);
            }
            if (has_letter && has_digit && !bundle.word_list.count(std::string(core))) {
                normalized = normalize_mixed(core, bundle);
            }
        }
        if (normalized == core) {
            out.push_back(token);
            continue;
        }
        // Expansions may be multiword ("brb" -> "be right back"); splice the
        // words in, keeping any affix punctuation on the outermost ones.
        std::vector<std::string> words = split_words(normalized);
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::string piece = words[i];
            if (i == 0) {
                piece = token.substr(0, lead) + piece;
            }
            if (i + 1 == words.size()) {
                piece += token.substr(token.size() - trail);
            }
            out.push_back(std::move(piece));
        }
    }
    return out;
}

}  // namespace lip
