#include "lip/profanity.hpp"

#include <algorithm>

#include "lip/errors.hpp"

namespace lip {

namespace {

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

ProfanityMatcher ProfanityMatcher::compile(const std::vector<std::string>& words) {
    ProfanityMatcher m;
    m.words_ = words;
    for (const auto& w : m.words_) {
        if (w.empty()) {
            throw ValidationError("profanity entry is empty");
        }
        for (char c : w) {
            if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) {
                throw ValidationError("profanity entry \"" + w +
                                      "\" must be lowercase letters or digits with no whitespace");
            }
        }
    }
    std::sort(m.words_.begin(), m.words_.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a < b;
    });
    m.words_.erase(std::unique(m.words_.begin(), m.words_.end()), m.words_.end());
    for (std::size_t i = 0; i < m.words_.size(); ++i) {
        if (i) {
            m.pattern_ += '|';
        }
        m.pattern_ += m.words_[i];
    }
    m.set_.insert(m.words_.begin(), m.words_.end());
    return m;
}

bool ProfanityMatcher::matches_word(std::string_view word) const {
    return set_.count(std::string(word)) > 0;
}

bool ProfanityMatcher::contains_match(std::string_view text) const {
    if (set_.empty()) {
        return false;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_word_char(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && is_word_char(text[j])) {
            ++j;
        }
        if (matches_word(text.substr(i, j - i))) {
            return true;
        }
        i = j;
    }
    return false;
}

std::string censor(std::string_view text, const ProfanityMatcher& matcher) {
    if (matcher.empty()) {
        return std::string(text);
    }
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_word_char(text[i])) {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && is_word_char(text[j])) {
            ++j;
        }
        std::string_view word = text.substr(i, j - i);
        if (matcher.matches_word(word)) {
            out += "beep";
        } else {
            out += word;
        }
        i = j;
    }
    return out;
}

}  // namespace lip
