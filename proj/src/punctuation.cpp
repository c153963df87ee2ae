#include "lip/punctuation.hpp"

#include "lip/segmentation.hpp"
#include "lip/utf8.hpp"

namespace lip {

std::string strip_punctuation(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    bool last_question = false;

    auto push = [&](char c) {
        if (pending_space && !out.empty()) {
            out += ' ';
        }
        pending_space = false;
        out += c;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        utf8::Decoded d = utf8::decode(text, i);
        i += d.size;
        char32_t cp = d.valid ? d.cp : 0xFFFD;

        if (cp >= U'a' && cp <= U'z') {
            push(static_cast<char>(cp));
            last_question = false;
        } else if (cp >= U'0' && cp <= U'9') {
            push(static_cast<char>(cp));
            last_question = false;
        } else if (cp == U'?') {
            if (!last_question) {
                push('?');
                last_question = true;
            }
        } else if (cp == U'\'' || cp == 0x2019) {
            // apostrophes join their neighbors: "it's" -> "its"
        } else if (utf8::is_whitespace(cp)) {
            pending_space = !out.empty();
            last_question = false;
        } else if (d.valid && is_letter_or_digit(cp)) {
            // non-ASCII letters have no speakable ASCII form; drop silently
            last_question = false;
        } else {
            // every other mark separates words ("twenty-one" -> "twenty one")
            pending_space = !out.empty();
            last_question = false;
        }
    }
    return out;
}

PunctuationReadout punctuation_readout(std::string_view text, const AssetBundle& bundle,
                                       bool allow_spamming) {
    PunctuationReadout readout;

    std::vector<Grapheme> graphemes = segment(text);
    std::vector<ClassifiedGrapheme> classified = classify(graphemes, bundle);

    std::vector<std::string> marks;  // distinct, first-appearance order
    for (const auto& cg : classified) {
        if (cg.cls != GraphemeClass::Punctuation) {
            continue;
        }
        bool seen = false;
        for (const auto& m : marks) {
            seen = seen || m == cg.grapheme.text;
        }
        if (!seen) {
            marks.push_back(cg.grapheme.text);
        }
    }

    const std::size_t limit = allow_spamming ? marks.size() : 2;
    for (const auto& mark : marks) {
        auto it = bundle.punctuation_names.find(mark);
        if (it == bundle.punctuation_names.end()) {
            ++readout.suppressed_count;
            continue;
        }
        if (readout.named.size() < limit) {
            readout.named.push_back(it->second);
        } else {
            ++readout.suppressed_count;
        }
    }

    std::string phrase;
    for (const auto& name : readout.named) {
        if (!phrase.empty()) {
            phrase += ' ';
        }
        phrase += name;
    }
    if (readout.suppressed_count > 0) {
        if (!phrase.empty()) {
            phrase += ' ';
        }
        phrase += "and some other punctuations";
    }
    readout.phrase = std::move(phrase);
    return readout;
}

}  // namespace lip
