#include "lip/goldens.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

#include "lip/errors.hpp"
#include "lip/pipeline.hpp"

namespace lip {

std::vector<GoldenCase> load_goldens(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LoadError("cannot open golden fixtures " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw LoadError("malformed JSON in " + path.string() + ": " + e.what());
    }
    if (!doc.is_array()) {
        throw LoadError(path.string() + " must hold a JSON array of cases");
    }
    std::vector<GoldenCase> cases;
    for (const auto& item : doc) {
        GoldenCase c;
        c.id = item.value("id", std::string());
        c.input = item.value("input", std::string());
        c.expected = item.value("expected", std::string());
        if (c.id.empty()) {
            throw ValidationError("golden case without an id in " + path.string());
        }
        if (item.contains("flags")) {
            for (const auto& [key, value] : item.at("flags").items()) {
                c.flags[key] = value.is_boolean() ? (value.get<bool>() ? "true" : "false")
                                                  : value.get<std::string>();
            }
        }
        c.relaxed = item.value("normalization", std::string("relaxed")) != "exact";
        cases.push_back(std::move(c));
    }
    return cases;
}

std::string relax(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        char mapped = c;
        if (c >= 'A' && c <= 'Z') {
            mapped = static_cast<char>(c - 'A' + 'a');
        }
        if (mapped == '\t' || mapped == '\n' || mapped == '\r' || mapped == '\f' ||
            mapped == '\v') {
            mapped = ' ';
        }
        if (mapped == ' ' && (out.empty() || out.back() == ' ')) {
            continue;
        }
        out.push_back(mapped);
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == '?')) {
        out.pop_back();
    }
    return out;
}

Config config_with_overrides(const Config& base, const std::map<std::string, std::string>& flags) {
    Config config = base;
    for (const auto& [key, value] : flags) {
        bool* slot = nullptr;
        if (key == "allow_punctuation_spamming") slot = &config.allow_punctuation_spamming;
        else if (key == "allow_emoji_spamming") slot = &config.allow_emoji_spamming;
        else if (key == "disable_pii_masking") slot = &config.disable_pii_masking;
        else if (key == "show_phonenumber") slot = &config.show_phonenumber;
        else if (key == "rm_common_abbr") slot = &config.rm_common_abbr;
        if (!slot) {
            throw ValidationError("unknown flag override \"" + key + "\"");
        }
        if (value == "true") {
            *slot = true;
        } else if (value == "false") {
            *slot = false;
        } else {
            throw ValidationError("flag \"" + key + "\" must be true or false");
        }
    }
    return config;
}

std::vector<GoldenResult> run_goldens(const std::vector<GoldenCase>& cases, const Config& base,
                                      const AssetBundle& bundle) {
    std::vector<GoldenResult> results;
    results.reserve(cases.size());
    for (const auto& c : cases) {
        Config config = config_with_overrides(base, c.flags);
        ProcessedMessage msg = preprocess(c.input, config, bundle);
        GoldenResult r;
        r.id = c.id;
        if (c.relaxed) {
            r.actual = relax(msg.tts_text);
            r.expected = relax(c.expected);
        } else {
            r.actual = msg.tts_text;
            r.expected = c.expected;
        }
        r.passed = r.actual == r.expected;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace lip
