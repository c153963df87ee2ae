#include "lip/config.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

#include "lip/errors.hpp"

extern char** environ;

namespace lip {

namespace {

const char* kFlagNames[] = {
    "allow_punctuation_spamming", "allow_emoji_spamming", "disable_pii_masking",
    "show_phonenumber",           "rm_common_abbr",
};

bool* flag_slot(Config& config, const std::string& key) {
    if (key == "allow_punctuation_spamming") return &config.allow_punctuation_spamming;
    if (key == "allow_emoji_spamming") return &config.allow_emoji_spamming;
    if (key == "disable_pii_masking") return &config.disable_pii_masking;
    if (key == "show_phonenumber") return &config.show_phonenumber;
    if (key == "rm_common_abbr") return &config.rm_common_abbr;
    return nullptr;
}

void apply_string_overrides(Config& config, const std::map<std::string, std::string>& overrides,
                            const char* source) {
    for (const auto& [key, value] : overrides) {
        if (key == "asset_dir") {
            config.asset_dir = value;
            continue;
        }
        bool* slot = flag_slot(config, key);
        if (!slot) {
            throw ValidationError(std::string(source) + ": unknown config key \"" + key + "\"");
        }
        if (value == "true") {
            *slot = true;
        } else if (value == "false") {
            *slot = false;
        } else {
            throw ValidationError(std::string(source) + ": flag \"" + key +
                                  "\" must be true or false, got \"" + value + "\"");
        }
    }
}

}  // namespace

Config load_config(const std::optional<std::filesystem::path>& file_path,
                   const std::map<std::string, std::string>& env_overrides,
                   const std::map<std::string, std::string>& cli_overrides) {
    Config config;

    if (file_path) {
        std::ifstream in(*file_path);
        if (!in) {
            throw LoadError("cannot open config file " + file_path->string());
        }
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw LoadError("malformed JSON in " + file_path->string() + ": " + e.what());
        }
        if (!doc.is_object()) {
            throw LoadError("config file " + file_path->string() + " must hold a JSON object");
        }
        for (const auto& [key, value] : doc.items()) {
            if (key == "asset_dir") {
                if (!value.is_string()) {
                    throw ValidationError("config key \"asset_dir\" must be a string");
                }
                config.asset_dir = value.get<std::string>();
                continue;
            }
            bool* slot = flag_slot(config, key);
            if (!slot) {
                throw ValidationError("unknown config key \"" + key + "\"");
            }
            if (!value.is_boolean()) {
                throw ValidationError("flag \"" + key + "\" must be a boolean");
            }
            *slot = value.get<bool>();
        }
    }

    apply_string_overrides(config, env_overrides, "env");
    apply_string_overrides(config, cli_overrides, "cli");
    return config;
}

std::map<std::string, std::string> env_config_overrides() {
    std::map<std::string, std::string> overrides;
    for (char** p = environ; p && *p; ++p) {
        std::string entry(*p);
        auto eq = entry.find('=');
        if (eq == std::string::npos || entry.rfind("LIP_", 0) != 0) {
            continue;
        }
        std::string key = entry.substr(4, eq - 4);
        for (char& c : key) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        bool known = key == "asset_dir";
        for (const char* name : kFlagNames) {
            known = known || key == name;
        }
        if (known) {
            overrides[key] = entry.substr(eq + 1);
        }
    }
    return overrides;
}

}  // namespace lip
