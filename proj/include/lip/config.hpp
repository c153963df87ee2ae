#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace lip {

// Global user flags. Construct via load_config or rely on the defaults;
// treat instances as immutable once built.
struct Config {
    bool allow_punctuation_spamming = false;
    bool allow_emoji_spamming = false;
    bool disable_pii_masking = false;
    bool show_phonenumber = true;
    bool rm_common_abbr = true;
    std::filesystem::path asset_dir = "assets";
};

// Builds a Config from up to three sources with precedence
// cli > env > file > defaults.
//
// The file, if given, is a JSON object mapping flag names (lowercase snake
// case) to booleans; "asset_dir" is the one string-valued key accepted.
// Override maps use the same keys with values "true"/"false". Unknown keys
// are rejected with a ValidationError naming the key.
Config load_config(const std::optional<std::filesystem::path>& file_path,
                   const std::map<std::string, std::string>& env_overrides,
                   const std::map<std::string, std::string>& cli_overrides);

// Collects LIP_* variables from the process environment into override-map
// form (LIP_SHOW_PHONENUMBER=false -> {"show_phonenumber", "false"}).
std::map<std::string, std::string> env_config_overrides();

}  // namespace lip
