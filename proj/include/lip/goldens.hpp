#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lip/assets.hpp"
#include "lip/config.hpp"

namespace lip {

struct GoldenCase {
    std::string id;
    std::string input;
    std::string expected;
    std::map<std::string, std::string> flags;  // per-case Config overrides
    bool relaxed = true;                       // comparison mode
};

struct GoldenResult {
    std::string id;
    bool passed = false;
    std::string actual;
    std::string expected;
};

// Fixture file: JSON array of {id, input, expected, flags?, normalization?}.
std::vector<GoldenCase> load_goldens(const std::filesystem::path& path);

// Relaxed comparison form: lowercase, whitespace collapsed, terminal '?'
// stripped.
std::string relax(std::string_view text);

std::vector<GoldenResult> run_goldens(const std::vector<GoldenCase>& cases, const Config& base,
                                      const AssetBundle& bundle);

// Applies override-map flags on top of an existing Config.
Config config_with_overrides(const Config& base, const std::map<std::string, std::string>& flags);

}  // namespace lip
