#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lip/assets.hpp"

namespace lip {

// Collapses every maximal run of a repeated character to one occurrence
// ("yesss" -> "yes", "messsaaageee" -> "mesage").
std::string collapse_full(std::string_view token);

// All variants where each run of length >= 2 is shortened to 2 or 1, doubled
// letters tried before singles, left to right. Ends with the full collapse.
// More than eight runs returns only the full collapse.
std::vector<std::string> candidate_forms(std::string_view token);

// Lookup chain, first hit wins: contractions, candidate form in the word
// list, full collapse in collapsed_words, full collapse in contractions,
// else the token unchanged.
std::string normalize_token(const std::string& token, const AssetBundle& bundle);

// normalize_token over each word token. Tokens carrying entity characters
// ('@', '/', ':' and the like) pass through untouched for the entity engine;
// leading/trailing punctuation is preserved around the normalized core.
std::vector<std::string> normalize_text(const std::vector<std::string>& tokens,
                                        const AssetBundle& bundle);

}  // namespace lip
