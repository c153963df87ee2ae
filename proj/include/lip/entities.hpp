#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lip/config.hpp"

namespace lip {

// Declaration order is the matching precedence, highest first.
enum class EntityKind {
    Url,
    Email,
    Mention,
    Hashtag,
    Currency,
    Percentage,
    Time,
    Date,
    Aadhaar,
    DrivingLicence,
    Phone,
    Length,
    Fraction,
    Decimal,
    Integer,
};

const char* entity_kind_name(EntityKind kind);

struct EntitySpan {
    EntityKind kind;
    std::string source;               // matched substring
    std::size_t first_token = 0;      // consumed token range, inclusive
    std::size_t last_token = 0;
    std::string verbalization;
};

// Detects patterns crossing token boundaries: Aadhaar as 4-4-4 digit groups,
// phone as "+NN NNNNN NNNNN" style groups, currency symbol separated from
// its amount. Spans never overlap.
std::vector<EntitySpan> scan_multi_token(const std::vector<std::string>& tokens);

// First kind, in precedence order, whose pattern matches the entire token.
// No sub-token matching: a date inside a URL token never fires.
std::optional<EntityKind> classify_token(const std::string& token);

// Spoken form of a classified span. Masking applies unless disabled;
// show_phonenumber unmasks phones only.
std::string verbalize(const EntitySpan& span, const Config& config);

// scan_multi_token, then classify_token per remaining token, each span
// replaced by its verbalization. Leftover digits in unmatched tokens are
// verbalized too, so the result never contains a digit.
std::vector<std::string> apply_entities(const std::vector<std::string>& tokens,
                                        const Config& config);

// True if text contains any region matching the Email, Phone or Aadhaar
// patterns; used to audit masked output.
bool contains_pii(const std::string& text);

}  // namespace lip
