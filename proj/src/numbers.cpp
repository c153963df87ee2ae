#include "lip/numbers.hpp"

#include <array>

namespace lip {

namespace {

constexpr std::array<const char*, 20> kUnits = {
    "zero",    "one",     "two",       "three",    "four",    "five",    "six",
    "seven",   "eight",   "nine",      "ten",      "eleven",  "twelve",  "thirteen",
    "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen",
};

constexpr std::array<const char*, 10> kTens = {
    "",      "",      "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
};

// 1..99
std::string tens_units(std::uint64_t n) {
    if (n < 20) {
        return kUnits[n];
    }
    std::string out = kTens[n / 10];
    if (n % 10) {
        out += '-';
        out += kUnits[n % 10];
    }
    return out;
}

// 1..999, "and" between hundreds and the remainder
std::string group_words(std::uint64_t n) {
    std::string out;
    if (n >= 100) {
        out = kUnits[n / 100];
        out += " hundred";
        n %= 100;
        if (n) {
            out += " and ";
            out += tens_units(n);
        }
        return out;
    }
    return tens_units(n);
}

}  // namespace

std::string number_to_words(std::uint64_t n) {
    constexpr std::uint64_t kLimit = 1000000000000ull;  // 10^12
    if (n >= kLimit) {
        return digits_to_words(std::to_string(n));
    }
    if (n == 0) {
        return "zero";
    }

    const std::uint64_t billions = n / 1000000000ull;
    const std::uint64_t millions = n / 1000000ull % 1000;
    const std::uint64_t thousands = n / 1000ull % 1000;
    const std::uint64_t units = n % 1000;

    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) {
            out += ' ';
        }
        out += part;
    };
    if (billions) {
        append(group_words(billions) + " billion");
    }
    if (millions) {
        append(group_words(millions) + " million");
    }
    if (thousands) {
        append(group_words(thousands) + " thousand");
    }
    if (units) {
        // "six thousand and twelve": connective before a final sub-hundred group.
        if (!out.empty() && units < 100) {
            out += " and";
        }
        append(group_words(units));
    }
    return out;
}

std::string digits_to_words(std::string_view digits) {
    std::string out;
    out.reserve(digits.size() * 6);
    for (char c : digits) {
        if (c < '0' || c > '9') {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += kUnits[static_cast<std::size_t>(c - '0')];
    }
    return out;
}

}  // namespace lip
