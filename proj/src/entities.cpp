#include "lip/entities.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string_view>

#include "lip/numbers.hpp"

namespace lip {

namespace {

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

bool is_lower(char c) {
    return c >= 'a' && c <= 'z';
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!is_digit(c)) {
            return false;
        }
    }
    return true;
}

std::size_t digit_count(std::string_view s) {
    std::size_t n = 0;
    for (char c : s) {
        n += is_digit(c) ? 1 : 0;
    }
    return n;
}

// Punctuation that may wrap an entity token without being part of it. The
// apostrophe stays out: it is load-bearing inside length tokens (5'9").
bool is_wrap_char(char c) {
    switch (c) {
        case '.':
        case ',':
        case '!':
        case '?':
        case ';':
        case ':':
        case '"':
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

std::size_t wrap_prefix_len(std::string_view t) {
    std::size_t n = 0;
    while (n < t.size() && is_wrap_char(t[n])) {
        ++n;
    }
    return n;
}

std::size_t wrap_suffix_len(std::string_view t, std::size_t lead) {
    std::size_t n = 0;
    while (lead + n < t.size() && is_wrap_char(t[t.size() - 1 - n])) {
        ++n;
    }
    return n;
}

std::string_view wrap_core(std::string_view t) {
    std::size_t lead = wrap_prefix_len(t);
    std::size_t trail = wrap_suffix_len(t, lead);
    return t.substr(lead, t.size() - lead - trail);
}

// ---- token shape parsers -------------------------------------------------

constexpr std::array<std::string_view, 33> kKnownTlds = {
    "com", "org",  "net",  "edu", "gov", "mil",  "int",  "io",   "co",   "in",    "uk",
    "us",  "au",   "ca",   "de",  "fr",  "jp",   "cn",   "br",   "ru",   "ai",    "app",
    "dev", "info", "biz",  "me",  "tv",  "xyz",  "news", "site", "blog", "cloud", "tech",
};

bool is_known_tld(std::string_view label) {
    return std::find(kKnownTlds.begin(), kKnownTlds.end(), label) != kKnownTlds.end();
}

bool is_host_label(std::string_view label) {
    if (label.empty()) {
        return false;
    }
    for (char c : label) {
        if (!is_lower(c) && !is_digit(c) && c != '-') {
            return false;
        }
    }
    return true;
}

// host[:port], labels dot-separated. require_tld gates bare domains so that
// decimals and file names do not read as links.
bool parse_host(std::string_view host, bool require_tld) {
    auto colon = host.find(':');
    if (colon != std::string_view::npos) {
        std::string_view port = host.substr(colon + 1);
        if (!all_digits(port)) {
            return false;
        }
        host = host.substr(0, colon);
    }
    if (host.empty()) {
        return false;
    }
    std::size_t labels = 0;
    std::string_view last;
    std::size_t start = 0;
    while (true) {
        auto dot = host.find('.', start);
        std::string_view label =
            dot == std::string_view::npos ? host.substr(start) : host.substr(start, dot - start);
        if (!is_host_label(label)) {
            return false;
        }
        last = label;
        ++labels;
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
    }
    if (labels < 2) {
        return false;
    }
    if (require_tld) {
        if (last.size() < 2 || !is_known_tld(last)) {
            return false;
        }
        for (char c : last) {
            if (!is_lower(c)) {
                return false;
            }
        }
    }
    return true;
}

bool match_url(std::string_view t) {
    for (std::string_view scheme : {std::string_view("https://"), std::string_view("http://")}) {
        if (t.size() > scheme.size() && t.substr(0, scheme.size()) == scheme) {
            std::string_view rest = t.substr(scheme.size());
            std::string_view host = rest.substr(0, rest.find('/'));
            auto at = host.rfind('@');
            if (at != std::string_view::npos) {
                host = host.substr(at + 1);  // userinfo
            }
            return parse_host(host, false) || is_host_label(host);
        }
    }
    if (t.find('@') != std::string_view::npos) {
        return false;
    }
    bool has_www = t.size() > 4 && t.substr(0, 4) == "www.";
    std::string_view rest = has_www ? t.substr(4) : t;
    std::string_view host = rest.substr(0, rest.find('/'));
    if (has_www) {
        return is_host_label(host) || parse_host(host, false);
    }
    // Bare domains must end in a known TLD and carry no path ambiguity.
    return parse_host(host, true);
}

bool match_email(std::string_view t) {
    auto at = t.find('@');
    if (at == std::string_view::npos || at == 0 || t.find('@', at + 1) != std::string_view::npos) {
        return false;
    }
    std::string_view local = t.substr(0, at);
    for (char c : local) {
        if (!is_lower(c) && !is_digit(c) && c != '.' && c != '_' && c != '%' && c != '+' &&
            c != '-') {
            return false;
        }
    }
    std::string_view domain = t.substr(at + 1);
    auto last_dot = domain.rfind('.');
    if (last_dot == std::string_view::npos) {
        return false;
    }
    std::string_view tld = domain.substr(last_dot + 1);
    if (tld.size() < 2) {
        return false;
    }
    for (char c : tld) {
        if (!is_lower(c)) {
            return false;
        }
    }
    return parse_host(domain, false);
}

bool match_handle(std::string_view t, char sigil) {
    if (t.size() < 2 || t[0] != sigil) {
        return false;
    }
    for (char c : t.substr(1)) {
        if (!is_lower(c) && !is_digit(c) && c != '_') {
            return false;
        }
    }
    return true;
}

struct CurrencySymbol {
    std::string_view symbol;
    std::string_view singular;
    std::string_view plural;
};

constexpr std::array<CurrencySymbol, 4> kCurrencies = {{
    {"$", "dollar", "dollars"},
    {"₹", "rupee", "rupees"},
    {"€", "euro", "euros"},
    {"£", "pound", "pounds"},
}};

const CurrencySymbol* currency_prefix(std::string_view t) {
    for (const auto& c : kCurrencies) {
        if (t.size() >= c.symbol.size() && t.substr(0, c.symbol.size()) == c.symbol) {
            return &c;
        }
    }
    return nullptr;
}

// digits with optional ".digits"
bool match_amount(std::string_view t) {
    auto dot = t.find('.');
    if (dot == std::string_view::npos) {
        return all_digits(t);
    }
    return all_digits(t.substr(0, dot)) && all_digits(t.substr(dot + 1));
}

bool match_currency(std::string_view t) {
    const CurrencySymbol* c = currency_prefix(t);
    return c && match_amount(t.substr(c->symbol.size()));
}

bool match_percentage(std::string_view t) {
    return t.size() >= 2 && t.back() == '%' && match_amount(t.substr(0, t.size() - 1));
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
    if (!all_digits(s) || s.size() > 12) {
        return false;
    }
    out = 0;
    for (char c : s) {
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return true;
}

bool match_time(std::string_view t, std::uint64_t* hour = nullptr,
                std::uint64_t* minute = nullptr) {
    auto colon = t.find(':');
    if (colon == std::string_view::npos) {
        return false;
    }
    std::string_view h = t.substr(0, colon);
    std::string_view m = t.substr(colon + 1);
    if (h.empty() || h.size() > 2 || m.size() != 2 || !all_digits(h) || !all_digits(m)) {
        return false;
    }
    std::uint64_t hv = 0;
    std::uint64_t mv = 0;
    parse_uint(h, hv);
    parse_uint(m, mv);
    if (hv > 23 || mv > 59) {
        return false;
    }
    if (hour) {
        *hour = hv;
    }
    if (minute) {
        *minute = mv;
    }
    return true;
}

struct DateParts {
    std::uint64_t day = 0;
    std::uint64_t month = 0;
    std::uint64_t year = 0;
};

bool match_date(std::string_view t, DateParts* parts) {
    char sep = 0;
    for (char c : t) {
        if (c == '/' || c == '-' || c == '.') {
            sep = c;
            break;
        }
    }
    if (!sep) {
        return false;
    }
    auto p1 = t.find(sep);
    auto p2 = t.find(sep, p1 + 1);
    if (p2 == std::string_view::npos || t.find(sep, p2 + 1) != std::string_view::npos) {
        return false;
    }
    std::string_view g1 = t.substr(0, p1);
    std::string_view g2 = t.substr(p1 + 1, p2 - p1 - 1);
    std::string_view g3 = t.substr(p2 + 1);
    if (!all_digits(g1) || !all_digits(g2) || !all_digits(g3)) {
        return false;
    }
    if (g1.size() > 4 || g2.size() > 2 || g3.size() > 4) {
        return false;
    }
    std::uint64_t v1 = 0;
    std::uint64_t v2 = 0;
    std::uint64_t v3 = 0;
    parse_uint(g1, v1);
    parse_uint(g2, v2);
    parse_uint(g3, v3);
    DateParts d;
    if (g1.size() == 4) {  // Y/M/D
        d.year = v1;
        d.month = v2;
        d.day = v3;
    } else {  // D/M/Y
        d.day = v1;
        d.month = v2;
        d.year = v3;
    }
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) {
        return false;
    }
    if (parts) {
        *parts = d;
    }
    return true;
}

bool match_driving_licence(std::string_view t) {
    if (t.size() != 15) {
        return false;
    }
    if (!is_lower(t[0]) || !is_lower(t[1]) || !is_digit(t[2]) || !is_digit(t[3])) {
        return false;
    }
    for (char c : t.substr(4)) {
        if (!is_lower(c) && !is_digit(c)) {
            return false;
        }
    }
    return true;
}

// 10 digits with optional +91/0 prefix and optional 5-5 dash grouping.
bool match_phone(std::string_view t) {
    if (t.size() > 3 && t.substr(0, 3) == "+91") {
        t = t.substr(3);
        if (!t.empty() && t[0] == '-') {
            t = t.substr(1);
        }
    } else if (t.size() == 11 && t[0] == '0') {
        t = t.substr(1);
    }
    if (t.size() == 10) {
        return all_digits(t);
    }
    if (t.size() == 11 && t[5] == '-') {
        return all_digits(t.substr(0, 5)) && all_digits(t.substr(6));
    }
    return false;
}

bool match_length(std::string_view t) {
    auto quote = t.find('\'');
    if (quote == std::string_view::npos || quote == 0) {
        return false;
    }
    std::string_view feet = t.substr(0, quote);
    std::string_view inches = t.substr(quote + 1);
    if (!inches.empty() && inches.back() == '"') {
        inches = inches.substr(0, inches.size() - 1);
    }
    return feet.size() <= 2 && !inches.empty() && inches.size() <= 2 && all_digits(feet) &&
           all_digits(inches);
}

bool match_fraction(std::string_view t) {
    auto slash = t.find('/');
    return slash != std::string_view::npos && all_digits(t.substr(0, slash)) &&
           all_digits(t.substr(slash + 1));
}

bool match_decimal(std::string_view t) {
    auto dot = t.find('.');
    return dot != std::string_view::npos && all_digits(t.substr(0, dot)) &&
           all_digits(t.substr(dot + 1));
}

// ---- verbalization helpers -----------------------------------------------

constexpr std::array<std::string_view, 13> kMonths = {
    "",     "january", "february", "march",     "april",   "may",      "june",
    "july", "august",  "september", "october",  "november", "december",
};

void append_word(std::string& out, std::string_view word) {
    if (word.empty()) {
        return;
    }
    if (!out.empty()) {
        out += ' ';
    }
    out += word;
}

// Cardinal reading of a digit group; zero-padded groups read digit by digit.
std::string cardinal(std::string_view digits) {
    std::uint64_t value = 0;
    if ((digits.size() > 1 && digits[0] == '0') || !parse_uint(digits, value)) {
        return digits_to_words(digits);
    }
    return number_to_words(value);
}

// Letters stay grouped into words, digit runs become digit words, everything
// else separates ("user_42" -> "user four two").
std::string spell_identifier(std::string_view s) {
    std::string out;
    bool in_letters = false;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < s.size() && is_digit(s[j])) {
                ++j;
            }
            append_word(out, digits_to_words(s.substr(i, j - i)));
            in_letters = false;
            i = j;
        } else if (is_lower(c)) {
            if (!in_letters && !out.empty()) {
                out += ' ';
            }
            out += c;
            in_letters = true;
            ++i;
        } else {
            in_letters = false;
            ++i;
        }
    }
    return out;
}

std::string spell_host(std::string_view host) {
    auto colon = host.find(':');
    if (colon != std::string_view::npos) {
        host = host.substr(0, colon);
    }
    std::string out;
    std::size_t start = 0;
    bool first = true;
    while (true) {
        auto dot = host.find('.', start);
        std::string_view label =
            dot == std::string_view::npos ? host.substr(start) : host.substr(start, dot - start);
        if (!first) {
            append_word(out, "dot");
        }
        append_word(out, spell_identifier(label));
        first = false;
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
    }
    return out;
}

std::string url_host(std::string_view t) {
    for (std::string_view scheme : {std::string_view("https://"), std::string_view("http://")}) {
        if (t.size() > scheme.size() && t.substr(0, scheme.size()) == scheme) {
            t = t.substr(scheme.size());
            break;
        }
    }
    auto slash = t.find('/');
    if (slash != std::string_view::npos) {
        t = t.substr(0, slash);
    }
    auto at = t.rfind('@');
    if (at != std::string_view::npos) {
        t = t.substr(at + 1);
    }
    if (t.size() > 4 && t.substr(0, 4) == "www.") {
        t = t.substr(4);
    }
    return std::string(t);
}

std::string year_words(std::uint64_t year) {
    if (year < 1000) {
        return number_to_words(year);
    }
    const std::uint64_t hi = year / 100;
    const std::uint64_t lo = year % 100;
    if (lo == 0) {
        return number_to_words(hi) + " hundred";
    }
    if (lo < 10) {
        return number_to_words(hi) + " oh " + number_to_words(lo);
    }
    return number_to_words(hi) + " " + number_to_words(lo);
}

std::string phone_words(const EntitySpan& span, const Config& config) {
    std::string digits;
    for (char c : span.source) {
        if (is_digit(c)) {
            digits += c;
        }
    }
    // Drop country code or trunk prefix; the subscriber number is 10 digits.
    if (digits.size() > 10) {
        digits = digits.substr(digits.size() - 10);
    }
    const bool masked = !config.disable_pii_masking && !config.show_phonenumber;
    if (masked) {
        return "a " + number_to_words(digits.size()) + " digit number";
    }
    return digits_to_words(digits);
}

std::string amount_words(std::string_view amount) {
    auto dot = amount.find('.');
    if (dot == std::string_view::npos) {
        return cardinal(amount);
    }
    return cardinal(amount.substr(0, dot)) + " point " + digits_to_words(amount.substr(dot + 1));
}

}  // namespace

const char* entity_kind_name(EntityKind kind) {
    switch (kind) {
        case EntityKind::Url: return "url";
        case EntityKind::Email: return "email";
        case EntityKind::Mention: return "mention";
        case EntityKind::Hashtag: return "hashtag";
        case EntityKind::Currency: return "currency";
        case EntityKind::Percentage: return "percentage";
        case EntityKind::Time: return "time";
        case EntityKind::Date: return "date";
        case EntityKind::Aadhaar: return "aadhaar";
        case EntityKind::DrivingLicence: return "driving_licence";
        case EntityKind::Phone: return "phone";
        case EntityKind::Length: return "length";
        case EntityKind::Fraction: return "fraction";
        case EntityKind::Decimal: return "decimal";
        case EntityKind::Integer: return "integer";
    }
    return "unknown";
}

std::optional<EntityKind> classify_token(const std::string& token) {
    if (token.empty()) {
        return std::nullopt;
    }
    std::string_view t(token);

    if (match_url(t)) {
        return EntityKind::Url;
    }
    if (t.find('@') != std::string_view::npos && match_email(t)) {
        return EntityKind::Email;
    }
    if (match_handle(t, '@')) {
        return EntityKind::Mention;
    }
    if (match_handle(t, '#')) {
        return EntityKind::Hashtag;
    }
    if (digit_count(t) == 0) {
        return std::nullopt;  // every remaining kind needs digits
    }
    if (match_currency(t)) {
        return EntityKind::Currency;
    }
    if (match_percentage(t)) {
        return EntityKind::Percentage;
    }
    if (match_time(t)) {
        return EntityKind::Time;
    }
    if (match_date(t, nullptr)) {
        return EntityKind::Date;
    }
    if (t.size() == 12 && all_digits(t)) {
        return EntityKind::Aadhaar;
    }
    if (match_driving_licence(t)) {
        return EntityKind::DrivingLicence;
    }
    if (match_phone(t)) {
        return EntityKind::Phone;
    }
    if (match_length(t)) {
        return EntityKind::Length;
    }
    if (match_fraction(t)) {
        return EntityKind::Fraction;
    }
    if (match_decimal(t)) {
        return EntityKind::Decimal;
    }
    if (all_digits(t)) {
        return EntityKind::Integer;
    }
    return std::nullopt;
}

std::vector<EntitySpan> scan_multi_token(const std::vector<std::string>& tokens) {
    std::vector<EntitySpan> spans;
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::string_view a = wrap_core(tokens[i]);

        // Aadhaar written as three 4-digit groups.
        if (i + 2 < tokens.size() && a.size() == 4 && all_digits(a)) {
            std::string_view b = wrap_core(tokens[i + 1]);
            std::string_view c = wrap_core(tokens[i + 2]);
            if (b.size() == 4 && all_digits(b) && c.size() == 4 && all_digits(c)) {
                EntitySpan span;
                span.kind = EntityKind::Aadhaar;
                span.source.reserve(14);
                span.source.append(a).append(" ").append(b).append(" ").append(c);
                span.first_token = i;
                span.last_token = i + 2;
                spans.push_back(std::move(span));
                i += 3;
                continue;
            }
        }

        // Phone split as "+NN NNNNN NNNNN" or "+NN NNNNNNNNNN".
        if (a.size() == 3 && a[0] == '+' && is_digit(a[1]) && is_digit(a[2]) &&
            i + 1 < tokens.size()) {
            std::string_view b = wrap_core(tokens[i + 1]);
            if (b.size() == 5 && all_digits(b) && i + 2 < tokens.size()) {
                std::string_view c = wrap_core(tokens[i + 2]);
                if (c.size() == 5 && all_digits(c)) {
                    EntitySpan span;
                    span.kind = EntityKind::Phone;
                    span.source.append(a).append(" ").append(b).append(" ").append(c);
                    span.first_token = i;
                    span.last_token = i + 2;
                    spans.push_back(std::move(span));
                    i += 3;
                    continue;
                }
            }
            if (b.size() == 10 && all_digits(b)) {
                EntitySpan span;
                span.kind = EntityKind::Phone;
                span.source.append(a).append(" ").append(b);
                span.first_token = i;
                span.last_token = i + 1;
                spans.push_back(std::move(span));
                i += 2;
                continue;
            }
        }

        // Currency symbol separated from its amount: "$ 100".
        if (i + 1 < tokens.size()) {
            const CurrencySymbol* sym = currency_prefix(a);
            if (sym && a == sym->symbol) {
                std::string_view b = wrap_core(tokens[i + 1]);
                if (match_amount(b)) {
                    EntitySpan span;
                    span.kind = EntityKind::Currency;
                    span.source.append(a).append(" ").append(b);
                    span.first_token = i;
                    span.last_token = i + 1;
                    spans.push_back(std::move(span));
                    i += 2;
                    continue;
                }
            }
        }
        ++i;
    }
    return spans;
}

std::string verbalize(const EntitySpan& span, const Config& config) {
    const bool masking = !config.disable_pii_masking;
    std::string_view src(span.source);

    switch (span.kind) {
        case EntityKind::Url:
            return "link to " + spell_host(url_host(src));
        case EntityKind::Email: {
            if (masking) {
                return "email";
            }
            auto at = src.find('@');
            return spell_identifier(src.substr(0, at)) + " at " + spell_host(src.substr(at + 1));
        }
        case EntityKind::Mention:
            return "at " + spell_identifier(src.substr(1));
        case EntityKind::Hashtag:
            return "hashtag " + spell_identifier(src.substr(1));
        case EntityKind::Currency: {
            const CurrencySymbol* sym = currency_prefix(src);
            std::string_view amount = src.substr(sym->symbol.size());
            while (!amount.empty() && amount.front() == ' ') {
                amount.remove_prefix(1);
            }
            bool singular = amount == "1";
            return amount_words(amount) + " " + std::string(singular ? sym->singular : sym->plural);
        }
        case EntityKind::Percentage:
            return amount_words(src.substr(0, src.size() - 1)) + " percent";
        case EntityKind::Time: {
            std::uint64_t hour = 0;
            std::uint64_t minute = 0;
            match_time(src, &hour, &minute);
            if (minute == 0) {
                return number_to_words(hour) + " o clock";
            }
            return number_to_words(hour) + " " + number_to_words(minute);
        }
        case EntityKind::Date: {
            DateParts d;
            match_date(src, &d);
            return number_to_words(d.day) + " " + std::string(kMonths[d.month]) + " " +
                   year_words(d.year);
        }
        case EntityKind::Aadhaar:
            if (masking) {
                return "a twelve digit number";
            }
            return digits_to_words(src);
        case EntityKind::DrivingLicence:
            if (masking) {
                return "a driving licence number";
            }
            return spell_identifier(src);
        case EntityKind::Phone:
            return phone_words(span, config);
        case EntityKind::Length: {
            auto quote = src.find('\'');
            std::string_view feet = src.substr(0, quote);
            std::string_view inches = src.substr(quote + 1);
            if (!inches.empty() && inches.back() == '"') {
                inches = inches.substr(0, inches.size() - 1);
            }
            return cardinal(feet) + " feet " + cardinal(inches) + " inches";
        }
        case EntityKind::Fraction: {
            auto slash = src.find('/');
            return cardinal(src.substr(0, slash)) + " by " + cardinal(src.substr(slash + 1));
        }
        case EntityKind::Decimal: {
            auto dot = src.find('.');
            return cardinal(src.substr(0, dot)) + " point " + digits_to_words(src.substr(dot + 1));
        }
        case EntityKind::Integer:
            return cardinal(src);
    }
    return std::string(src);
}

namespace {

// Tries the raw token first, then progressively unwraps affix punctuation,
// fewest characters stripped first.
std::optional<EntitySpan> classify_with_affixes(const std::string& token, std::size_t index,
                                                std::size_t* lead_out, std::size_t* trail_out) {
    const std::size_t max_lead = wrap_prefix_len(token);
    const std::size_t max_trail = wrap_suffix_len(token, max_lead);
    for (std::size_t total = 0; total <= max_lead + max_trail; ++total) {
        for (std::size_t lead = 0; lead <= std::min(total, max_lead); ++lead) {
            const std::size_t trail = total - lead;
            if (trail > max_trail) {
                continue;
            }
            std::string sub = token.substr(lead, token.size() - lead - trail);
            if (sub.empty()) {
                continue;
            }
            if (auto kind = classify_token(sub)) {
                EntitySpan span;
                span.kind = *kind;
                span.source = std::move(sub);
                span.first_token = index;
                span.last_token = index;
                *lead_out = lead;
                *trail_out = trail;
                return span;
            }
        }
    }
    return std::nullopt;
}

// Splices a multiword verbalization into the token stream, reattaching affix
// punctuation to the outermost words.
void emit_words(std::vector<std::string>& out, const std::string& words, const std::string& lead,
                const std::string& trail) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= words.size()) {
        auto space = words.find(' ', start);
        if (space == std::string::npos) {
            parts.push_back(words.substr(start));
            break;
        }
        parts.push_back(words.substr(start, space - start));
        start = space + 1;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::string piece = parts[i];
        if (i == 0) {
            piece = lead + piece;
        }
        if (i + 1 == parts.size()) {
            piece += trail;
        }
        if (!piece.empty()) {
            out.push_back(std::move(piece));
        }
    }
}

// Replaces every digit run left in an unmatched token: short clean runs read
// as cardinals, long or zero-padded runs digit by digit. The remaining
// segments go through entity classification on their own, so "55@priya"
// reads the same as "55 @priya" would.
std::string verbalize_residual_digits(const std::string& token, const Config& config) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (piece.empty()) {
            return;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += piece;
    };
    std::size_t i = 0;
    while (i < token.size()) {
        std::size_t j = i;
        while (j < token.size() && is_digit(token[j]) == is_digit(token[i])) {
            ++j;
        }
        std::string segment = token.substr(i, j - i);
        std::size_t lead = 0;
        std::size_t trail = 0;
        auto span = classify_with_affixes(segment, 0, &lead, &trail);
        if (span) {
            append(segment.substr(0, lead) + verbalize(*span, config) +
                   segment.substr(segment.size() - trail));
        } else if (is_digit(segment[0])) {
            append((segment.size() <= 4 && segment[0] != '0') ? cardinal(segment)
                                                              : digits_to_words(segment));
        } else {
            append(segment);
        }
        i = j;
    }
    return out;
}

bool could_be_entity(const std::string& token) {
    for (char c : token) {
        auto u = static_cast<unsigned char>(c);
        if (is_digit(c) || c == '@' || c == '#' || c == '$' || c == '.' || u >= 0x80) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::string> apply_entities(const std::vector<std::string>& tokens,
                                        const Config& config) {
    std::vector<EntitySpan> multi = scan_multi_token(tokens);
    std::vector<std::string> out;
    out.reserve(tokens.size());

    std::size_t next_span = 0;
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (next_span < multi.size() && multi[next_span].first_token == i) {
            const EntitySpan& span = multi[next_span];
            const std::string& first = tokens[span.first_token];
            const std::string& last = tokens[span.last_token];
            const std::size_t lead = wrap_prefix_len(first);
            const std::size_t trail = wrap_suffix_len(last, wrap_prefix_len(last));
            emit_words(out, verbalize(span, config), first.substr(0, lead),
                       last.substr(last.size() - trail));
            i = span.last_token + 1;
            ++next_span;
            continue;
        }
        const std::string& token = tokens[i];
        ++i;
        if (!could_be_entity(token)) {
            out.push_back(token);
            continue;
        }
        std::size_t lead = 0;
        std::size_t trail = 0;
        auto span = classify_with_affixes(token, i - 1, &lead, &trail);
        if (span) {
            emit_words(out, verbalize(*span, config), token.substr(0, lead),
                       token.substr(token.size() - trail));
        } else if (digit_count(token) > 0) {
            emit_words(out, verbalize_residual_digits(token, config), "", "");
        } else {
            out.push_back(token);
        }
    }
    return out;
}

bool contains_pii(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') {
            ++i;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ') {
            ++j;
        }
        if (j > i) {
            tokens.push_back(text.substr(i, j - i));
        }
        i = j;
    }
    for (const auto& span : scan_multi_token(tokens)) {
        if (span.kind == EntityKind::Aadhaar || span.kind == EntityKind::Phone ||
            span.kind == EntityKind::Email) {
            return true;
        }
    }
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        std::size_t lead = 0;
        std::size_t trail = 0;
        auto span = classify_with_affixes(tokens[k], k, &lead, &trail);
        if (span && (span->kind == EntityKind::Aadhaar || span->kind == EntityKind::Phone ||
                     span->kind == EntityKind::Email)) {
            return true;
        }
    }
    return false;
}

}  // namespace lip
