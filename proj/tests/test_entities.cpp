#include <doctest.h>

#include <regex>

#include "lip/entities.hpp"
#include "test_oracles.hpp"
#include "test_support.hpp"

using namespace lip;

namespace {

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) {
            out += ' ';
        }
        out += t;
    }
    return out;
}

}  // namespace

TEST_CASE("classify_token recognizes every kind") {
    CHECK(classify_token("www.example.com/2018/10/03") == EntityKind::Url);
    CHECK(classify_token("mohan@gmail.com") == EntityKind::Email);
    CHECK(classify_token("9321673878") == EntityKind::Phone);
    CHECK(classify_token("@mohan") == EntityKind::Mention);
    CHECK(classify_token("#blessed") == EntityKind::Hashtag);
    CHECK(classify_token("$100") == EntityKind::Currency);
    CHECK(classify_token("18%") == EntityKind::Percentage);
    CHECK(classify_token("7:30") == EntityKind::Time);
    CHECK(classify_token("2018/10/03") == EntityKind::Date);
    CHECK(classify_token("03/10/2018") == EntityKind::Date);
    CHECK(classify_token("367598346012") == EntityKind::Aadhaar);
    CHECK(classify_token("ka0420200012345") == EntityKind::DrivingLicence);
    CHECK(classify_token("5'9\"") == EntityKind::Length);
    CHECK(classify_token("3/4") == EntityKind::Fraction);
    CHECK(classify_token("3.14") == EntityKind::Decimal);
    CHECK(classify_token("42") == EntityKind::Integer);
    CHECK_FALSE(classify_token("hello").has_value());
    CHECK_FALSE(classify_token("a1b2").has_value());
}

TEST_CASE("whole-token anchoring keeps dates inside urls") {
    // precedence straddle: alone it is a date, inside a link token the URL wins
    CHECK(classify_token("2018/10/03") == EntityKind::Date);
    CHECK(classify_token("www.example.com/2018/10/03") == EntityKind::Url);
    CHECK(classify_token("http://example.com/2018/10/03") == EntityKind::Url);
    // a decimal is not a bare domain
    CHECK(classify_token("3.10") == EntityKind::Decimal);
}

TEST_CASE("scan_multi_token shapes") {
    auto spans = scan_multi_token({"3675", "9834", "6012"});
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].kind == EntityKind::Aadhaar);
    CHECK(spans[0].source == "3675 9834 6012");
    CHECK(spans[0].first_token == 0);
    CHECK(spans[0].last_token == 2);

    spans = scan_multi_token({"$", "100"});
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].kind == EntityKind::Currency);

    spans = scan_multi_token({"+91", "98765", "43210"});
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].kind == EntityKind::Phone);

    CHECK(scan_multi_token({"12", "34"}).empty());
    CHECK(scan_multi_token({"1234", "5678"}).empty());
}

TEST_CASE("grouped digit shapes agree with a regex oracle") {
    // Brute force: any three consecutive tokens of exactly four digits each
    // form one Aadhaar span.
    std::regex four("^[0-9]{4}$");
    auto cases = std::vector<std::vector<std::string>>{
        {"3675", "9834", "6012"},
        {"12", "34"},
        {"1234", "56789", "0123"},
        {"hi", "1234", "5678", "9012"},
        {"1234", "5678", "9012", "3456"},
    };
    for (const auto& tokens : cases) {
        std::size_t expected = 0;
        for (std::size_t i = 0; i + 2 < tokens.size();) {
            if (std::regex_match(tokens[i], four) && std::regex_match(tokens[i + 1], four) &&
                std::regex_match(tokens[i + 2], four)) {
                ++expected;
                i += 3;
            } else {
                ++i;
            }
        }
        std::size_t actual = 0;
        for (const auto& span : scan_multi_token(tokens)) {
            actual += span.kind == EntityKind::Aadhaar ? 1 : 0;
        }
        CHECK(actual == expected);
    }
}

TEST_CASE("verbalize per kind") {
    Config config;  // defaults: masking on, phone shown

    auto make = [](EntityKind kind, const std::string& source) {
        EntitySpan span;
        span.kind = kind;
        span.source = source;
        return span;
    };

    CHECK(verbalize(make(EntityKind::Aadhaar, "3675 9834 6012"), config) ==
          "a twelve digit number");
    CHECK(verbalize(make(EntityKind::Phone, "9321673878"), config) ==
          "nine three two one six seven three eight seven eight");
    CHECK(verbalize(make(EntityKind::Url, "www.example.com/2018/10/03"), config) ==
          "link to example dot com");
    CHECK(verbalize(make(EntityKind::Email, "mohan@gmail.com"), config) == "email");
    CHECK(verbalize(make(EntityKind::Mention, "@mohan"), config) == "at mohan");
    CHECK(verbalize(make(EntityKind::Hashtag, "#blessed"), config) == "hashtag blessed");
    CHECK(verbalize(make(EntityKind::Currency, "$100"), config) == "one hundred dollars");
    CHECK(verbalize(make(EntityKind::Currency, "$1"), config) == "one dollar");
    CHECK(verbalize(make(EntityKind::Currency, "₹250"), config) ==
          "two hundred and fifty rupees");
    CHECK(verbalize(make(EntityKind::Percentage, "18%"), config) == "eighteen percent");
    CHECK(verbalize(make(EntityKind::Time, "7:30"), config) == "seven thirty");
    CHECK(verbalize(make(EntityKind::Time, "7:00"), config) == "seven o clock");
    CHECK(verbalize(make(EntityKind::Date, "2018/10/03"), config) ==
          "three october twenty eighteen");
    CHECK(verbalize(make(EntityKind::Date, "03/10/2018"), config) ==
          "three october twenty eighteen");
    CHECK(verbalize(make(EntityKind::Length, "5'9\""), config) == "five feet nine inches");
    CHECK(verbalize(make(EntityKind::Fraction, "3/4"), config) == "three by four");
    CHECK(verbalize(make(EntityKind::Decimal, "3.14"), config) == "three point one four");
    CHECK(verbalize(make(EntityKind::Integer, "42"), config) == "forty-two");
    CHECK(verbalize(make(EntityKind::DrivingLicence, "ka0420200012345"), config) ==
          "a driving licence number");
}

TEST_CASE("masking flags change phone and email readouts") {
    EntitySpan phone;
    phone.kind = EntityKind::Phone;
    phone.source = "9321673878";

    Config config;
    config.show_phonenumber = false;
    CHECK(verbalize(phone, config) == "a ten digit number");

    config.disable_pii_masking = true;  // masking off unmasks even hidden phones
    CHECK(verbalize(phone, config) ==
          "nine three two one six seven three eight seven eight");

    EntitySpan email;
    email.kind = EntityKind::Email;
    email.source = "mohan@gmail.com";
    CHECK(verbalize(email, config) == "mohan at gmail dot com");
}

TEST_CASE("url host extraction against a split oracle") {
    // oracle: strip scheme and www, cut at first '/', first component is host
    auto host_oracle = [](std::string url) {
        for (const std::string scheme : {"https://", "http://"}) {
            if (url.rfind(scheme, 0) == 0) {
                url = url.substr(scheme.size());
            }
        }
        url = url.substr(0, url.find('/'));
        if (url.rfind("www.", 0) == 0) {
            url = url.substr(4);
        }
        return url;
    };
    Config config;
    for (const std::string url :
         {"www.example.com/2018/10/03", "http://github.com/user/repo",
          "https://www.news.site/a/b?c=d", "example.org", "sub.domain.co/path"}) {
        EntitySpan span;
        span.kind = EntityKind::Url;
        span.source = url;
        std::string host = host_oracle(url);
        std::string expected = "link to ";
        for (char c : host) {
            if (c == '.') {
                expected += " dot ";
            } else {
                expected += c;
            }
        }
        CHECK(verbalize(span, config) == expected);
    }
}

TEST_CASE("url hosts with digits verbalize them") {
    Config config;
    EntitySpan span;
    span.kind = EntityKind::Url;
    span.source = "www.a1-b.com/x";
    CHECK(verbalize(span, config) == "link to a one b dot com");
}

TEST_CASE("apply_entities masks and verbalizes in place") {
    Config config;
    auto out = apply_entities({"this", "is", "my", "email", "address", "mohan@gmail.com", "and",
                               "aadhar", "card", "number", "is", "3675", "9834", "6012"},
                              config);
    CHECK(join(out) ==
          "this is my email address email and aadhar card number is a twelve digit number");

    out = apply_entities({"i", "will", "be", "there", "in", "4", "hours"}, config);
    CHECK(join(out) == "i will be there in four hours");

    out = apply_entities({"no", "entities", "here"}, config);
    CHECK(join(out) == "no entities here");
}

TEST_CASE("apply_entities leaves no digits behind") {
    Config config;
    for (const auto& tokens : std::vector<std::vector<std::string>>{
             {"u2", "is", "a", "band"},
             {"x2y9z"},
             {"call", "9321673878."},
             {"50%discount", "abc12345"},
             {"version", "1.2.3.4"},
             {"007"},
         }) {
        auto out = apply_entities(tokens, config);
        for (const auto& token : out) {
            for (char c : token) {
                REQUIRE(!(c >= '0' && c <= '9'));
            }
        }
    }
}

TEST_CASE("affix punctuation survives around verbalizations") {
    Config config;
    auto out = apply_entities({"(9321673878)"}, config);
    REQUIRE(!out.empty());
    CHECK(out.front().front() == '(');
    CHECK(out.back().back() == ')');

    out = apply_entities({"100?"}, config);
    CHECK(join(out) == "one hundred?");
}

TEST_CASE("contains_pii re-scan") {
    CHECK(contains_pii("call 9321673878 now"));
    CHECK(contains_pii("mail me mohan@gmail.com"));
    CHECK(contains_pii("id is 3675 9834 6012"));
    CHECK_FALSE(contains_pii("nine three two one six seven three eight seven eight"));
    CHECK_FALSE(contains_pii("a twelve digit number"));
    CHECK_FALSE(contains_pii("email"));
}
