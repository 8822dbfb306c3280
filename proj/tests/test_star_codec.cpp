#include <doctest.h>

#include <random>

#include "idbe/star_codec.hpp"

using namespace idbe;

namespace {

Dictionary five_word_dict() {
    Bytes text = to_bytes("the cat and the dog and the fish");
    std::vector<ByteView> views{text};
    return Dictionary::build(views);
}

}  // namespace

TEST_CASE("star_pattern") {
    CHECK(star_pattern(0, 3) == "***");
    CHECK(star_pattern(1, 3) == "**b");
    CHECK(star_pattern(26, 3) == "*ba");
    CHECK(star_pattern(25, 2) == "*z");
    CHECK_THROWS_AS(star_pattern(26, 2), std::out_of_range);
    // Star density: length minus digit count, always >= 1.
    CHECK(star_pattern(675, 3) == "*zz");
}

TEST_CASE("build_star_dictionary: groups by length in rank order") {
    StarDictionary sd = StarDictionary::build(five_word_dict());
    CHECK(sd.pattern_of("the") == "***");
    CHECK(sd.pattern_of("and") == "**b");
    CHECK(sd.pattern_of("cat") == "**c");
    CHECK(sd.pattern_of("dog") == "**d");
    CHECK(sd.pattern_of("fish") == "****");
    CHECK(sd.word_of_pattern("**c") == "cat");
    CHECK_FALSE(sd.pattern_of("zebra").has_value());
    CHECK(StarDictionary::build(Dictionary{}).size() == 0);
}

TEST_CASE("build_star_dictionary: overflow words are excluded") {
    // 27 distinct two-letter words; the length-2 group holds only 26.
    std::string text;
    for (int i = 0; i < 27; ++i) {
        text += static_cast<char>('a' + i / 26);
        text += static_cast<char>('a' + i % 26);
        text += ' ';
    }
    Bytes corpus = to_bytes(text);
    std::vector<ByteView> views{corpus};
    Dictionary d = Dictionary::build(views);
    REQUIRE(d.size() == 27);
    StarDictionary sd = StarDictionary::build(d);
    CHECK(sd.group(2).size() == 26);
    CHECK(sd.size() == 26);
}

TEST_CASE("star_encode: spec traces") {
    StarDictionary sd = StarDictionary::build(five_word_dict());
    CHECK(star_encode(to_bytes("the cat"), sd) == to_bytes("*** **c"));
    CHECK(star_encode(to_bytes("a * b"), sd) == to_bytes("a \\* b"));
    CHECK(star_encode(to_bytes(""), sd).empty());
    CHECK(star_encode(to_bytes("back\\slash"), sd) == to_bytes("back\\\\slash"));
}

TEST_CASE("star_decode: spec traces and errors") {
    StarDictionary sd = StarDictionary::build(five_word_dict());
    CHECK(star_decode(to_bytes("*** **c"), sd) == to_bytes("the cat"));
    CHECK(star_decode(to_bytes("\\*"), sd) == to_bytes("*"));

    auto kind_of = [&](const std::string& s) {
        try {
            star_decode(to_bytes(s), sd);
        } catch (const StarStreamError& e) {
            return e.kind();
        }
        FAIL("expected StarStreamError");
        return StarStreamError::Kind::PatternNotFound;
    };
    CHECK(kind_of("**q") == StarStreamError::Kind::PatternNotFound);
    CHECK(kind_of("\\") == StarStreamError::Kind::DanglingEscape);
}

TEST_CASE("star: length preservation on star- and backslash-free input") {
    StarDictionary sd = StarDictionary::build(five_word_dict());
    std::string s = "the cat and the dog, a fish & 42 zebras\n";
    Bytes enc = star_encode(to_bytes(s), sd);
    CHECK(enc.size() == s.size());
}

TEST_CASE("star: round trip on random inputs") {
    StarDictionary sd = StarDictionary::build(five_word_dict());
    std::mt19937 rng(23);
    const std::string pieces[] = {"the", "cat", "fish", "*", "\\", " ", "x", "zeb", ".", "\\*"};
    for (int it = 0; it < 3000; ++it) {
        Bytes input;
        int parts = rng() % 10;
        for (int p = 0; p < parts; ++p) {
            const std::string& s = pieces[rng() % 10];
            input.insert(input.end(), s.begin(), s.end());
        }
        CHECK(star_decode(star_encode(input, sd), sd) == input);
    }
    for (int it = 0; it < 1000; ++it) {
        Bytes input(rng() % 100);
        for (auto& b : input) b = static_cast<std::uint8_t>(rng());
        CHECK(star_decode(star_encode(input, sd), sd) == input);
    }
}
