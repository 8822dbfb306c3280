#include <doctest.h>

#include <random>

#include "idbe/idbe_codec.hpp"

using namespace idbe;

namespace {

Dictionary five_word_dict() {
    Bytes text = to_bytes("the cat and the dog and the fish");
    std::vector<ByteView> views{text};
    return Dictionary::build(views);
}

Bytes B(std::initializer_list<int> v) {
    Bytes out;
    for (int b : v) out.push_back(static_cast<std::uint8_t>(b));
    return out;
}

}  // namespace

TEST_CASE("tokenize") {
    CHECK(tokenize(to_bytes("")).empty());

    auto t = tokenize(to_bytes("ab1cd"));
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Token{Token::Kind::Word, to_bytes("ab")});
    CHECK(t[1] == Token{Token::Kind::Char, to_bytes("1")});
    CHECK(t[2] == Token{Token::Kind::Word, to_bytes("cd")});

    t = tokenize(to_bytes("x"));
    REQUIRE(t.size() == 1);
    CHECK(t[0].kind == Token::Kind::Word);

    // Concatenation invariant on random input.
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        Bytes input(rng() % 64);
        for (auto& b : input) b = static_cast<std::uint8_t>(rng());
        Bytes joined;
        for (const auto& tok : tokenize(input))
            joined.insert(joined.end(), tok.bytes.begin(), tok.bytes.end());
        CHECK(joined == input);
    }
}

TEST_CASE("idbe_encode: spec traces") {
    Dictionary d = five_word_dict();
    // the=33, and=34, cat=35, dog=36, fish=37
    CHECK(idbe_encode(to_bytes("the cat"), d) == B({251, 33, 251, 35}));
    CHECK(idbe_encode(to_bytes("the zebra"), d) == B({251, 33, 'z', 'e', 'b', 'r', 'a'}));
    CHECK(idbe_encode(to_bytes("the."), d) == B({251, 33, 255, '.'}));
    CHECK(idbe_encode(B({'a', 253, 'b'}), d) == B({'a', 253, 253, 'b'}));
    CHECK(idbe_encode(to_bytes(""), d).empty());
}

TEST_CASE("idbe_encode: marker details") {
    Dictionary d = five_word_dict();
    // Length-1 word token and not-in-dictionary word are verbatim.
    CHECK(idbe_encode(to_bytes("a"), d) == to_bytes("a"));
    CHECK(idbe_encode(to_bytes("qq"), d) == to_bytes("qq"));
    // Tab is not an absorbable space.
    CHECK(idbe_encode(to_bytes("the\t"), d) == B({251, 33, 255, '\t'}));
    // Only one space is absorbed.
    CHECK(idbe_encode(to_bytes("the  cat"), d) == B({251, 33, ' ', 251, 35}));
    // A space that ends the input stays literal; absorbing it would be
    // indistinguishable from the input ending at the word.
    CHECK(idbe_encode(to_bytes("the "), d) == B({251, 33, 255, ' '}));
    CHECK(idbe_decode(B({251, 33, 255, ' '}), d) == to_bytes("the "));
    CHECK(idbe_encode(to_bytes("the  "), d) == B({251, 33, ' '}));
    CHECK(idbe_decode(B({251, 33, ' '}), d) == to_bytes("the  "));
}

TEST_CASE("idbe_decode: spec traces") {
    Dictionary d = five_word_dict();
    CHECK(idbe_decode(B({251, 33, 251, 35}), d) == to_bytes("the cat"));
    CHECK(idbe_decode(B({251, 33, 255, '.'}), d) == to_bytes("the."));
    CHECK(idbe_decode(B({253, 253}), d) == B({253}));
}

TEST_CASE("idbe_decode: corrupt streams") {
    Dictionary d = five_word_dict();
    auto kind_of = [&](Bytes in) {
        try {
            idbe_decode(in, d);
        } catch (const IdbeStreamError& e) {
            return e.kind();
        }
        FAIL("expected IdbeStreamError");
        return IdbeStreamError::Kind::TruncatedCode;
    };
    CHECK(kind_of(B({252, 33})) == IdbeStreamError::Kind::TruncatedCode);
    CHECK(kind_of(B({251, 250})) == IdbeStreamError::Kind::UnknownCode);  // rank 217 > 4
    CHECK(kind_of(B({255, 'x'})) == IdbeStreamError::Kind::DanglingMarker);
    CHECK(kind_of(B({255})) == IdbeStreamError::Kind::DanglingMarker);
}

TEST_CASE("idbe: 0xFF literal after a coded word stays decodable") {
    Dictionary d = five_word_dict();
    for (Bytes input : {B({'t', 'h', 'e', ' ', 0xFF, 'x'}), B({'t', 'h', 'e', 0xFF, 'x'}),
                        B({'t', 'h', 'e', ' ', 0xFF}), B({'t', 'h', 'e', 0xFF}),
                        B({'t', 'h', 'e', ' ', 0xFF, 0xFF}), B({'t', 'h', 'e', 0xFF, 0xFF}),
                        B({'t', 'h', 'e', ' ', 0xFF, ' ', 'c', 'a', 't'})}) {
        CHECK(idbe_decode(idbe_encode(input, d), d) == input);
    }
}

TEST_CASE("idbe: compression effect on dictionary hits") {
    Dictionary d = five_word_dict();
    // "fish " is 5 bytes; code+marker is 2.
    CHECK(idbe_encode(to_bytes("fish the"), d).size() == 2 + 2);
}

TEST_CASE("idbe: round trip on random inputs") {
    Dictionary d = five_word_dict();
    std::mt19937 rng(11);
    // Alphabet rich in markers, spaces, and dictionary words.
    const std::string pieces[] = {"the", "cat", "and", "dog", "fish", "x", " ", "  ", ".",
                                  "\xFF", "\xFB", "\xFC", "\xFD", "\xFE", "zebra", "\t"};
    for (int it = 0; it < 3000; ++it) {
        Bytes input;
        int parts = rng() % 12;
        for (int p = 0; p < parts; ++p) {
            const std::string& s = pieces[rng() % 16];
            input.insert(input.end(), s.begin(), s.end());
        }
        Bytes round = idbe_decode(idbe_encode(input, d), d);
        CHECK(round == input);
    }
    // Pure random bytes plus a random small dictionary.
    for (int it = 0; it < 2000; ++it) {
        std::string text;
        for (int i = 0; i < 40; ++i) text.push_back("abcd \xFF"[rng() % 6]);
        Bytes corpus = to_bytes(text);
        std::vector<ByteView> views{corpus};
        Dictionary rd = Dictionary::build(views);
        Bytes input(rng() % 128);
        for (auto& b : input) b = static_cast<std::uint8_t>(rng());
        CHECK(idbe_decode(idbe_encode(input, rd), rd) == input);
    }
}
