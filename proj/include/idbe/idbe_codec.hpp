#pragma once

#include <vector>

#include "idbe/common.hpp"
#include "idbe/dictionary.hpp"

namespace idbe {

// Marker bytes. 251..254 prefix a code of 1..4 bytes, 255 marks a suppressed
// space after a coded word, and any of 251..255 doubled is one literal byte.
inline constexpr std::uint8_t kMarkerLen1 = 251;
inline constexpr std::uint8_t kMarkerLen4 = 254;
inline constexpr std::uint8_t kMarkerNoSpace = 255;

struct Token {
    enum class Kind { Word, Char };
    Kind kind;
    Bytes bytes;

    bool operator==(const Token&) const = default;
};

// Greedy left-to-right split: maximal ASCII-letter runs become Word tokens,
// every other byte a Char token. Concatenating the tokens' bytes reproduces
// the input exactly.
std::vector<Token> tokenize(ByteView input);

Bytes idbe_encode(ByteView input, const Dictionary& d);

class IdbeStreamError : public DataError {
public:
    enum class Kind { TruncatedCode, UnknownCode, DanglingMarker };

    IdbeStreamError(Kind kind, const std::string& msg) : DataError(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

Bytes idbe_decode(ByteView input, const Dictionary& d);

}  // namespace idbe
