#include "idbe/idbe_codec.hpp"

namespace idbe {

std::vector<Token> tokenize(ByteView input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        if (is_ascii_letter(input[i])) {
            std::size_t j = i;
            while (j < input.size() && is_ascii_letter(input[j])) ++j;
            tokens.push_back({Token::Kind::Word, Bytes(input.begin() + i, input.begin() + j)});
            i = j;
        } else {
            tokens.push_back({Token::Kind::Char, Bytes{input[i]}});
            ++i;
        }
    }
    return tokens;
}

Bytes idbe_encode(ByteView input, const Dictionary& d) {
    Bytes out;
    out.reserve(input.size());
    std::size_t i = 0;
    const std::size_t n = input.size();
    while (i < n) {
        std::uint8_t b = input[i];
        if (is_ascii_letter(b)) {
            std::size_t j = i;
            while (j < n && is_ascii_letter(input[j])) ++j;
            std::string_view word(reinterpret_cast<const char*>(input.data()) + i, j - i);
            std::optional<CodeWord> code;
            if (word.size() >= 2) code = d.code_of(word);
            if (code) {
                out.push_back(static_cast<std::uint8_t>(250 + code->length));
                out.insert(out.end(), code->view().begin(), code->view().end());
                i = j;
                if (i < n) {
                    if (input[i] == ' ' && i + 1 < n)
                        ++i;  // the code implies one following space
                    else
                        // Not a space, or a space that ends the input: the
                        // decoder emits nothing at end of stream, so a final
                        // space must stay literal behind a suppression marker.
                        out.push_back(kMarkerNoSpace);
                }
            } else {
                out.insert(out.end(), input.begin() + i, input.begin() + j);
                i = j;
            }
        } else {
            out.push_back(b);
            if (b >= kMarkerLen1) out.push_back(b);  // doubled literal
            ++i;
        }
    }
    return out;
}

Bytes idbe_decode(ByteView input, const Dictionary& d) {
    Bytes out;
    out.reserve(input.size());
    std::size_t i = 0;
    const std::size_t n = input.size();
    while (i < n) {
        std::uint8_t b = input[i];
        if (b < kMarkerLen1) {
            out.push_back(b);
            ++i;
            continue;
        }
        if (i + 1 < n && input[i + 1] == b) {  // doubled literal
            out.push_back(b);
            i += 2;
            continue;
        }
        if (b == kMarkerNoSpace)
            throw IdbeStreamError(IdbeStreamError::Kind::DanglingMarker,
                                  "unpaired 255 byte at offset " + std::to_string(i));
        std::size_t code_len = b - 250;
        ++i;
        if (i + code_len > n)
            throw IdbeStreamError(IdbeStreamError::Kind::TruncatedCode,
                                  "truncated code at offset " + std::to_string(i));
        auto word = d.word_of(input.subspan(i, code_len));
        if (!word)
            throw IdbeStreamError(IdbeStreamError::Kind::UnknownCode,
                                  "unknown code at offset " + std::to_string(i));
        out.insert(out.end(), word->begin(), word->end());
        i += code_len;
        // A coded word implies one following space unless suppressed. A run
        // of m 255 bytes here is m/2 literal 0xFF pairs, plus a leading
        // suppression marker when m is odd; an even run keeps the space.
        if (i == n) continue;  // end of input: nothing was absorbed
        std::size_t run = 0;
        while (i + run < n && input[i + run] == kMarkerNoSpace) ++run;
        if (run % 2 == 1)
            ++i;  // suppression marker; the remaining pairs decode as literals
        else
            out.push_back(' ');
    }
    return out;
}

}  // namespace idbe
