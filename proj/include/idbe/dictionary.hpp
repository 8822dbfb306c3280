#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "idbe/common.hpp"

namespace idbe {

// Code alphabet: bytes 33..250, 218 values. Codes are 1..4 bytes long,
// assigned by frequency rank.
inline constexpr int kCodeByteFirst = 33;
inline constexpr int kCodeByteLast = 250;
inline constexpr int kCodeAlphabetSize = kCodeByteLast - kCodeByteFirst + 1;  // 218

struct CodeWord {
    std::array<std::uint8_t, 4> bytes{};
    std::uint8_t length = 0;

    ByteView view() const { return {bytes.data(), length}; }
    bool operator==(const CodeWord&) const = default;
};

struct DictConfig {
    std::uint64_t min_frequency = 1;
    int max_code_length = 4;  // 1..4
};

class DictError : public DataError {
public:
    enum class Kind {
        BadHeader,
        CountMismatch,
        DuplicateWord,
        IllegalCharacter,
        ChecksumMismatch,
    };

    DictError(Kind kind, const std::string& msg) : DataError(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class CodeSpaceExhausted : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Number of distinct codes of length exactly `len` (218^len).
std::uint64_t code_space(int len);

// Total codes of length <= max_len.
std::uint64_t code_capacity(int max_len);

// Rank -> code word. Ranks 0..217 map to single bytes 33..250; the next
// 218^2 ranks map to byte pairs in lexicographic order (first byte slowest),
// and so on for triples and quadruples. Throws CodeSpaceExhausted past the
// quadruple space.
CodeWord assign_code(std::uint64_t rank);

// Inverse of assign_code. Returns nullopt for bytes outside 33..250 or
// lengths outside 1..4.
std::optional<std::uint64_t> code_to_rank(ByteView code);

class Dictionary {
public:
    Dictionary() = default;

    // Words are maximal [A-Za-z] runs of length >= 2, counted case-sensitively,
    // ranked by descending frequency with ascending lexicographic tie-break,
    // truncated to the code capacity for cfg.max_code_length.
    static Dictionary build(const std::vector<ByteView>& corpus, const DictConfig& cfg = {});

    static Dictionary load(std::istream& in);
    void save(std::ostream& out) const;

    std::size_t size() const { return words_.size(); }
    const std::string& word_at(std::size_t rank) const { return words_[rank]; }
    const std::vector<std::string>& words() const { return words_; }

    std::optional<std::uint32_t> rank_of(std::string_view word) const;
    std::optional<CodeWord> code_of(std::string_view word) const;

    // Code bytes -> word, or nullopt if the code names no entry.
    std::optional<std::string_view> word_of(ByteView code) const;

    std::uint64_t checksum() const { return checksum_; }

    bool operator==(const Dictionary& o) const { return words_ == o.words_; }

private:
    static Dictionary from_words(std::vector<std::string> words);

    std::vector<std::string> words_;
    std::unordered_map<std::string, std::uint32_t> rank_of_;
    std::uint64_t checksum_ = kFnvOffsetBasis;
};

}  // namespace idbe
