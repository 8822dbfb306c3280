#include "idbe/dictionary.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace idbe {

namespace {

constexpr char kDictHeader[] = "IDBE-DICT v1";

bool valid_word(std::string_view w) {
    if (w.size() < 2) return false;
    for (char c : w)
        if (!is_ascii_letter(static_cast<std::uint8_t>(c))) return false;
    return true;
}

std::uint64_t checksum_of_words(const std::vector<std::string>& words) {
    std::uint64_t h = kFnvOffsetBasis;
    for (const auto& w : words) {
        h = fnv1a64(as_bytes(w), h);
        std::uint8_t lf = '\n';
        h = fnv1a64({&lf, 1}, h);
    }
    return h;
}

}  // namespace

std::uint64_t code_space(int len) {
    std::uint64_t s = 1;
    for (int i = 0; i < len; ++i) s *= kCodeAlphabetSize;
    return s;
}

std::uint64_t code_capacity(int max_len) {
    std::uint64_t total = 0;
    for (int len = 1; len <= max_len; ++len) total += code_space(len);
    return total;
}

CodeWord assign_code(std::uint64_t rank) {
    std::uint64_t offset = 0;
    for (int len = 1; len <= 4; ++len) {
        std::uint64_t space = code_space(len);
        if (rank < offset + space) {
            std::uint64_t index = rank - offset;
            CodeWord cw;
            cw.length = static_cast<std::uint8_t>(len);
            for (int pos = len - 1; pos >= 0; --pos) {
                cw.bytes[pos] = static_cast<std::uint8_t>(kCodeByteFirst + index % kCodeAlphabetSize);
                index /= kCodeAlphabetSize;
            }
            return cw;
        }
        offset += space;
    }
    throw CodeSpaceExhausted("dictionary rank " + std::to_string(rank) +
                             " exceeds the 4-byte code space");
}

std::optional<std::uint64_t> code_to_rank(ByteView code) {
    if (code.empty() || code.size() > 4) return std::nullopt;
    std::uint64_t index = 0;
    for (std::uint8_t b : code) {
        if (b < kCodeByteFirst || b > kCodeByteLast) return std::nullopt;
        index = index * kCodeAlphabetSize + (b - kCodeByteFirst);
    }
    std::uint64_t offset = 0;
    for (std::size_t len = 1; len < code.size(); ++len) offset += code_space(static_cast<int>(len));
    return offset + index;
}

Dictionary Dictionary::build(const std::vector<ByteView>& corpus, const DictConfig& cfg) {
    std::unordered_map<std::string, std::uint64_t> counts;
    std::string cur;
    for (ByteView stream : corpus) {
        cur.clear();
        for (std::uint8_t b : stream) {
            if (is_ascii_letter(b)) {
                cur.push_back(static_cast<char>(b));
            } else {
                if (cur.size() >= 2) ++counts[cur];
                cur.clear();
            }
        }
        if (cur.size() >= 2) ++counts[cur];
    }

    std::vector<std::pair<std::string, std::uint64_t>> ranked;
    ranked.reserve(counts.size());
    for (auto& [word, n] : counts)
        if (n >= cfg.min_frequency) ranked.emplace_back(word, n);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    std::uint64_t cap = code_capacity(cfg.max_code_length);
    if (ranked.size() > cap) ranked.resize(cap);

    std::vector<std::string> words;
    words.reserve(ranked.size());
    for (auto& [word, n] : ranked) words.push_back(std::move(word));
    return from_words(std::move(words));
}

Dictionary Dictionary::from_words(std::vector<std::string> words) {
    Dictionary d;
    d.words_ = std::move(words);
    d.rank_of_.reserve(d.words_.size());
    for (std::size_t r = 0; r < d.words_.size(); ++r)
        d.rank_of_.emplace(d.words_[r], static_cast<std::uint32_t>(r));
    d.checksum_ = checksum_of_words(d.words_);
    return d;
}

std::optional<std::uint32_t> Dictionary::rank_of(std::string_view word) const {
    auto it = rank_of_.find(std::string(word));
    if (it == rank_of_.end()) return std::nullopt;
    return it->second;
}

std::optional<CodeWord> Dictionary::code_of(std::string_view word) const {
    auto r = rank_of(word);
    if (!r) return std::nullopt;
    return assign_code(*r);
}

std::optional<std::string_view> Dictionary::word_of(ByteView code) const {
    auto rank = code_to_rank(code);
    if (!rank || *rank >= words_.size()) return std::nullopt;
    return words_[*rank];
}

void Dictionary::save(std::ostream& out) const {
    out << kDictHeader << '\n';
    out << words_.size() << '\n';
    for (const auto& w : words_) out << w << '\n';
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum_));
    out << hex << '\n';
    if (!out) throw DataError("dictionary write failed");
}

Dictionary Dictionary::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kDictHeader)
        throw DictError(DictError::Kind::BadHeader, "bad dictionary header: \"" + line + "\"");

    if (!std::getline(in, line))
        throw DictError(DictError::Kind::CountMismatch, "missing word count line");
    std::uint64_t count = 0;
    auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), count);
    if (ec != std::errc{} || p != line.data() + line.size())
        throw DictError(DictError::Kind::BadHeader, "bad word count line: \"" + line + "\"");

    std::vector<std::string> words;
    words.reserve(count);
    std::unordered_map<std::string, bool> seen;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!std::getline(in, line))
            throw DictError(DictError::Kind::CountMismatch,
                            "dictionary ends after " + std::to_string(i) + " of " +
                                std::to_string(count) + " words");
        if (!valid_word(line))
            throw DictError(DictError::Kind::IllegalCharacter,
                            "illegal word at rank " + std::to_string(i) + ": \"" + line + "\"");
        if (!seen.emplace(line, true).second)
            throw DictError(DictError::Kind::DuplicateWord, "duplicate word: \"" + line + "\"");
        words.push_back(line);
    }

    if (!std::getline(in, line))
        throw DictError(DictError::Kind::CountMismatch, "missing checksum line");
    std::uint64_t stored = 0;
    auto [cp, cec] = std::from_chars(line.data(), line.data() + line.size(), stored, 16);
    if (cec != std::errc{} || line.size() != 16 || cp != line.data() + line.size())
        throw DictError(DictError::Kind::ChecksumMismatch, "bad checksum line: \"" + line + "\"");

    Dictionary d = from_words(std::move(words));
    if (d.checksum_ != stored)
        throw DictError(DictError::Kind::ChecksumMismatch, "dictionary checksum mismatch");
    return d;
}

}  // namespace idbe
