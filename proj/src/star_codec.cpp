#include "idbe/star_codec.hpp"

namespace idbe {

namespace {

constexpr std::uint8_t kStar = '*';
constexpr std::uint8_t kEscape = '\\';

// 26^(length-1), saturating; lengths past 14 digits exceed any realistic
// dictionary size.
std::uint64_t group_capacity(std::size_t length) {
    std::uint64_t cap = 1;
    for (std::size_t i = 1; i < length; ++i) {
        if (cap > UINT64_MAX / 26) return UINT64_MAX;
        cap *= 26;
    }
    return cap;
}

}  // namespace

std::string star_pattern(std::uint64_t rank, std::size_t length) {
    if (rank >= group_capacity(length))
        throw std::out_of_range("star pattern rank " + std::to_string(rank) +
                                " exceeds capacity for length " + std::to_string(length));
    std::string pattern(length, '*');
    std::size_t pos = length;
    while (rank > 0) {
        pattern[--pos] = static_cast<char>('a' + rank % 26);
        rank /= 26;
    }
    return pattern;
}

StarDictionary StarDictionary::build(const Dictionary& d) {
    StarDictionary sd;
    for (const auto& word : d.words()) {
        auto& group = sd.groups_[word.size()];
        if (group.size() >= group_capacity(word.size())) continue;  // group full
        std::string pattern = star_pattern(group.size(), word.size());
        group.push_back(word);
        sd.pattern_of_.emplace(word, pattern);
        sd.word_of_pattern_.emplace(std::move(pattern), word);
    }
    return sd;
}

std::optional<std::string_view> StarDictionary::pattern_of(std::string_view word) const {
    auto it = pattern_of_.find(std::string(word));
    if (it == pattern_of_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string_view> StarDictionary::word_of_pattern(std::string_view pattern) const {
    auto it = word_of_pattern_.find(std::string(pattern));
    if (it == word_of_pattern_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::string>& StarDictionary::group(std::size_t length) const {
    static const std::vector<std::string> kEmpty;
    auto it = groups_.find(length);
    return it == groups_.end() ? kEmpty : it->second;
}

Bytes star_encode(ByteView input, const StarDictionary& sd) {
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
            if (auto pat = sd.pattern_of(word)) {
                out.insert(out.end(), pat->begin(), pat->end());
            } else {
                out.insert(out.end(), input.begin() + i, input.begin() + j);
            }
            i = j;
        } else {
            if (b == kStar || b == kEscape) out.push_back(kEscape);
            out.push_back(b);
            ++i;
        }
    }
    return out;
}

Bytes star_decode(ByteView input, const StarDictionary& sd) {
    Bytes out;
    out.reserve(input.size());
    std::string run;  // pending letters/stars, unescaped
    bool run_has_star = false;

    auto flush = [&](std::size_t at) {
        if (run.empty()) return;
        if (run_has_star) {
            auto word = sd.word_of_pattern(run);
            if (!word)
                throw StarStreamError(StarStreamError::Kind::PatternNotFound,
                                      "no word for pattern \"" + run + "\" ending at offset " +
                                          std::to_string(at));
            out.insert(out.end(), word->begin(), word->end());
        } else {
            out.insert(out.end(), run.begin(), run.end());
        }
        run.clear();
        run_has_star = false;
    };

    std::size_t i = 0;
    const std::size_t n = input.size();
    while (i < n) {
        std::uint8_t b = input[i];
        if (b == kEscape) {
            flush(i);
            if (i + 1 >= n || (input[i + 1] != kStar && input[i + 1] != kEscape))
                throw StarStreamError(StarStreamError::Kind::DanglingEscape,
                                      "dangling escape at offset " + std::to_string(i));
            out.push_back(input[i + 1]);
            i += 2;
        } else if (b == kStar || is_ascii_letter(b)) {
            run.push_back(static_cast<char>(b));
            run_has_star |= (b == kStar);
            ++i;
        } else {
            flush(i);
            out.push_back(b);
            ++i;
        }
    }
    flush(n);
    return out;
}

}  // namespace idbe
