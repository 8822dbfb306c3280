#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "idbe/common.hpp"
#include "idbe/dictionary.hpp"

namespace idbe {

// Pattern for the rank-th word of a given length: all '*', with the rank
// written base-26 ('a'=0..'z'=25, most significant first, minimal digits)
// into the trailing positions. Rank 0 is all stars; position 0 stays '*'.
// Throws std::out_of_range when rank >= 26^(length-1).
std::string star_pattern(std::uint64_t rank, std::size_t length);

class StarStreamError : public DataError {
public:
    enum class Kind { PatternNotFound, DanglingEscape };

    StarStreamError(Kind kind, const std::string& msg) : DataError(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class StarDictionary {
public:
    StarDictionary() = default;

    // Groups d's words by length keeping global rank order; patterns assigned
    // by within-group rank. Words past a group's capacity are excluded.
    static StarDictionary build(const Dictionary& d);

    std::optional<std::string_view> pattern_of(std::string_view word) const;
    std::optional<std::string_view> word_of_pattern(std::string_view pattern) const;

    // Words of length `length`, in rank order.
    const std::vector<std::string>& group(std::size_t length) const;
    std::size_t size() const { return pattern_of_.size(); }

private:
    std::map<std::size_t, std::vector<std::string>> groups_;
    std::unordered_map<std::string, std::string> pattern_of_;
    std::unordered_map<std::string, std::string> word_of_pattern_;
};

Bytes star_encode(ByteView input, const StarDictionary& sd);
Bytes star_decode(ByteView input, const StarDictionary& sd);

}  // namespace idbe
