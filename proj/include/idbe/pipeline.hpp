#pragma once

#include <cstdint>
#include <functional>

#include "idbe/common.hpp"
#include "idbe/dictionary.hpp"

namespace idbe {

enum class PreTransform : std::uint8_t { None = 0, Star = 1, Idbe = 2 };

inline constexpr std::size_t kMinBlockSize = 1024;
inline constexpr std::size_t kMaxBlockSize = 16ull << 20;
inline constexpr std::size_t kDefaultBlockSize = 1ull << 20;

struct PipelineOptions {
    PreTransform pre_transform = PreTransform::None;
    std::size_t block_size = kDefaultBlockSize;
};

class ContainerError : public DataError {
public:
    enum class Kind {
        BadMagic,
        VersionMismatch,
        DictionaryMismatch,
        CorruptBlock,
        Truncated,
    };

    ContainerError(Kind kind, const std::string& msg) : DataError(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Pre-transform applied file-wide, then blockwise BWT | MTF | RLE0 | ARI.
// `d` must be non-null iff pre_transform != None.
Bytes compress(ByteView input, const PipelineOptions& opts, const Dictionary* d = nullptr);

// Maps the stored dictionary checksum to a Dictionary; only called when the
// container's method needs one. Returning nullptr means "unresolvable".
using DictResolver = std::function<const Dictionary*(std::uint64_t checksum)>;

Bytes decompress(ByteView container, const DictResolver& resolver = {});

}  // namespace idbe
