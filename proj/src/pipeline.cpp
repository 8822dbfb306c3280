#include "idbe/pipeline.hpp"

#include <algorithm>

#include "idbe/bwt.hpp"
#include "idbe/idbe_codec.hpp"
#include "idbe/stages.hpp"
#include "idbe/star_codec.hpp"

namespace idbe {

namespace {

constexpr char kMagic[5] = {'I', 'D', 'B', 'E', '1'};
constexpr std::uint8_t kVersion = 1;

void put_u32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u64(Bytes& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
    put_u32(out, static_cast<std::uint32_t>(v));
}

class Reader {
public:
    explicit Reader(ByteView data) : data_(data) {}

    std::size_t offset() const { return pos_; }
    bool done() const { return pos_ >= data_.size(); }

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = (static_cast<std::uint32_t>(data_[pos_]) << 24) |
                          (static_cast<std::uint32_t>(data_[pos_ + 1]) << 16) |
                          (static_cast<std::uint32_t>(data_[pos_ + 2]) << 8) |
                          static_cast<std::uint32_t>(data_[pos_ + 3]);
        pos_ += 4;
        return v;
    }

    std::uint64_t u64() {
        std::uint64_t hi = u32();
        return (hi << 32) | u32();
    }

    ByteView take(std::size_t n) {
        need(n);
        ByteView v = data_.subspan(pos_, n);
        pos_ += n;
        return v;
    }

private:
    void need(std::size_t n) const {
        if (pos_ + n > data_.size())
            throw ContainerError(ContainerError::Kind::Truncated,
                                 "container truncated at offset " + std::to_string(pos_));
    }

    ByteView data_;
    std::size_t pos_ = 0;
};

struct EncodedBlock {
    std::uint32_t raw_length;
    std::uint32_t primary_index;
    Bytes payload;
};

EncodedBlock encode_block(ByteView block) {
    BwtBlock bwt = bwt_forward(block);
    Bytes mtf = mtf_encode(bwt.data);
    std::vector<Symbol> symbols = rle0_encode(mtf);
    EncodedBlock out;
    out.raw_length = static_cast<std::uint32_t>(block.size());
    out.primary_index = bwt.primary_index;
    out.payload = entropy_encode(symbols);
    return out;
}

Bytes decode_block(std::uint32_t raw_length, std::uint32_t primary_index, ByteView payload) {
    std::vector<Symbol> symbols = entropy_decode(payload);
    Bytes mtf = rle0_decode(symbols);
    if (mtf.size() != raw_length)
        throw ContainerError(ContainerError::Kind::CorruptBlock,
                             "block decodes to " + std::to_string(mtf.size()) +
                                 " bytes, expected " + std::to_string(raw_length));
    BwtBlock bwt{mtf_decode(mtf), primary_index};
    return bwt_inverse(bwt);
}

}  // namespace

Bytes compress(ByteView input, const PipelineOptions& opts, const Dictionary* d) {
    if ((opts.pre_transform != PreTransform::None) != (d != nullptr))
        throw std::invalid_argument("dictionary required iff a pre-transform is selected");
    if (opts.block_size < kMinBlockSize || opts.block_size > kMaxBlockSize)
        throw std::invalid_argument("block size out of range");

    Bytes transformed;
    ByteView data = input;
    switch (opts.pre_transform) {
        case PreTransform::None:
            break;
        case PreTransform::Star:
            transformed = star_encode(input, StarDictionary::build(*d));
            data = transformed;
            break;
        case PreTransform::Idbe:
            transformed = idbe_encode(input, *d);
            data = transformed;
            break;
    }

    const std::size_t block_count = (data.size() + opts.block_size - 1) / opts.block_size;
    std::vector<EncodedBlock> blocks(block_count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(block_count); ++b) {
        try {
            std::size_t begin = b * opts.block_size;
            std::size_t len = std::min(opts.block_size, data.size() - begin);
            blocks[b] = encode_block(data.subspan(begin, len));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    Bytes out;
    out.insert(out.end(), kMagic, kMagic + 5);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(opts.pre_transform));
    put_u64(out, d ? d->checksum() : 0);
    put_u32(out, static_cast<std::uint32_t>(opts.block_size));
    for (const EncodedBlock& blk : blocks) {
        put_u32(out, blk.raw_length);
        put_u32(out, blk.primary_index);
        put_u32(out, static_cast<std::uint32_t>(blk.payload.size()));
        out.insert(out.end(), blk.payload.begin(), blk.payload.end());
    }
    put_u32(out, 0);  // record list terminator
    return out;
}

Bytes decompress(ByteView container, const DictResolver& resolver) {
    Reader r(container);
    ByteView magic = r.take(5);
    if (!std::equal(magic.begin(), magic.end(), kMagic))
        throw ContainerError(ContainerError::Kind::BadMagic, "bad magic at offset 0");
    std::uint8_t version = r.u8();
    if (version != kVersion)
        throw ContainerError(ContainerError::Kind::VersionMismatch,
                             "unsupported container version " + std::to_string(version));
    std::uint8_t method = r.u8();
    if (method > static_cast<std::uint8_t>(PreTransform::Idbe))
        throw ContainerError(ContainerError::Kind::CorruptBlock,
                             "unknown method tag " + std::to_string(method));
    std::uint64_t dict_checksum = r.u64();
    r.u32();  // block_size: informational, blocks carry their own lengths

    const Dictionary* d = nullptr;
    if (method != 0) {
        if (resolver) d = resolver(dict_checksum);
        if (!d || d->checksum() != dict_checksum)
            throw ContainerError(ContainerError::Kind::DictionaryMismatch,
                                 "no dictionary with the container's checksum");
    }

    struct RawBlock {
        std::uint32_t raw_length;
        std::uint32_t primary_index;
        ByteView payload;
    };
    std::vector<RawBlock> blocks;
    for (;;) {
        std::uint32_t raw_length = r.u32();
        if (raw_length == 0) break;
        std::uint32_t primary_index = r.u32();
        std::uint32_t payload_length = r.u32();
        blocks.push_back({raw_length, primary_index, r.take(payload_length)});
    }

    std::vector<Bytes> decoded(blocks.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.size()); ++b) {
        try {
            decoded[b] = decode_block(blocks[b].raw_length, blocks[b].primary_index,
                                      blocks[b].payload);
        } catch (const ContainerError&) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        } catch (const DataError& e) {
#pragma omp critical
            if (!failure)
                failure = std::make_exception_ptr(
                    ContainerError(ContainerError::Kind::CorruptBlock, e.what()));
        }
    }
    if (failure) std::rethrow_exception(failure);

    Bytes data;
    for (const Bytes& blk : decoded) data.insert(data.end(), blk.begin(), blk.end());

    switch (static_cast<PreTransform>(method)) {
        case PreTransform::None:
            return data;
        case PreTransform::Star:
            return star_decode(data, StarDictionary::build(*d));
        case PreTransform::Idbe:
            return idbe_decode(data, *d);
    }
    return data;  // unreachable
}

}  // namespace idbe
