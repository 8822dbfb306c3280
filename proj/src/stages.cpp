#include "idbe/stages.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

namespace idbe {

// ---------------------------------------------------------------- MTF

Bytes mtf_encode(ByteView data) {
    std::array<std::uint8_t, 256> list;
    std::iota(list.begin(), list.end(), 0);
    Bytes out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        std::uint8_t b = data[i];
        std::size_t pos = 0;
        while (list[pos] != b) ++pos;
        out[i] = static_cast<std::uint8_t>(pos);
        std::memmove(list.data() + 1, list.data(), pos);
        list[0] = b;
    }
    return out;
}

Bytes mtf_decode(ByteView data) {
    std::array<std::uint8_t, 256> list;
    std::iota(list.begin(), list.end(), 0);
    Bytes out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        std::uint8_t pos = data[i];
        std::uint8_t b = list[pos];
        out[i] = b;
        std::memmove(list.data() + 1, list.data(), pos);
        list[0] = b;
    }
    return out;
}

// ---------------------------------------------------------------- RLE0

namespace {

void emit_run(std::vector<Symbol>& out, std::uint64_t n) {
    // n+1 in binary, LSB first, most significant 1 dropped.
    std::uint64_t v = n + 1;
    while (v > 1) {
        out.push_back((v & 1) ? kRunB : kRunA);
        v >>= 1;
    }
}

}  // namespace

std::vector<Symbol> rle0_encode(ByteView data) {
    std::vector<Symbol> out;
    out.reserve(data.size());
    std::size_t i = 0;
    while (i < data.size()) {
        if (data[i] == 0) {
            std::uint64_t run = 0;
            while (i < data.size() && data[i] == 0) ++run, ++i;
            emit_run(out, run);
        } else {
            out.push_back(static_cast<Symbol>(data[i] + 1));
            ++i;
        }
    }
    return out;
}

Bytes rle0_decode(const std::vector<Symbol>& symbols) {
    Bytes out;
    out.reserve(symbols.size());
    std::size_t i = 0;
    while (i < symbols.size()) {
        Symbol s = symbols[i];
        if (s <= kRunB) {
            std::uint64_t v = 0;
            int bit = 0;
            while (i < symbols.size() && symbols[i] <= kRunB) {
                if (symbols[i] == kRunB) v |= 1ull << bit;
                ++bit, ++i;
            }
            v |= 1ull << bit;  // restore the dropped most significant bit
            out.insert(out.end(), v - 1, 0);
        } else {
            if (s > 256) throw DataError("RLE0 symbol out of range");
            out.push_back(static_cast<std::uint8_t>(s - 1));
            ++i;
        }
    }
    return out;
}

// ------------------------------------------------------- entropy coder

namespace {

constexpr int kSymbols = 258;
constexpr std::uint32_t kIncrement = 16;
constexpr std::uint32_t kRescaleThreshold = 1u << 15;

constexpr std::uint32_t kTop = 0x80000000u;
constexpr std::uint32_t kBottom = 0x40000000u;

class FreqModel {
public:
    FreqModel() {
        freq_.fill(1);
        total_ = kSymbols;
    }

    std::uint32_t total() const { return total_; }

    std::uint32_t cum_low(Symbol s) const {
        std::uint32_t c = 0;
        for (Symbol i = 0; i < s; ++i) c += freq_[i];
        return c;
    }

    std::uint32_t freq(Symbol s) const { return freq_[s]; }

    Symbol find(std::uint32_t scaled, std::uint32_t& low, std::uint32_t& high) const {
        std::uint32_t c = 0;
        for (Symbol s = 0; s < kSymbols; ++s) {
            if (scaled < c + freq_[s]) {
                low = c;
                high = c + freq_[s];
                return s;
            }
            c += freq_[s];
        }
        throw DataError("arithmetic decoder: scaled value out of range");
    }

    void update(Symbol s) {
        freq_[s] += kIncrement;
        total_ += kIncrement;
        if (total_ > kRescaleThreshold) {
            total_ = 0;
            for (auto& f : freq_) {
                f = (f + 1) / 2;
                total_ += f;
            }
        }
    }

private:
    std::array<std::uint32_t, kSymbols> freq_;
    std::uint32_t total_;
};

class BitWriter {
public:
    void put(int bit) {
        cur_ = static_cast<std::uint8_t>((cur_ << 1) | bit);
        if (++nbits_ == 8) {
            out_.push_back(cur_);
            cur_ = 0;
            nbits_ = 0;
        }
    }

    Bytes finish() {
        if (nbits_ > 0) out_.push_back(static_cast<std::uint8_t>(cur_ << (8 - nbits_)));
        return std::move(out_);
    }

private:
    Bytes out_;
    std::uint8_t cur_ = 0;
    int nbits_ = 0;
};

class BitReader {
public:
    explicit BitReader(ByteView data) : data_(data) {}

    // Reads 0 past the end; consumed() lets callers bound runaway decodes.
    int get() {
        ++consumed_;
        if (pos_ >= data_.size() * 8) return 0;
        int bit = (data_[pos_ / 8] >> (7 - pos_ % 8)) & 1;
        ++pos_;
        return bit;
    }

    std::uint64_t consumed() const { return consumed_; }

private:
    ByteView data_;
    std::size_t pos_ = 0;
    std::uint64_t consumed_ = 0;
};

}  // namespace

Bytes entropy_encode(const std::vector<Symbol>& symbols) {
    FreqModel model;
    BitWriter bits;
    std::uint32_t low = 0, high = 0xFFFFFFFFu;
    std::uint64_t pending = 0;

    auto put_with_pending = [&](int bit) {
        bits.put(bit);
        for (; pending > 0; --pending) bits.put(!bit);
    };

    auto encode_symbol = [&](Symbol s) {
        std::uint32_t cum_low = model.cum_low(s);
        std::uint32_t cum_high = cum_low + model.freq(s);
        std::uint64_t range = static_cast<std::uint64_t>(high) - low + 1;
        high = low + static_cast<std::uint32_t>(range * cum_high / model.total()) - 1;
        low = low + static_cast<std::uint32_t>(range * cum_low / model.total());
        for (;;) {
            if (high < kTop) {
                put_with_pending(0);
            } else if (low >= kTop) {
                put_with_pending(1);
                low -= kTop;
                high -= kTop;
            } else if (low >= kBottom && high < kTop + kBottom) {
                ++pending;
                low -= kBottom;
                high -= kBottom;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
        }
        model.update(s);
    };

    for (Symbol s : symbols) {
        if (s >= kEob) throw DataError("entropy symbol out of range");
        encode_symbol(s);
    }
    encode_symbol(kEob);

    // Disambiguate the final interval.
    ++pending;
    put_with_pending(low >= kBottom ? 1 : 0);
    return bits.finish();
}

std::vector<Symbol> entropy_decode(ByteView payload) {
    FreqModel model;
    BitReader bits(payload);
    std::uint32_t low = 0, high = 0xFFFFFFFFu, value = 0;
    for (int i = 0; i < 32; ++i) value = (value << 1) | bits.get();

    std::vector<Symbol> out;
    const std::uint64_t bit_budget = payload.size() * 8ull + 64;
    for (;;) {
        if (bits.consumed() > bit_budget + 32)
            throw DataError("corrupt entropy payload: no end-of-block symbol");
        std::uint64_t range = static_cast<std::uint64_t>(high) - low + 1;
        std::uint32_t scaled = static_cast<std::uint32_t>(
            ((static_cast<std::uint64_t>(value) - low + 1) * model.total() - 1) / range);
        std::uint32_t cum_low, cum_high;
        Symbol s = model.find(scaled, cum_low, cum_high);
        high = low + static_cast<std::uint32_t>(range * cum_high / model.total()) - 1;
        low = low + static_cast<std::uint32_t>(range * cum_low / model.total());
        for (;;) {
            if (high < kTop) {
                // nothing
            } else if (low >= kTop) {
                low -= kTop;
                high -= kTop;
                value -= kTop;
            } else if (low >= kBottom && high < kTop + kBottom) {
                low -= kBottom;
                high -= kBottom;
                value -= kBottom;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | bits.get();
        }
        model.update(s);
        if (s == kEob) break;
        out.push_back(s);
    }
    return out;
}

}  // namespace idbe
