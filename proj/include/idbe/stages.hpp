#pragma once

#include <cstdint>
#include <vector>

#include "idbe/common.hpp"

namespace idbe {

// Move-to-front over the full byte alphabet, recency list initialized 0..255.
Bytes mtf_encode(ByteView data);
Bytes mtf_decode(ByteView data);

// Zero-run-length symbols. A maximal run of n zero bytes becomes the bits of
// n+1, least significant first with the final 1 bit dropped, as RUNA/RUNB;
// nonzero byte v becomes symbol v+1.
using Symbol = std::uint16_t;
inline constexpr Symbol kRunA = 0;
inline constexpr Symbol kRunB = 1;
inline constexpr Symbol kEob = 257;  // entropy-layer end-of-block

std::vector<Symbol> rle0_encode(ByteView data);
Bytes rle0_decode(const std::vector<Symbol>& symbols);

// Adaptive order-0 arithmetic coder over symbols 0..257 (257 = end of block,
// appended by the encoder and consumed by the decoder). Model: all counts
// start at 1, +16 per coded symbol, halved (rounding up, floor 1) when the
// total exceeds 2^15.
Bytes entropy_encode(const std::vector<Symbol>& symbols);
std::vector<Symbol> entropy_decode(ByteView payload);

}  // namespace idbe
