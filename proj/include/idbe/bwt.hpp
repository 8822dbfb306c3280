#pragma once

#include <cstdint>

#include "idbe/common.hpp"

namespace idbe {

struct BwtBlock {
    Bytes data;                       // last column of the sorted rotation matrix
    std::uint32_t primary_index = 0;  // row of the original string

    bool operator==(const BwtBlock&) const = default;
};

// Sorts all cyclic rotations via prefix doubling on the cyclic string;
// O(n log^2 n), good for highly repetitive blocks. Rejects empty blocks.
BwtBlock bwt_forward(ByteView block);

// Reference implementation: materializes and sorts all rotations.
// O(n^2 log n); tests and the kernel benchmark only.
BwtBlock bwt_forward_naive(ByteView block);

// Last-to-first column walk. Throws DataError on an out-of-range
// primary index.
Bytes bwt_inverse(const BwtBlock& b);

}  // namespace idbe
