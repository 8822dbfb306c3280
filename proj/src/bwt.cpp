#include "idbe/bwt.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace idbe {

namespace {

struct KeyedIndex {
    std::uint64_t key;
    std::uint32_t index;
};

}  // namespace

BwtBlock bwt_forward(ByteView block) {
    if (block.empty()) throw DataError("BWT of an empty block");
    const std::uint32_t n = static_cast<std::uint32_t>(block.size());

    // Prefix doubling over the cyclic string: rank rotations by their first
    // k characters, refine with the rank at offset +k (mod n) each round.
    std::vector<std::uint32_t> rank(n), next_rank(n);
    std::vector<KeyedIndex> keyed(n);
    for (std::uint32_t i = 0; i < n; ++i) rank[i] = block[i];

    for (std::uint32_t k = 1;; k *= 2) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            std::uint32_t second = rank[(i + k) % n];
            keyed[i].key = (static_cast<std::uint64_t>(rank[i]) << 32) | second;
            keyed[i].index = static_cast<std::uint32_t>(i);
        }
        std::sort(keyed.begin(), keyed.end(),
                  [](const KeyedIndex& a, const KeyedIndex& b) { return a.key < b.key; });

        next_rank[keyed[0].index] = 0;
        std::uint32_t r = 0;
        for (std::uint32_t i = 1; i < n; ++i) {
            if (keyed[i].key != keyed[i - 1].key) ++r;
            next_rank[keyed[i].index] = r;
        }
        rank.swap(next_rank);
        if (r == n - 1 || k >= n) break;  // all distinct, or fully periodic input
    }

    BwtBlock out;
    out.data.resize(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        std::uint32_t start = keyed[i].index;
        out.data[i] = block[(start + n - 1) % n];
        if (start == 0) out.primary_index = static_cast<std::uint32_t>(i);
    }
    return out;
}

BwtBlock bwt_forward_naive(ByteView block) {
    if (block.empty()) throw DataError("BWT of an empty block");
    const std::size_t n = block.size();
    std::vector<std::uint32_t> rotations(n);
    std::iota(rotations.begin(), rotations.end(), 0);
    std::sort(rotations.begin(), rotations.end(), [&](std::uint32_t a, std::uint32_t b) {
        for (std::size_t i = 0; i < n; ++i) {
            std::uint8_t ca = block[(a + i) % n];
            std::uint8_t cb = block[(b + i) % n];
            if (ca != cb) return ca < cb;
        }
        return a < b;  // equal rotations: periodic input, order is irrelevant
    });

    BwtBlock out;
    out.data.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.data[i] = block[(rotations[i] + n - 1) % n];
        if (rotations[i] == 0) out.primary_index = static_cast<std::uint32_t>(i);
    }
    return out;
}

Bytes bwt_inverse(const BwtBlock& b) {
    const std::size_t n = b.data.size();
    if (b.primary_index >= n) throw DataError("BWT primary index out of range");

    // LF mapping: row i of the sorted matrix is preceded (cyclically) by the
    // row holding the same occurrence of b.data[i] in the first column.
    std::array<std::uint32_t, 256> counts{};
    for (std::uint8_t c : b.data) ++counts[c];
    std::array<std::uint32_t, 256> first{};
    std::uint32_t sum = 0;
    for (int c = 0; c < 256; ++c) {
        first[c] = sum;
        sum += counts[c];
    }
    std::vector<std::uint32_t> lf(n);
    for (std::size_t i = 0; i < n; ++i) lf[i] = first[b.data[i]]++;

    Bytes out(n);
    std::uint32_t row = b.primary_index;
    for (std::size_t pos = n; pos-- > 0;) {
        out[pos] = b.data[row];
        row = lf[row];
    }
    return out;
}

}  // namespace idbe
