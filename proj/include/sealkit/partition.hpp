#ifndef SEALKIT_PARTITION_HPP
#define SEALKIT_PARTITION_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace sealkit {

// One block of the partition; (x, y) is the top-left pixel, size is 4 or 8.
struct BlockRef {
    int x = 0;
    int y = 0;
    int size = 4;

    bool operator==(const BlockRef&) const = default;
};

// Key-determined tiling of the image into 8x8 and 4x4 blocks. The first
// m entries of b8 and the first 4m entries of b4 (in the orders defined
// by the downstream permutations) carry watermark payload.
struct Partition {
    std::vector<BlockRef> b8;
    std::vector<BlockRef> b4;
    std::size_t m = 0;  // usable pair count: min(|b8|, |b4|/4)
    int width = 0;
    int height = 0;
};

// Raster-scans the 4x4 anchor grid and draws one pseudo-random number per
// anchor from a k1-seeded stream; 8x8 blocks are chosen on one outcome of
// five, with a small count-feedback band so the final 4x4:8x8 ratio stays
// within the scheme's sub-1% bound. Depends only on (dims, k1).
Partition partition(int width, int height, std::uint64_t k1);

// Virtual 8x8 blocks: four consecutive b4 entries per group, m groups.
std::vector<std::array<BlockRef, 4>> group_b4_into_virtual8(const Partition& part);

// The four 4x4 sub-blocks of an 8x8 block, row-major.
std::array<BlockRef, 4> quadrants(const BlockRef& block);

}  // namespace sealkit

#endif
