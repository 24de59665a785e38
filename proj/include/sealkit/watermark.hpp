#ifndef SEALKIT_WATERMARK_HPP
#define SEALKIT_WATERMARK_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sealkit/image.hpp"
#include "sealkit/keyed_random.hpp"
#include "sealkit/partition.hpp"

namespace sealkit {

inline constexpr double kDefaultQuantStep = 8.0;

// 4-bit reflected gray code of v in [0,15], most significant bit first.
std::array<int, 4> gray_code_4bit(int v);

// Gray code of floor(avg/16), the per-block watermark bits. The average is
// taken over real-valued samples; the index is clamped to [0,15] so an
// average of 255 lands in the closed last interval.
std::array<int, 4> block_bits(std::span<const double> pixels);
std::array<int, 4> block_bits(std::span<const std::uint8_t> pixels);

// Carrier layout shared by embedding and extraction: part-1 bits ride in
// k2-permuted b4 blocks, part-2 bits in k3-permuted quadrants of the
// payload b8 blocks.
struct CarrierPlan {
    Partition part;
    std::vector<BlockRef> part1_carriers;  // 4m blocks
    std::vector<BlockRef> part2_carriers;  // 4m blocks
};

CarrierPlan make_carrier_plan(int width, int height, const SecretKey& key);

// Generates the two-part content-dependent watermark and embeds three
// copies of every bit into the LL_LL/LL_HL/LL_LH coefficients of its
// carrier block. Part 2 is generated from the part-1-modified image.
// Pixels are re-quantized to 8 bits once, at the end.
GrayImage embed(const GrayImage& image, const SecretKey& key, double q = kDefaultQuantStep);

struct BitTriple {
    int b1 = 0;
    int b2 = 0;
    int b3 = 0;
};

struct ExtractionResult {
    Partition part;
    std::vector<BlockRef> part1_carriers;
    std::vector<BlockRef> part2_carriers;
    std::vector<int> part1_reference;       // 4m bits regenerated from b8 blocks
    std::vector<int> part2_reference;       // 4m bits regenerated from virtual groups
    std::vector<BitTriple> part1_extracted; // per carrier: bits from the 3 coefficients
    std::vector<BitTriple> part2_extracted;
};

// Recomputes partition, permutations and reference bits from the received
// image and extracts the three bit copies from every carrier block.
ExtractionResult extract(const GrayImage& image, const SecretKey& key,
                         double q = kDefaultQuantStep);

}  // namespace sealkit

#endif
