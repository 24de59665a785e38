#include "sealkit/partition.hpp"

#include <stdexcept>

#include "sealkit/keyed_random.hpp"

namespace sealkit {

namespace {

// Count-feedback band: inside it the 1-in-5 draw decides alone; outside
// it the draw threshold moves one step so the 4:1 count ratio recovers
// from anchors that could not host an 8x8 block.
constexpr long kFeedbackBand = 16;

}  // namespace

Partition partition(int width, int height, std::uint64_t k1) {
    if (width < 8 || height < 8 || width % 8 != 0 || height % 8 != 0)
        throw std::invalid_argument("partition: dimensions must be positive multiples of 8");

    const int cw = width / 4;
    const int ch = height / 4;
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(cw) * ch, 0);
    const auto cell = [&](int cx, int cy) -> std::uint8_t& {
        return covered[static_cast<std::size_t>(cy) * cw + cx];
    };
    const auto edge = [&](int cx, int cy) { return cx == cw - 1 || cy == ch - 1; };

    Partition part;
    part.width = width;
    part.height = height;
    // Anchors on the image edge can never host an 8x8 block; they are
    // pre-counted as pending 4x4 blocks so the feedback sees them coming.
    long pending = cw + ch - 1;

    KeyedStream stream = seed_stream(k1);
    for (int cy = 0; cy < ch; ++cy) {
        for (int cx = 0; cx < cw; ++cx) {
            if (cell(cx, cy)) continue;
            const std::uint64_t u = next_below(stream, 5);
            const bool fits = cx + 1 < cw && cy + 1 < ch && !cell(cx + 1, cy) &&
                              !cell(cx, cy + 1) && !cell(cx + 1, cy + 1);
            const long deficit =
                static_cast<long>(part.b4.size()) + pending - 4 * static_cast<long>(part.b8.size());
            const std::uint64_t threshold = deficit > kFeedbackBand   ? 2
                                            : deficit < -kFeedbackBand ? 0
                                                                       : 1;
            if (u < threshold && fits) {
                part.b8.push_back({cx * 4, cy * 4, 8});
                cell(cx, cy) = cell(cx + 1, cy) = cell(cx, cy + 1) = cell(cx + 1, cy + 1) = 1;
                pending -= edge(cx + 1, cy) + edge(cx, cy + 1) + edge(cx + 1, cy + 1);
            } else {
                part.b4.push_back({cx * 4, cy * 4, 4});
                cell(cx, cy) = 1;
                pending -= edge(cx, cy);
            }
        }
    }
    part.m = std::min(part.b8.size(), part.b4.size() / 4);
    return part;
}

std::vector<std::array<BlockRef, 4>> group_b4_into_virtual8(const Partition& part) {
    std::vector<std::array<BlockRef, 4>> groups;
    groups.reserve(part.m);
    for (std::size_t i = 0; i < part.m; ++i)
        groups.push_back({part.b4[4 * i], part.b4[4 * i + 1], part.b4[4 * i + 2], part.b4[4 * i + 3]});
    return groups;
}

std::array<BlockRef, 4> quadrants(const BlockRef& block) {
    if (block.size != 8) throw std::domain_error("quadrants: block size must be 8");
    return {BlockRef{block.x, block.y, 4}, BlockRef{block.x + 4, block.y, 4},
            BlockRef{block.x, block.y + 4, 4}, BlockRef{block.x + 4, block.y + 4, 4}};
}

}  // namespace sealkit
