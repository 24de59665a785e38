#include "sealkit/authenticate.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sealkit {

namespace {

constexpr std::uint8_t kXwLevels[5] = {0, 63, 127, 191, 255};

void fill_block(GrayImage& map, const BlockRef& b, std::uint8_t value) {
    for (int y = 0; y < b.size; ++y)
        for (int x = 0; x < b.size; ++x) map.at(b.x + x, b.y + y) = value;
}

EwTriple ew_at(const std::vector<int>& ref, const std::vector<BitTriple>& ext, std::size_t j) {
    return ew(ref[j], ext[j]);
}

}  // namespace

EwTriple ew(int reference, const BitTriple& extracted) {
    return {std::abs(reference - extracted.b1), std::abs(reference - extracted.b2),
            std::abs(reference - extracted.b3)};
}

std::uint8_t xw_block8(const std::array<int, 4>& e1_of_4_bits) {
    const int sum = e1_of_4_bits[0] + e1_of_4_bits[1] + e1_of_4_bits[2] + e1_of_4_bits[3];
    return kXwLevels[sum];
}

int vmap_cell(const EwTriple& e) {
    if (e.e1 == 0) return (e.e2 == 0 && e.e3 == 0) ? 0 : 1;
    return (e.e2 == 1 && e.e3 == 1) ? 3 : 2;
}

std::uint8_t vote_block8(const std::array<int, 4>& levels) {
    int c[4] = {0, 0, 0, 0};
    for (int lv : levels) ++c[lv];
    if (c[3] + c[2] >= c[1] + c[0]) return c[3] >= c[2] ? 255 : 170;
    return c[1] >= c[0] ? 85 : 0;
}

ErrorMapSet assemble_maps(const ExtractionResult& ex) {
    const Partition& part = ex.part;
    ErrorMapSet maps;
    maps.xw1 = GrayImage(part.width, part.height);
    maps.xw2 = GrayImage(part.width, part.height);
    maps.vmap1 = GrayImage(part.width, part.height);
    maps.vmap2 = GrayImage(part.width, part.height);

    // Part 1, reference side: one value per payload b8 block, expanded over
    // its 8x8 footprint.
    for (std::size_t i = 0; i < part.m; ++i) {
        std::array<int, 4> e1s;
        std::array<int, 4> levels;
        for (int j = 0; j < 4; ++j) {
            const EwTriple e = ew_at(ex.part1_reference, ex.part1_extracted, 4 * i + j);
            e1s[j] = e.e1;
            levels[j] = vmap_cell(e);
        }
        fill_block(maps.xw1, part.b8[i], xw_block8(e1s));
        fill_block(maps.vmap1, part.b8[i], vote_block8(levels));
    }
    // Part 1, carrier side: Ew(1) and the severity level per b4 carrier.
    for (std::size_t j = 0; j < ex.part1_carriers.size(); ++j) {
        const EwTriple e = ew_at(ex.part1_reference, ex.part1_extracted, j);
        fill_block(maps.xw1, ex.part1_carriers[j], static_cast<std::uint8_t>(255 * e.e1));
        fill_block(maps.vmap1, ex.part1_carriers[j], static_cast<std::uint8_t>(85 * vmap_cell(e)));
    }
    // Part 2, reference side: the virtual group's value is broken back into
    // the footprints of its four constituent b4 blocks.
    for (std::size_t g = 0; g < part.m; ++g) {
        std::array<int, 4> e1s;
        std::array<int, 4> levels;
        for (int j = 0; j < 4; ++j) {
            const EwTriple e = ew_at(ex.part2_reference, ex.part2_extracted, 4 * g + j);
            e1s[j] = e.e1;
            levels[j] = vmap_cell(e);
        }
        const std::uint8_t xv = xw_block8(e1s);
        const std::uint8_t vv = vote_block8(levels);
        for (int j = 0; j < 4; ++j) {
            fill_block(maps.xw2, part.b4[4 * g + j], xv);
            fill_block(maps.vmap2, part.b4[4 * g + j], vv);
        }
    }
    // Part 2, carrier side: quadrants inside the payload b8 blocks.
    for (std::size_t j = 0; j < ex.part2_carriers.size(); ++j) {
        const EwTriple e = ew_at(ex.part2_reference, ex.part2_extracted, j);
        fill_block(maps.xw2, ex.part2_carriers[j], static_cast<std::uint8_t>(255 * e.e1));
        fill_block(maps.vmap2, ex.part2_carriers[j], static_cast<std::uint8_t>(85 * vmap_cell(e)));
    }
    return maps;
}

GrayImage combine(const GrayImage& xw1, const GrayImage& xw2) {
    if (xw1.width != xw2.width || xw1.height != xw2.height)
        throw std::domain_error("combine: dimension mismatch");
    GrayImage out(xw1.width, xw1.height);
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        const double a = xw1.samples[i];
        const double b = xw2.samples[i];
        const double v = std::round(std::sqrt(a * a + b * b));
        out.samples[i] = static_cast<std::uint8_t>(v > 255.0 ? 255.0 : v);
    }
    return out;
}

AuthResult authenticate(const GrayImage& image, const SecretKey& key, double q) {
    AuthResult res;
    res.maps = assemble_maps(extract(image, key, q));
    res.maps.xw_comb = combine(res.maps.xw1, res.maps.xw2);
    res.features = feature_vector(res.maps);
    return res;
}

}  // namespace sealkit
