#include "sealkit/watermark.hpp"

#include <cmath>
#include <stdexcept>

#include "sealkit/lwt.hpp"
#include "sealkit/qim.hpp"

namespace sealkit {

namespace {

std::array<double, 16> read_block4(const RealImage& im, const BlockRef& b) {
    std::array<double, 16> out;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) out[4 * y + x] = im.at(b.x + x, b.y + y);
    return out;
}

void write_block4(RealImage& im, const BlockRef& b, const std::array<double, 16>& v) {
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) im.at(b.x + x, b.y + y) = v[4 * y + x];
}

double block_average(const RealImage& im, const BlockRef& b) {
    double sum = 0.0;
    for (int y = 0; y < b.size; ++y)
        for (int x = 0; x < b.size; ++x) sum += im.at(b.x + x, b.y + y);
    return sum / (b.size * b.size);
}

std::array<int, 4> bits_from_average(double avg) {
    int idx = static_cast<int>(std::floor(avg / 16.0));
    if (idx < 0) idx = 0;
    if (idx > 15) idx = 15;  // avg = 255 falls in the closed last interval
    return gray_code_4bit(idx);
}

// Reference bits for part 1 (payload b8 blocks) or part 2 (virtual groups
// of four consecutive b4 blocks), 4 bits per unit, unit-major order.
std::vector<int> part1_bits(const RealImage& im, const Partition& part) {
    std::vector<int> bits;
    bits.reserve(4 * part.m);
    for (std::size_t i = 0; i < part.m; ++i)
        for (int b : bits_from_average(block_average(im, part.b8[i]))) bits.push_back(b);
    return bits;
}

std::vector<int> part2_bits(const RealImage& im, const Partition& part) {
    std::vector<int> bits;
    bits.reserve(4 * part.m);
    for (std::size_t g = 0; g < part.m; ++g) {
        double sum = 0.0;
        for (int j = 0; j < 4; ++j) sum += block_average(im, part.b4[4 * g + j]);
        for (int b : bits_from_average(sum / 4.0)) bits.push_back(b);
    }
    return bits;
}

void embed_into_carriers(RealImage& im, const std::vector<BlockRef>& carriers,
                         const std::vector<int>& bits, double q) {
    for (std::size_t j = 0; j < carriers.size(); ++j) {
        BlockAnalysis a = analyze_block(read_block4(im, carriers[j]));
        a.carriers.ll_ll = embed_bit(a.carriers.ll_ll, bits[j], q);
        a.carriers.ll_hl = embed_bit(a.carriers.ll_hl, bits[j], q);
        a.carriers.ll_lh = embed_bit(a.carriers.ll_lh, bits[j], q);
        write_block4(im, carriers[j], synthesize_block(a.subbands, a.carriers));
    }
}

std::vector<BitTriple> extract_from_carriers(const RealImage& im,
                                             const std::vector<BlockRef>& carriers, double q) {
    std::vector<BitTriple> out;
    out.reserve(carriers.size());
    for (const BlockRef& b : carriers) {
        const CarrierTriple c = analyze_block(read_block4(im, b)).carriers;
        out.push_back({extract_bit(c.ll_ll, q), extract_bit(c.ll_hl, q), extract_bit(c.ll_lh, q)});
    }
    return out;
}

}  // namespace

std::array<int, 4> gray_code_4bit(int v) {
    if (v < 0 || v > 15) throw std::domain_error("gray_code_4bit: value out of [0,15]");
    const int g = v ^ (v >> 1);
    return {(g >> 3) & 1, (g >> 2) & 1, (g >> 1) & 1, g & 1};
}

std::array<int, 4> block_bits(std::span<const double> pixels) {
    if (pixels.empty()) throw std::domain_error("block_bits: empty pixel list");
    double sum = 0.0;
    for (double p : pixels) sum += p;
    return bits_from_average(sum / static_cast<double>(pixels.size()));
}

std::array<int, 4> block_bits(std::span<const std::uint8_t> pixels) {
    if (pixels.empty()) throw std::domain_error("block_bits: empty pixel list");
    double sum = 0.0;
    for (std::uint8_t p : pixels) sum += p;
    return bits_from_average(sum / static_cast<double>(pixels.size()));
}

CarrierPlan make_carrier_plan(int width, int height, const SecretKey& key) {
    CarrierPlan plan;
    plan.part = partition(width, height, key.k1);
    const std::size_t m = plan.part.m;

    KeyedStream s2 = seed_stream(key.k2);
    const auto perm2 = keyed_permutation(s2, static_cast<std::uint32_t>(plan.part.b4.size()));
    plan.part1_carriers.reserve(4 * m);
    for (std::size_t j = 0; j < 4 * m; ++j) plan.part1_carriers.push_back(plan.part.b4[perm2[j]]);

    std::vector<BlockRef> quads;
    quads.reserve(4 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (const BlockRef& qd : quadrants(plan.part.b8[i])) quads.push_back(qd);
    KeyedStream s3 = seed_stream(key.k3);
    const auto perm3 = keyed_permutation(s3, static_cast<std::uint32_t>(quads.size()));
    plan.part2_carriers.reserve(4 * m);
    for (std::size_t j = 0; j < 4 * m; ++j) plan.part2_carriers.push_back(quads[perm3[j]]);
    return plan;
}

GrayImage quantize_to_gray(const RealImage& im) {
    GrayImage out(im.width, im.height);
    for (std::size_t i = 0; i < im.samples.size(); ++i) {
        const double r = std::round(im.samples[i]);
        out.samples[i] = static_cast<std::uint8_t>(r < 0.0 ? 0.0 : r > 255.0 ? 255.0 : r);
    }
    return out;
}

GrayImage embed(const GrayImage& image, const SecretKey& key, double q) {
    if (q <= 0.0) throw std::domain_error("embed: q must be positive");
    const CarrierPlan plan = make_carrier_plan(image.width, image.height, key);
    RealImage work(image);

    // Part 1: bits from the original b8 blocks, carried by permuted b4 blocks.
    embed_into_carriers(work, plan.part1_carriers, part1_bits(work, plan.part), q);
    // Part 2: bits from the part-1-modified virtual groups, carried by
    // permuted quadrants of the payload b8 blocks.
    embed_into_carriers(work, plan.part2_carriers, part2_bits(work, plan.part), q);

    return quantize_to_gray(work);
}

ExtractionResult extract(const GrayImage& image, const SecretKey& key, double q) {
    if (q <= 0.0) throw std::domain_error("extract: q must be positive");
    const CarrierPlan plan = make_carrier_plan(image.width, image.height, key);
    const RealImage received(image);

    ExtractionResult out;
    out.part = plan.part;
    out.part1_carriers = plan.part1_carriers;
    out.part2_carriers = plan.part2_carriers;
    out.part1_reference = part1_bits(received, plan.part);
    out.part2_reference = part2_bits(received, plan.part);
    out.part1_extracted = extract_from_carriers(received, plan.part1_carriers, q);
    out.part2_extracted = extract_from_carriers(received, plan.part2_carriers, q);
    return out;
}

}  // namespace sealkit
