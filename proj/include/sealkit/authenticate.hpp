#ifndef SEALKIT_AUTHENTICATE_HPP
#define SEALKIT_AUTHENTICATE_HPP

#include <array>

#include "sealkit/features.hpp"
#include "sealkit/image.hpp"
#include "sealkit/watermark.hpp"

namespace sealkit {

// Absolute differences between one reference bit and its three extracted
// copies.
struct EwTriple {
    int e1 = 0;
    int e2 = 0;
    int e3 = 0;
};

EwTriple ew(int reference, const BitTriple& extracted);

// Sum of the four Ew(1) values of an 8x8 block, mapped to a map pixel.
std::uint8_t xw_block8(const std::array<int, 4>& e1_of_4_bits);

// Severity level 0..3 of one carrier block from its Ew triple.
int vmap_cell(const EwTriple& e);

// Majority vote over the four per-bit levels of an 8x8 block.
std::uint8_t vote_block8(const std::array<int, 4>& levels);

// Full-resolution error maps. xw1/xw2 hold {0,63,127,191,255}, the vmaps
// {0,85,170,255}; xw_comb is the clamped per-pixel root-sum-square.
struct ErrorMapSet {
    GrayImage xw1;
    GrayImage xw2;
    GrayImage vmap1;
    GrayImage vmap2;
    GrayImage xw_comb;
};

// Builds xw1, xw2, vmap1, vmap2 (xw_comb left empty). Reference-side
// values fill the footprints of the blocks the bits were generated from;
// carrier-side values fill the carrier block footprints. Pixels outside
// payload blocks stay 0.
ErrorMapSet assemble_maps(const ExtractionResult& ex);

// Per pixel min(255, round(sqrt(a^2 + b^2))).
GrayImage combine(const GrayImage& xw1, const GrayImage& xw2);

struct AuthResult {
    ErrorMapSet maps;
    FeatureVector features;
};

// extract + assemble + combine + feature extraction in one pass.
AuthResult authenticate(const GrayImage& image, const SecretKey& key,
                        double q = kDefaultQuantStep);

}  // namespace sealkit

#endif
