#ifndef SEALKIT_LWT_HPP
#define SEALKIT_LWT_HPP

#include <array>

namespace sealkit {

// Haar lifting pair: predict d = b - a, update s = a + d/2. The inverse
// is exact in real arithmetic.
struct LiftPair {
    double s;
    double d;
};

inline LiftPair lift_pair(double a, double b) {
    const double d = b - a;
    return {a + d / 2.0, d};
}

inline std::array<double, 2> inverse_lift(const LiftPair& p) {
    return {p.s - p.d / 2.0, p.s + p.d / 2.0};
}

// Level-1 subbands of a 4x4 block, each a 2x2 grid (row-major).
struct SubbandSet {
    std::array<double, 4> ll{};
    std::array<double, 4> hl{};
    std::array<double, 4> lh{};
    std::array<double, 4> hh{};
};

// The three embedding coefficients: level-2 approximation of LL, HL, LH.
struct CarrierTriple {
    double ll_ll = 0.0;
    double ll_hl = 0.0;
    double ll_lh = 0.0;
};

struct BlockAnalysis {
    SubbandSet subbands;
    CarrierTriple carriers;
};

// Normalization of the cascade. Each 1-D lifting step is rescaled to the
// orthogonal Haar convention (s*sqrt2, d/sqrt2), so ll_ll tracks 4x the
// block mean before the final carrier scaling. The carrier scales set the
// semi-fragility operating point: the approximation carrier is kept
// slightly below unit gain so it rides out JPEG requantization, the
// detail carriers are boosted so mild recompression is still detectable.
inline constexpr double kApproxCarrierScale = 0.9;
inline constexpr double kDetailCarrierScale = 2.5;

// Two-level lifting analysis of one 4x4 block (row-major, 16 samples).
BlockAnalysis analyze_block(const std::array<double, 16>& block);

// Exact inverse; carriers may have been modified.
std::array<double, 16> synthesize_block(const SubbandSet& subbands, const CarrierTriple& carriers);

}  // namespace sealkit

#endif
