#include "sealkit/lwt.hpp"

#include <cmath>

namespace sealkit {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// One normalized 1-D step: lifting followed by the orthogonal rescale.
inline void fwd(double a, double b, double& s, double& d) {
    const LiftPair p = lift_pair(a, b);
    s = p.s * kSqrt2;
    d = p.d / kSqrt2;
}

inline void inv(double s, double d, double& a, double& b) {
    const auto ab = inverse_lift({s / kSqrt2, d * kSqrt2});
    a = ab[0];
    b = ab[1];
}

// Level-2 decomposition of one 2x2 subband (row-major p q / r t):
// rows then columns, keeping the approximation ss and the three details.
struct Level2 {
    double ss, ds, sd, dd;
};

Level2 level2_analyze(const std::array<double, 4>& s) {
    double s0, d0, s1, d1;
    fwd(s[0], s[1], s0, d0);
    fwd(s[2], s[3], s1, d1);
    Level2 out{};
    fwd(s0, s1, out.ss, out.ds);
    fwd(d0, d1, out.sd, out.dd);
    return out;
}

std::array<double, 4> level2_synthesize(const Level2& lv) {
    double s0, s1, d0, d1;
    inv(lv.ss, lv.ds, s0, s1);
    inv(lv.sd, lv.dd, d0, d1);
    std::array<double, 4> s;
    inv(s0, d0, s[0], s[1]);
    inv(s1, d1, s[2], s[3]);
    return s;
}

}  // namespace

BlockAnalysis analyze_block(const std::array<double, 16>& block) {
    // Level 1, rows: pairs (0,1) and (2,3) per row -> [s0 s1 d0 d1].
    double r[4][4];
    for (int y = 0; y < 4; ++y) {
        fwd(block[4 * y + 0], block[4 * y + 1], r[y][0], r[y][2]);
        fwd(block[4 * y + 2], block[4 * y + 3], r[y][1], r[y][3]);
    }
    // Level 1, columns.
    double c[4][4];
    for (int x = 0; x < 4; ++x) {
        fwd(r[0][x], r[1][x], c[0][x], c[2][x]);
        fwd(r[2][x], r[3][x], c[1][x], c[3][x]);
    }
    BlockAnalysis out;
    out.subbands.ll = {c[0][0], c[0][1], c[1][0], c[1][1]};
    out.subbands.hl = {c[0][2], c[0][3], c[1][2], c[1][3]};
    out.subbands.lh = {c[2][0], c[2][1], c[3][0], c[3][1]};
    out.subbands.hh = {c[2][2], c[2][3], c[3][2], c[3][3]};
    out.carriers.ll_ll = kApproxCarrierScale * level2_analyze(out.subbands.ll).ss;
    out.carriers.ll_hl = kDetailCarrierScale * level2_analyze(out.subbands.hl).ss;
    out.carriers.ll_lh = kDetailCarrierScale * level2_analyze(out.subbands.lh).ss;
    return out;
}

std::array<double, 16> synthesize_block(const SubbandSet& subbands, const CarrierTriple& carriers) {
    Level2 ll = level2_analyze(subbands.ll);
    Level2 hl = level2_analyze(subbands.hl);
    Level2 lh = level2_analyze(subbands.lh);
    ll.ss = carriers.ll_ll / kApproxCarrierScale;
    hl.ss = carriers.ll_hl / kDetailCarrierScale;
    lh.ss = carriers.ll_lh / kDetailCarrierScale;
    const auto sll = level2_synthesize(ll);
    const auto shl = level2_synthesize(hl);
    const auto slh = level2_synthesize(lh);

    double c[4][4];
    c[0][0] = sll[0]; c[0][1] = sll[1]; c[1][0] = sll[2]; c[1][1] = sll[3];
    c[0][2] = shl[0]; c[0][3] = shl[1]; c[1][2] = shl[2]; c[1][3] = shl[3];
    c[2][0] = slh[0]; c[2][1] = slh[1]; c[3][0] = slh[2]; c[3][1] = slh[3];
    c[2][2] = subbands.hh[0]; c[2][3] = subbands.hh[1];
    c[3][2] = subbands.hh[2]; c[3][3] = subbands.hh[3];

    double r[4][4];
    for (int x = 0; x < 4; ++x) {
        inv(c[0][x], c[2][x], r[0][x], r[1][x]);
        inv(c[1][x], c[3][x], r[2][x], r[3][x]);
    }
    std::array<double, 16> block;
    for (int y = 0; y < 4; ++y) {
        inv(r[y][0], r[y][2], block[4 * y + 0], block[4 * y + 1]);
        inv(r[y][1], r[y][3], block[4 * y + 2], block[4 * y + 3]);
    }
    return block;
}

}  // namespace sealkit
