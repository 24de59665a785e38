#ifndef SEALKIT_QIM_HPP
#define SEALKIT_QIM_HPP

#include <cmath>
#include <stdexcept>

namespace sealkit {

// Quantization-index-modulation on one real coefficient. The quantizer
// index parity encodes the bit; a mismatched parity is corrected upward.
inline double embed_bit(double coef, int w, double q) {
    if (q <= 0.0) throw std::domain_error("embed_bit: q must be positive");
    if (w != 0 && w != 1) throw std::domain_error("embed_bit: bit must be 0 or 1");
    const double m = std::floor(coef / q);
    const long long mi = static_cast<long long>(m);
    const int parity = static_cast<int>(((mi % 2) + 2) % 2);
    return parity == w ? m * q : (m + 1.0) * q;
}

// round(coef/q) mod 2, rounding half away from zero.
inline int extract_bit(double coef, double q) {
    if (q <= 0.0) throw std::domain_error("extract_bit: q must be positive");
    const double r = std::round(coef / q);  // std::round is half-away-from-zero
    const long long ri = static_cast<long long>(r);
    return static_cast<int>(((ri % 2) + 2) % 2);
}

}  // namespace sealkit

#endif
