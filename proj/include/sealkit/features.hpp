#ifndef SEALKIT_FEATURES_HPP
#define SEALKIT_FEATURES_HPP

#include <array>

#include "sealkit/image.hpp"

namespace sealkit {

struct ErrorMapSet;

// Grayscale morphology with a w x w square window, edge replication at the
// borders. w must be odd.
GrayImage erode(const GrayImage& map, int w);
GrayImage dilate(const GrayImage& map, int w);

// Erosion, dilation, dilation, erosion with w = 5. Removes scattered
// noise, keeps concentrated tamper regions.
GrayImage edde5(const GrayImage& map);

// Average pixel energy: sum of squared samples over the pixel count.
double energy(const GrayImage& map);

// f1..f9 per the feature definitions; classification consumes f1..f6, f9.
struct FeatureVector {
    std::array<double, 9> f{};

    double operator[](int i) const { return f[i]; }  // 0-based: f[0] == f1

    // The seven classifier inputs, in order f1..f6, f9.
    std::array<double, 7> classifier_inputs() const {
        return {f[0], f[1], f[2], f[3], f[4], f[5], f[8]};
    }
};

FeatureVector feature_vector(const ErrorMapSet& maps);

}  // namespace sealkit

#endif
