#include "sealkit/features.hpp"

#include <algorithm>
#include <stdexcept>

#include "sealkit/authenticate.hpp"

namespace sealkit {

namespace {

enum class MorphOp { Min, Max };

// Square-window min/max are separable: a horizontal pass then a vertical
// pass with the same 1-D window. Borders replicate the edge sample.
GrayImage morph(const GrayImage& map, int w, MorphOp op) {
    if (w <= 0 || w % 2 == 0) throw std::domain_error("morphology: window must be odd");
    const int r = w / 2;
    const int width = map.width;
    const int height = map.height;
    GrayImage tmp(width, height);
    for (int y = 0; y < height; ++y) {
        const std::uint8_t* row = &map.samples[static_cast<std::size_t>(y) * width];
        for (int x = 0; x < width; ++x) {
            std::uint8_t acc = row[std::clamp(x - r, 0, width - 1)];
            for (int k = -r + 1; k <= r; ++k) {
                const std::uint8_t v = row[std::clamp(x + k, 0, width - 1)];
                acc = op == MorphOp::Min ? std::min(acc, v) : std::max(acc, v);
            }
            tmp.at(x, y) = acc;
        }
    }
    GrayImage out(width, height);
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < height; ++y) {
            std::uint8_t acc = tmp.at(x, std::clamp(y - r, 0, height - 1));
            for (int k = -r + 1; k <= r; ++k) {
                const std::uint8_t v = tmp.at(x, std::clamp(y + k, 0, height - 1));
                acc = op == MorphOp::Min ? std::min(acc, v) : std::max(acc, v);
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

}  // namespace

GrayImage erode(const GrayImage& map, int w) { return morph(map, w, MorphOp::Min); }

GrayImage dilate(const GrayImage& map, int w) { return morph(map, w, MorphOp::Max); }

GrayImage edde5(const GrayImage& map) {
    return erode(dilate(dilate(erode(map, 5), 5), 5), 5);
}

double energy(const GrayImage& map) {
    if (map.samples.empty()) throw std::domain_error("energy: empty map");
    double sum = 0.0;
    for (std::uint8_t p : map.samples) sum += static_cast<double>(p) * p;
    return sum / static_cast<double>(map.samples.size());
}

FeatureVector feature_vector(const ErrorMapSet& maps) {
    FeatureVector fv;
    fv.f[0] = energy(maps.xw1);
    fv.f[1] = energy(maps.xw2);
    fv.f[2] = energy(edde5(maps.xw1));
    fv.f[3] = energy(edde5(maps.xw2));
    fv.f[4] = energy(maps.vmap2);
    fv.f[5] = energy(edde5(maps.vmap2));
    fv.f[6] = energy(maps.vmap1);
    fv.f[7] = energy(edde5(maps.vmap1));
    fv.f[8] = energy(edde5(maps.xw_comb));
    return fv;
}

}  // namespace sealkit
