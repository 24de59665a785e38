#ifndef SEALKIT_IMAGE_HPP
#define SEALKIT_IMAGE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sealkit {

// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), samples(static_cast<std::size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0) throw std::invalid_argument("GrayImage: non-positive dimensions");
    }

    std::uint8_t& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return samples.size(); }

    bool operator==(const GrayImage&) const = default;
};

// Floating-point working raster used while coefficients are being modified.
struct RealImage {
    int width = 0;
    int height = 0;
    std::vector<double> samples;

    RealImage() = default;
    explicit RealImage(const GrayImage& im)
        : width(im.width), height(im.height), samples(im.samples.begin(), im.samples.end()) {}
    RealImage(int w, int h) : width(w), height(h), samples(static_cast<std::size_t>(w) * h, 0.0) {}

    double& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
};

// Rounds half away from zero and clamps to the 8-bit range.
GrayImage quantize_to_gray(const RealImage& im);

// I/O failures (unreadable files, malformed content, codec errors).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sealkit

#endif
