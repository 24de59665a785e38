#ifndef SEALKIT_TESTS_SYNTH_IMAGES_HPP
#define SEALKIT_TESTS_SYNTH_IMAGES_HPP

#include <cstdint>

#include "sealkit/image.hpp"

namespace sealkit::testsupport {

// Deterministic natural-looking grayscale test image: gradient base,
// raised-cosine blobs, soft rectangles, coarse value noise and fine
// smoothed noise. Same id, same image, on every platform.
GrayImage synth_image(std::uint64_t id, int size = 512);

}  // namespace sealkit::testsupport

#endif
