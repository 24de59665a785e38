#ifndef SEALKIT_IMAGE_IO_HPP
#define SEALKIT_IMAGE_IO_HPP

#include <string>

#include "sealkit/image.hpp"

namespace sealkit {

// Reads binary PGM (P5, maxval 255), 8-bit PNG, or JPEG. Color PNG input
// is converted with integer BT.601 luminance round(0.299R+0.587G+0.114B);
// JPEG decodes directly to grayscale through the codec. 16-bit PNG is
// rejected.
GrayImage read_image(const std::string& path);

// Format chosen by extension: .pgm, .png, or .jpg/.jpeg (quality 95).
void write_image(const std::string& path, const GrayImage& image);

GrayImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& image);
GrayImage read_png(const std::string& path);
void write_png(const std::string& path, const GrayImage& image);

}  // namespace sealkit

#endif
