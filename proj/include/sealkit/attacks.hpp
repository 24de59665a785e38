#ifndef SEALKIT_ATTACKS_HPP
#define SEALKIT_ATTACKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sealkit/features.hpp"
#include "sealkit/image.hpp"
#include "sealkit/keyed_random.hpp"

namespace sealkit {

struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

enum class AttackKind { jpeg, insert, insert_then_jpeg };

// One point of the attack grid. qf applies to the jpeg kinds, rect to the
// insert kinds; the donor image is supplied at application time.
struct AttackSpec {
    AttackKind kind = AttackKind::jpeg;
    int qf = 100;
    Rect rect{};
};

GrayImage apply_attack(const GrayImage& image, const AttackSpec& spec,
                       const GrayImage* donor = nullptr);

// Baseline grayscale JPEG (IJG quality scaling) in memory.
std::vector<std::uint8_t> jpeg_encode(const GrayImage& image, int qf);
GrayImage jpeg_decode(const std::vector<std::uint8_t>& bytes);

// Encode at the given quality factor, then decode. Same dimensions out.
GrayImage jpeg_roundtrip(const GrayImage& image, int qf);

// Replaces the pixels inside rect with the donor's pixels at the same
// coordinates; everything else is untouched.
GrayImage object_insert(const GrayImage& target, const GrayImage& donor, const Rect& rect);

// 10*log10(255^2/MSE) in dB; +infinity for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

struct CorpusRow {
    std::string path;
    FeatureVector features;
    int label = 0;  // 1..4
};

struct NamedImage {
    std::string name;
    GrayImage image;
};

// Labeled attack grid per source image: clean + QF100 (class 1), QF
// 75..95 (class 2), insert and insert+QF100 (class 3), insert+QF 75..95
// (class 4). The tamper rectangle defaults to 1/16 of the image area,
// centered; the donor is the next image in the list.
std::vector<CorpusRow> build_corpus(const std::vector<NamedImage>& images, const SecretKey& key,
                                    double q, const std::optional<Rect>& rect = std::nullopt);

inline constexpr int kCorpusJpegGrid[5] = {75, 80, 85, 90, 95};

}  // namespace sealkit

#endif
