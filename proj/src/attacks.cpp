#include "sealkit/attacks.hpp"

#include <cmath>
#include <tuple>
#include <csetjmp>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <jerror.h>
#include <jpeglib.h>

#include "sealkit/authenticate.hpp"

namespace sealkit {

namespace {

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf setjmp_buffer;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(err->setjmp_buffer, 1);
}

void check_rect(const Rect& rect, const GrayImage& im, const char* what) {
    if (rect.width < 0 || rect.height < 0 || rect.x < 0 || rect.y < 0 ||
        rect.x + rect.width > im.width || rect.y + rect.height > im.height)
        throw std::domain_error(std::string(what) + ": rectangle out of bounds");
}

}  // namespace

std::vector<std::uint8_t> jpeg_encode(const GrayImage& image, int qf) {
    if (qf < 1 || qf > 100) throw std::domain_error("jpeg: quality factor out of [1,100]");
    jpeg_compress_struct cinfo{};
    JpegErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;

    unsigned char* buffer = nullptr;
    unsigned long buffer_size = 0;
    if (setjmp(err.setjmp_buffer)) {
        jpeg_destroy_compress(&cinfo);
        if (buffer) std::free(buffer);
        throw IoError("jpeg: encoding failed");
    }
    jpeg_create_compress(&cinfo);
    jpeg_mem_dest(&cinfo, &buffer, &buffer_size);
    cinfo.image_width = static_cast<JDIMENSION>(image.width);
    cinfo.image_height = static_cast<JDIMENSION>(image.height);
    cinfo.input_components = 1;
    cinfo.in_color_space = JCS_GRAYSCALE;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, qf, TRUE /* baseline */);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(
            &image.samples[static_cast<std::size_t>(cinfo.next_scanline) * image.width]);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    std::vector<std::uint8_t> out(buffer, buffer + buffer_size);
    std::free(buffer);
    return out;
}

GrayImage jpeg_decode(const std::vector<std::uint8_t>& bytes) {
    jpeg_decompress_struct cinfo{};
    JpegErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;
    if (setjmp(err.setjmp_buffer)) {
        jpeg_destroy_decompress(&cinfo);
        throw IoError("jpeg: decoding failed");
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_GRAYSCALE;  // codec-side luminance conversion
    jpeg_start_decompress(&cinfo);
    GrayImage out(static_cast<int>(cinfo.output_width), static_cast<int>(cinfo.output_height));
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = &out.samples[static_cast<std::size_t>(cinfo.output_scanline) * out.width];
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return out;
}

GrayImage jpeg_roundtrip(const GrayImage& image, int qf) {
    return jpeg_decode(jpeg_encode(image, qf));
}

GrayImage object_insert(const GrayImage& target, const GrayImage& donor, const Rect& rect) {
    check_rect(rect, target, "object_insert");
    check_rect(rect, donor, "object_insert(donor)");
    GrayImage out = target;
    for (int y = rect.y; y < rect.y + rect.height; ++y)
        for (int x = rect.x; x < rect.x + rect.width; ++x) out.at(x, y) = donor.at(x, y);
    return out;
}

double psnr(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::domain_error("psnr: dimension mismatch");
    double mse = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = static_cast<double>(a.samples[i]) - static_cast<double>(b.samples[i]);
        mse += d * d;
    }
    mse /= static_cast<double>(a.samples.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

GrayImage apply_attack(const GrayImage& image, const AttackSpec& spec, const GrayImage* donor) {
    switch (spec.kind) {
        case AttackKind::jpeg:
            return jpeg_roundtrip(image, spec.qf);
        case AttackKind::insert:
        case AttackKind::insert_then_jpeg: {
            if (!donor) throw std::domain_error("apply_attack: insert kinds need a donor image");
            GrayImage out = object_insert(image, *donor, spec.rect);
            if (spec.kind == AttackKind::insert_then_jpeg) out = jpeg_roundtrip(out, spec.qf);
            return out;
        }
    }
    throw std::domain_error("apply_attack: unknown kind");
}

std::vector<CorpusRow> build_corpus(const std::vector<NamedImage>& images, const SecretKey& key,
                                    double q, const std::optional<Rect>& rect_opt) {
    std::vector<CorpusRow> rows;
    if (images.empty()) return rows;

    for (std::size_t i = 0; i < images.size(); ++i) {
        const GrayImage& src = images[i].image;
        const GrayImage& donor = images[(i + 1) % images.size()].image;
        const Rect rect = rect_opt.value_or(
            Rect{(src.width - src.width / 4) / 2, (src.height - src.height / 4) / 2,
                 src.width / 4, src.height / 4});
        const GrayImage wm = embed(src, key, q);

        // Class grid: clean and QF100 are class 1, mild recompression class 2,
        // insertion (optionally QF100) class 3, insertion + recompression 4.
        std::vector<std::tuple<std::optional<AttackSpec>, std::string, int>> grid;
        grid.emplace_back(std::nullopt, "clean", 1);
        grid.emplace_back(AttackSpec{AttackKind::jpeg, 100, {}}, "jpeg100", 1);
        for (int qf : kCorpusJpegGrid)
            grid.emplace_back(AttackSpec{AttackKind::jpeg, qf, {}}, "jpeg" + std::to_string(qf), 2);
        grid.emplace_back(AttackSpec{AttackKind::insert, 100, rect}, "insert", 3);
        grid.emplace_back(AttackSpec{AttackKind::insert_then_jpeg, 100, rect}, "insert+jpeg100", 3);
        for (int qf : kCorpusJpegGrid)
            grid.emplace_back(AttackSpec{AttackKind::insert_then_jpeg, qf, rect},
                              "insert+jpeg" + std::to_string(qf), 4);

        for (const auto& [spec, tag, label] : grid) {
            const GrayImage received = spec ? apply_attack(wm, *spec, &donor) : wm;
            rows.push_back({images[i].name + "#" + tag, authenticate(received, key, q).features,
                            label});
        }
    }
    return rows;
}

}  // namespace sealkit
