#include "sealkit/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>

#include <png.h>

#include "sealkit/attacks.hpp"

namespace sealkit {

namespace {

std::string lower_ext(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

int pnm_token(std::istream& in, const std::string& path) {
    // Whitespace and '#' comments are allowed between header tokens.
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
        } else if (!std::isspace(c)) {
            in.unget();
            int value;
            if (!(in >> value)) break;
            return value;
        }
    }
    throw IoError("PGM: malformed header in " + path);
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::uint8_t luma(unsigned r, unsigned g, unsigned b) {
    return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char p, five;
    in.get(p);
    in.get(five);
    if (p != 'P' || five != '5') throw IoError("PGM: not a binary P5 file: " + path);
    const int width = pnm_token(in, path);
    const int height = pnm_token(in, path);
    const int maxval = pnm_token(in, path);
    if (width <= 0 || height <= 0) throw IoError("PGM: bad dimensions in " + path);
    if (maxval != 255) throw IoError("PGM: only maxval 255 is supported: " + path);
    in.get();  // single whitespace after maxval
    GrayImage out(width, height);
    in.read(reinterpret_cast<char*>(out.samples.data()), static_cast<std::streamsize>(out.size()));
    if (in.gcount() != static_cast<std::streamsize>(out.size()))
        throw IoError("PGM: truncated pixel data in " + path);
    return out;
}

void write_pgm(const std::string& path, const GrayImage& image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.samples.data()),
              static_cast<std::streamsize>(image.size()));
    if (!out) throw IoError("failed writing " + path);
}

GrayImage read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("PNG: allocation failure");
    }
    std::vector<std::uint8_t*> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("PNG: failed decoding " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int depth = png_get_bit_depth(png, info);
    if (depth == 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("PNG: 16-bit input is not supported: " + path);
    }
    const int type = png_get_color_type(png, info);
    if (type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const png_size_t rowbytes = png_get_rowbytes(png, info);
    const int channels = png_get_channels(png, info);
    std::vector<std::uint8_t> buffer(rowbytes * height);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) rows[y] = buffer.data() + y * rowbytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    GrayImage out(static_cast<int>(width), static_cast<int>(height));
    for (png_uint_32 y = 0; y < height; ++y) {
        const std::uint8_t* row = buffer.data() + y * rowbytes;
        for (png_uint_32 x = 0; x < width; ++x) {
            if (channels >= 3)
                out.at(static_cast<int>(x), static_cast<int>(y)) =
                    luma(row[x * channels], row[x * channels + 1], row[x * channels + 2]);
            else
                out.at(static_cast<int>(x), static_cast<int>(y)) = row[x * channels];
        }
    }
    return out;
}

void write_png(const std::string& path, const GrayImage& image) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot write " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw IoError("PNG: allocation failure");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("PNG: failed encoding " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < image.height; ++y)
        png_write_row(png, const_cast<png_bytep>(&image.samples[static_cast<std::size_t>(y) * image.width]));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

GrayImage read_image(const std::string& path) {
    // Sniff the signature rather than trusting the extension.
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw IoError("cannot open " + path);
    unsigned char magic[8] = {0};
    probe.read(reinterpret_cast<char*>(magic), 8);
    probe.close();
    if (magic[0] == 'P' && magic[1] == '5') return read_pgm(path);
    if (magic[0] == 0x89 && magic[1] == 'P') return read_png(path);
    if (magic[0] == 0xFF && magic[1] == 0xD8) {
        std::ifstream in(path, std::ios::binary);
        std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
        return jpeg_decode(bytes);
    }
    throw IoError("unsupported image format (need PGM/PNG/JPEG): " + path);
}

void write_image(const std::string& path, const GrayImage& image) {
    const std::string ext = lower_ext(path);
    if (ext == "pgm") {
        write_pgm(path, image);
    } else if (ext == "png") {
        write_png(path, image);
    } else if (ext == "jpg" || ext == "jpeg") {
        const auto bytes = jpeg_encode(image, 95);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write " + path);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) throw IoError("failed writing " + path);
    } else {
        throw IoError("unsupported output extension (need .pgm/.png/.jpg): " + path);
    }
}

}  // namespace sealkit
