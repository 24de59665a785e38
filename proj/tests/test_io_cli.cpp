#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <png.h>
#include <sys/wait.h>

#include "sealkit/image_io.hpp"
#include "sealkit/keyed_random.hpp"
#include "synth_images.hpp"

using namespace sealkit;
using sealkit::testsupport::synth_image;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "sealkit_io_tests";
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SEALKIT_BIN_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Minimal RGB / 16-bit gray writers used only to exercise the reader.
void write_test_png(const std::string& path, int depth, int color_type,
                    const std::vector<std::uint8_t>& row_bytes, int width, int height) {
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    REQUIRE(fp);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    REQUIRE(setjmp(png_jmpbuf(png)) == 0);
    png_init_io(png, fp);
    png_set_IHDR(png, info, width, height, depth, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    const std::size_t stride = row_bytes.size() / height;
    for (int y = 0; y < height; ++y)
        png_write_row(png, const_cast<png_bytep>(row_bytes.data() + y * stride));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

}  // namespace

TEST_CASE("pgm round-trip is lossless") {
    const fs::path p = work_dir() / "rt.pgm";
    const GrayImage im = synth_image(50, 64);
    write_pgm(p.string(), im);
    CHECK(read_pgm(p.string()) == im);
    CHECK(read_image(p.string()) == im);
}

TEST_CASE("pgm rejects malformed input") {
    const fs::path p = work_dir() / "bad.pgm";
    std::ofstream(p) << "P5\n64 64\n65535\n";
    CHECK_THROWS_AS(read_pgm(p.string()), IoError);
    std::ofstream(p, std::ios::trunc) << "P5\n64 64\n255\nshort";
    CHECK_THROWS_AS(read_pgm(p.string()), IoError);
    CHECK_THROWS_AS(read_pgm("/nonexistent.pgm"), IoError);
}

TEST_CASE("png round-trip is lossless") {
    const fs::path p = work_dir() / "rt.png";
    const GrayImage im = synth_image(51, 64);
    write_png(p.string(), im);
    CHECK(read_png(p.string()) == im);
    CHECK(read_image(p.string()) == im);
}

TEST_CASE("color png converts by integer BT.601 luminance") {
    const fs::path p = work_dir() / "rgb.png";
    const int w = 3, h = 1;
    // pixels: pure red, pure green, an arbitrary color
    std::vector<std::uint8_t> rgb{255, 0, 0, 0, 255, 0, 10, 200, 60};
    write_test_png(p.string(), 8, PNG_COLOR_TYPE_RGB, rgb, w, h);
    const GrayImage got = read_image(p.string());
    CHECK(got.at(0, 0) == 76);   // round(0.299*255)
    CHECK(got.at(1, 0) == 150);  // round(0.587*255)
    CHECK(got.at(2, 0) == 127);  // round(2.99+117.4+6.84) = round(127.23)
}

TEST_CASE("16-bit png is rejected with a clear error") {
    const fs::path p = work_dir() / "deep.png";
    std::vector<std::uint8_t> rows(2 * 4 * 2, 0x42);
    write_test_png(p.string(), 16, PNG_COLOR_TYPE_GRAY, rows, 4, 2);
    CHECK_THROWS_WITH_AS(read_image(p.string()), doctest::Contains("16-bit"), IoError);
}

TEST_CASE("jpeg files are read back via the codec") {
    const fs::path p = work_dir() / "rt.jpg";
    const GrayImage im = synth_image(52, 64);
    write_image(p.string(), im);
    const GrayImage back = read_image(p.string());
    CHECK(back.width == im.width);
    CHECK(back.height == im.height);
}

TEST_CASE("unknown formats are diagnosed") {
    const fs::path p = work_dir() / "junk.bin";
    std::ofstream(p) << "not an image at all";
    CHECK_THROWS_AS(read_image(p.string()), IoError);
    GrayImage im(8, 8, 1);
    CHECK_THROWS_AS(write_image((work_dir() / "out.tiff").string(), im), IoError);
}

TEST_CASE("cli embed/verify contract and exit codes") {
    const fs::path dir = work_dir();
    const fs::path in = dir / "src.pgm";
    const fs::path out = dir / "wm.png";
    const fs::path maps = dir / "maps";
    const fs::path csv = dir / "features.csv";
    fs::remove_all(maps);
    fs::remove(csv);
    write_pgm(in.string(), synth_image(53, 128));
    const std::string key = "000102030405060708090a0b0c0d0e0f1011121314151617";

    CHECK(run_cli("embed --in " + in.string() + " --out " + out.string() + " --key " + key) == 0);
    CHECK(fs::exists(out));

    // missing required flag -> validation error
    CHECK(run_cli("embed --in " + in.string() + " --out " + out.string()) == 1);
    // unreadable input -> I/O error
    CHECK(run_cli("embed --in /nonexistent.pgm --out " + out.string() + " --key " + key) == 2);
    // malformed key -> validation error
    CHECK(run_cli("embed --in " + in.string() + " --out " + out.string() + " --key beef") == 1);
    // unknown flag -> validation error
    CHECK(run_cli("embed --frobnicate --in " + in.string() + " --out " + out.string() +
                  " --key " + key) == 1);

    CHECK(run_cli("verify --in " + out.string() + " --key " + key + " --maps-dir " + maps.string() +
                  " --features " + csv.string()) == 0);
    for (const char* name : {"xw1.png", "xw2.png", "vmap1.png", "vmap2.png", "xw_comb.png"})
        CHECK(fs::exists(maps / name));
    std::ifstream feat(csv);
    std::string header, row;
    REQUIRE(std::getline(feat, header));
    CHECK(header == "path,f1,f2,f3,f4,f5,f6,f7,f8,f9");
    REQUIRE(std::getline(feat, row));
    CHECK(row.find(out.string()) == 0);
}

TEST_CASE("cli psnr and attack subcommands") {
    const fs::path dir = work_dir();
    const fs::path a = dir / "a.pgm";
    const fs::path b = dir / "b.pgm";
    const fs::path j = dir / "a80.png";
    write_pgm(a.string(), synth_image(54, 128));
    write_pgm(b.string(), synth_image(55, 128));

    CHECK(run_cli("psnr " + a.string() + " " + a.string()) == 0);
    CHECK(run_cli("attack jpeg --in " + a.string() + " --out " + j.string() + " --qf 80") == 0);
    CHECK(fs::exists(j));
    CHECK(run_cli("attack jpeg --in " + a.string() + " --out " + j.string() + " --qf 200") == 1);
    CHECK(run_cli("attack insert --in " + a.string() + " --donor " + b.string() +
                  " --rect 16,16,32,32 --out " + (dir / "ins.pgm").string()) == 0);
    CHECK(run_cli("attack insert --in " + a.string() + " --donor " + b.string() +
                  " --rect 120,120,32,32 --out " + (dir / "ins2.pgm").string()) == 1);
    CHECK(run_cli("attack insert --in " + a.string() + " --donor " + b.string() +
                  " --rect nonsense --out " + (dir / "ins3.pgm").string()) == 1);
}

TEST_CASE("cli corpus on an empty directory writes only the header") {
    const fs::path dir = work_dir() / "empty_imgs";
    fs::create_directories(dir);
    const fs::path csv = work_dir() / "empty_corpus.csv";
    fs::remove(csv);
    CHECK(run_cli("corpus --images " + dir.string() + " --key " +
                  "000102030405060708090a0b0c0d0e0f1011121314151617" + " --out " + csv.string()) ==
          0);
    std::ifstream in(csv);
    std::string header, extra;
    REQUIRE(std::getline(in, header));
    CHECK(header == "path,f1,f2,f3,f4,f5,f6,f7,f8,f9,label");
    CHECK_FALSE(std::getline(in, extra));
}

TEST_CASE("cli corpus/train/classify round-trip") {
    const fs::path dir = work_dir() / "corpus_imgs";
    fs::create_directories(dir);
    write_pgm((dir / "one.pgm").string(), synth_image(60, 128));
    write_pgm((dir / "two.pgm").string(), synth_image(61, 128));
    const fs::path csv = work_dir() / "corpus.csv";
    const fs::path model = work_dir() / "attack.model";
    const std::string key = "00ff00ff00ff00ff11ee11ee11ee11ee22dd22dd22dd22dd";
    CHECK(run_cli("corpus --images " + dir.string() + " --key " + key + " --out " + csv.string()) ==
          0);
    std::ifstream in(csv);
    std::string line;
    int rows = -1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 28);
    CHECK(run_cli("train --features " + csv.string() + " --labels " + csv.string() + " --out " +
                  model.string()) == 0);
    CHECK(fs::exists(model));
    CHECK(run_cli("classify --model " + model.string() + " --features " + csv.string()) == 0);
    CHECK(run_cli("classify --model /nonexistent.model --features " + csv.string()) == 2);
}
