// sealkit: semi-fragile watermark embedding, authentication, attack
// simulation and attack-class training in one binary.
//
// Exit codes: 0 success, 1 validation/domain error, 2 I/O error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sealkit/attacks.hpp"
#include "sealkit/authenticate.hpp"
#include "sealkit/csv.hpp"
#include "sealkit/image_io.hpp"
#include "sealkit/svm.hpp"
#include "sealkit/watermark.hpp"

namespace fs = std::filesystem;
using namespace sealkit;

namespace {

Rect parse_rect(const std::string& text) {
    Rect r;
    char extra;
    if (std::sscanf(text.c_str(), "%d,%d,%d,%d%c", &r.x, &r.y, &r.width, &r.height, &extra) != 4)
        throw std::invalid_argument("rect: expected x,y,w,h");
    return r;
}

std::vector<std::string> list_images(const std::string& dir) {
    std::vector<std::string> paths;
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (ext == ".pgm" || ext == ".png" || ext == ".jpg" || ext == ".jpeg")
            paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

int run(int argc, char** argv) {
    CLI::App app{"sealkit - semi-fragile image watermarking toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, key_hex, donor_path, rect_text, maps_dir, features_csv;
    std::string images_dir, labels_csv, model_path;
    double q = kDefaultQuantStep;
    double c = kDefaultC;
    double gamma = kDefaultGamma;
    int qf = 0;

    auto* cmd_embed = app.add_subcommand("embed", "embed a watermark");
    cmd_embed->add_option("--in", in_path, "input image")->required();
    cmd_embed->add_option("--out", out_path, "output image")->required();
    cmd_embed->add_option("--key", key_hex, "48 hex chars (k1|k2|k3)")->required();
    cmd_embed->add_option("--q", q, "quantization step");

    auto* cmd_verify = app.add_subcommand("verify", "authenticate and write error maps");
    cmd_verify->add_option("--in", in_path, "input image")->required();
    cmd_verify->add_option("--key", key_hex, "48 hex chars (k1|k2|k3)")->required();
    cmd_verify->add_option("--q", q, "quantization step");
    cmd_verify->add_option("--maps-dir", maps_dir, "directory for the five maps")->required();
    cmd_verify->add_option("--features", features_csv, "append one feature row to this CSV");

    auto* cmd_attack = app.add_subcommand("attack", "simulate attacks");
    cmd_attack->require_subcommand(1);
    auto* cmd_jpeg = cmd_attack->add_subcommand("jpeg", "JPEG recompression");
    cmd_jpeg->add_option("--in", in_path, "input image")->required();
    cmd_jpeg->add_option("--out", out_path, "output image")->required();
    cmd_jpeg->add_option("--qf", qf, "quality factor 1..100")->required();
    auto* cmd_insert = cmd_attack->add_subcommand("insert", "object insertion");
    cmd_insert->add_option("--in", in_path, "input image")->required();
    cmd_insert->add_option("--donor", donor_path, "donor image")->required();
    cmd_insert->add_option("--rect", rect_text, "x,y,w,h")->required();
    cmd_insert->add_option("--out", out_path, "output image")->required();

    auto* cmd_psnr = app.add_subcommand("psnr", "peak signal-to-noise ratio");
    std::string psnr_a, psnr_b;
    cmd_psnr->add_option("a", psnr_a, "first image")->required();
    cmd_psnr->add_option("b", psnr_b, "second image")->required();

    auto* cmd_corpus = app.add_subcommand("corpus", "build a labeled attack-grid feature CSV");
    cmd_corpus->add_option("--images", images_dir, "directory of source images")->required();
    cmd_corpus->add_option("--key", key_hex, "48 hex chars (k1|k2|k3)")->required();
    cmd_corpus->add_option("--out", out_path, "output CSV")->required();
    cmd_corpus->add_option("--q", q, "quantization step");
    cmd_corpus->add_option("--rect", rect_text, "tamper rectangle x,y,w,h (default: area/16, centered)");

    auto* cmd_train = app.add_subcommand("train", "train the attack-class SVM");
    cmd_train->add_option("--features", features_csv, "feature CSV (f1..f6,f9 columns)")->required();
    cmd_train->add_option("--labels", labels_csv, "CSV with a label column")->required();
    cmd_train->add_option("--out", model_path, "output model file")->required();
    cmd_train->add_option("--c", c, "soft-margin C");
    cmd_train->add_option("--gamma", gamma, "RBF width");

    auto* cmd_classify = app.add_subcommand("classify", "classify feature rows");
    cmd_classify->add_option("--model", model_path, "model file")->required();
    cmd_classify->add_option("--features", features_csv, "feature CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return 1;
    }

    if (cmd_embed->parsed()) {
        const SecretKey key = parse_key(key_hex);
        write_image(out_path, embed(read_image(in_path), key, q));
    } else if (cmd_verify->parsed()) {
        const SecretKey key = parse_key(key_hex);
        const GrayImage image = read_image(in_path);
        const AuthResult res = authenticate(image, key, q);
        fs::create_directories(maps_dir);
        write_png((fs::path(maps_dir) / "xw1.png").string(), res.maps.xw1);
        write_png((fs::path(maps_dir) / "xw2.png").string(), res.maps.xw2);
        write_png((fs::path(maps_dir) / "vmap1.png").string(), res.maps.vmap1);
        write_png((fs::path(maps_dir) / "vmap2.png").string(), res.maps.vmap2);
        write_png((fs::path(maps_dir) / "xw_comb.png").string(), res.maps.xw_comb);
        if (!features_csv.empty()) append_feature_row(features_csv, in_path, res.features);
    } else if (cmd_jpeg->parsed()) {
        const GrayImage image = read_image(in_path);
        const auto bytes = jpeg_encode(image, qf);
        std::string ext = fs::path(out_path).extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        if (ext == ".jpg" || ext == ".jpeg") {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw IoError("cannot write " + out_path);
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
            if (!out) throw IoError("failed writing " + out_path);
        } else {
            write_image(out_path, jpeg_decode(bytes));
        }
    } else if (cmd_insert->parsed()) {
        write_image(out_path, object_insert(read_image(in_path), read_image(donor_path),
                                            parse_rect(rect_text)));
    } else if (cmd_psnr->parsed()) {
        const double value = psnr(read_image(psnr_a), read_image(psnr_b));
        if (std::isinf(value)) std::printf("inf\n");
        else std::printf("%.4f\n", value);
    } else if (cmd_corpus->parsed()) {
        const SecretKey key = parse_key(key_hex);
        std::vector<NamedImage> images;
        for (const std::string& p : list_images(images_dir)) images.push_back({p, read_image(p)});
        if (images.empty()) {
            std::ofstream out(out_path);
            if (!out) throw IoError("cannot write " + out_path);
            out << kFeatureCsvHeader << ",label\n";
            return 0;
        }
        std::optional<Rect> rect;
        if (!rect_text.empty()) rect = parse_rect(rect_text);
        const auto rows = build_corpus(images, key, q, rect);
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot write " + out_path);
        out << kFeatureCsvHeader << ",label\n";
        for (const CorpusRow& row : rows)
            out << format_feature_row(row.path, row.features) << ',' << row.label << '\n';
        if (!out) throw IoError("failed writing " + out_path);
    } else if (cmd_train->parsed()) {
        const FeatureTable table = read_feature_csv(features_csv);
        const std::vector<int> labels = read_label_csv(labels_csv);
        if (labels.size() != table.samples.size())
            throw std::invalid_argument("train: feature and label row counts differ");
        save_model(train(table.samples, labels, c, gamma), model_path);
    } else if (cmd_classify->parsed()) {
        const ClassifierModel model = load_model(model_path);
        const FeatureTable table = read_feature_csv(features_csv);
        for (const Sample& s : table.samples) std::printf("%d\n", predict(model, s));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
