#include "sealkit/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sealkit/image.hpp"

namespace sealkit {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

std::string format_feature_row(const std::string& path, const FeatureVector& features) {
    std::string row = path;
    for (int i = 0; i < 9; ++i) {
        row += ',';
        row += fmt17(features.f[i]);
    }
    return row;
}

void append_feature_row(const std::string& csv_path, const std::string& image_path,
                        const FeatureVector& features, const std::string& extra_header,
                        const std::string& extra_value) {
    const bool fresh =
        !std::filesystem::exists(csv_path) || std::filesystem::file_size(csv_path) == 0;
    std::ofstream out(csv_path, std::ios::app);
    if (!out) throw IoError("cannot write CSV: " + csv_path);
    if (fresh) {
        out << kFeatureCsvHeader;
        if (!extra_header.empty()) out << ',' << extra_header;
        out << '\n';
    }
    out << format_feature_row(image_path, features);
    if (!extra_value.empty()) out << ',' << extra_value;
    out << '\n';
    if (!out) throw IoError("failed writing CSV: " + csv_path);
}

FeatureTable read_feature_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("CSV is empty: " + path);
    const auto header = split_csv_line(line);
    // Columns located by name; f1..f6 and f9 are the classifier inputs.
    const char* wanted[kFeatureCount] = {"f1", "f2", "f3", "f4", "f5", "f6", "f9"};
    int cols[kFeatureCount];
    int path_col = -1, label_col = -1;
    for (int k = 0; k < kFeatureCount; ++k) cols[k] = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        for (int k = 0; k < kFeatureCount; ++k)
            if (header[c] == wanted[k]) cols[k] = static_cast<int>(c);
        if (header[c] == "path") path_col = static_cast<int>(c);
        if (header[c] == "label") label_col = static_cast<int>(c);
    }
    for (int k = 0; k < kFeatureCount; ++k)
        if (cols[k] < 0) throw IoError(std::string("CSV: missing column ") + wanted[k] + ": " + path);

    FeatureTable table;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        Sample s{};
        try {
            for (int k = 0; k < kFeatureCount; ++k)
                s[k] = std::stod(cells.at(static_cast<std::size_t>(cols[k])));
            if (label_col >= 0)
                table.labels.push_back(std::stoi(cells.at(static_cast<std::size_t>(label_col))));
        } catch (const std::exception&) {
            throw IoError("CSV: malformed row " + std::to_string(lineno) + " in " + path);
        }
        table.samples.push_back(s);
        table.paths.push_back(path_col >= 0 ? cells.at(static_cast<std::size_t>(path_col)) : "");
    }
    return table;
}

std::vector<int> read_label_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("CSV is empty: " + path);
    const auto header = split_csv_line(line);
    int label_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (header[c] == "label") label_col = static_cast<int>(c);
    if (label_col < 0) throw IoError("CSV: missing label column: " + path);
    std::vector<int> labels;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            labels.push_back(std::stoi(split_csv_line(line).at(static_cast<std::size_t>(label_col))));
        } catch (const std::exception&) {
            throw IoError("CSV: malformed row " + std::to_string(lineno) + " in " + path);
        }
    }
    return labels;
}

}  // namespace sealkit
