#ifndef SEALKIT_CSV_HPP
#define SEALKIT_CSV_HPP

#include <string>
#include <vector>

#include "sealkit/features.hpp"
#include "sealkit/svm.hpp"

namespace sealkit {

inline constexpr const char* kFeatureCsvHeader = "path,f1,f2,f3,f4,f5,f6,f7,f8,f9";

// One "path,f1..f9" row with 17-significant-digit rendering.
std::string format_feature_row(const std::string& path, const FeatureVector& features);

// Appends a row, writing the header first if the file is new or empty.
void append_feature_row(const std::string& csv_path, const std::string& image_path,
                        const FeatureVector& features, const std::string& extra_header = "",
                        const std::string& extra_value = "");

struct FeatureTable {
    std::vector<std::string> paths;
    std::vector<Sample> samples;      // classifier inputs: f1..f6, f9
    std::vector<int> labels;          // empty when the CSV has no label column
};

// Parses a feature CSV by header names; requires f1..f6 and f9 columns.
// A label column, when present, is read as well.
FeatureTable read_feature_csv(const std::string& path);

// Reads the label column of a CSV (any file with a "label" header column).
std::vector<int> read_label_csv(const std::string& path);

}  // namespace sealkit

#endif
