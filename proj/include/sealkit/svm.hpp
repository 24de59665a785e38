#ifndef SEALKIT_SVM_HPP
#define SEALKIT_SVM_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace sealkit {

inline constexpr int kFeatureCount = 7;
inline constexpr int kClassCount = 4;
inline constexpr double kDefaultC = 10.0;
inline constexpr double kDefaultGamma = 1.0 / kFeatureCount;

using Sample = std::array<double, kFeatureCount>;

// One soft-margin RBF machine trained one-vs-rest for a single class.
struct BinaryMachine {
    double rho = 0.0;
    std::vector<double> sv_coef;   // alpha_i * y_i
    std::vector<Sample> sv;        // support vectors, normalized space
};

// Four one-vs-rest RBF machines plus the z-score normalization fitted on
// the training data. Prediction is argmax of decision values, ties broken
// by the lowest class index.
struct ClassifierModel {
    double c = kDefaultC;
    double gamma = kDefaultGamma;
    Sample norm_mean{};
    Sample norm_std{};
    std::array<BinaryMachine, kClassCount> machines{};
};

// Trains by sequential minimal optimization with maximal-violating-pair
// working set selection (ties to the lowest index) to KKT tolerance 1e-3.
// Deterministic for fixed inputs. Labels are 1..4; every class needs at
// least two samples.
ClassifierModel train(const std::vector<Sample>& samples, const std::vector<int>& labels,
                      double c = kDefaultC, double gamma = kDefaultGamma);

int predict(const ClassifierModel& model, const Sample& features);

struct CvReport {
    double accuracy = 0.0;
    std::array<double, kClassCount> precision{};
    std::array<double, kClassCount> recall{};
    std::array<std::array<int, kClassCount>, kClassCount> confusion{};  // [pred][true]
};

// Stratified k-fold cross-validation; samples are assigned to folds
// round-robin per class in input order.
CvReport cross_validate(const std::vector<Sample>& samples, const std::vector<int>& labels,
                        int folds = 15, double c = kDefaultC, double gamma = kDefaultGamma);

// Versioned plain-text model format "sealkit-svm v1"; doubles rendered
// with 17 significant digits so a save/load round-trip predicts
// bit-identically.
void save_model(const ClassifierModel& model, const std::string& path);
ClassifierModel load_model(const std::string& path);

}  // namespace sealkit

#endif
