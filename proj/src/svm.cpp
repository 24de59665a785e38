#include "sealkit/svm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sealkit/image.hpp"

namespace sealkit {

namespace {

constexpr double kKktTolerance = 1e-3;
constexpr double kTau = 1e-12;

double rbf(const Sample& a, const Sample& b, double gamma) {
    double d2 = 0.0;
    for (int k = 0; k < kFeatureCount; ++k) {
        const double d = a[k] - b[k];
        d2 += d * d;
    }
    return std::exp(-gamma * d2);
}

Sample normalize(const ClassifierModel& model, const Sample& x) {
    Sample out;
    for (int k = 0; k < kFeatureCount; ++k) out[k] = (x[k] - model.norm_mean[k]) / model.norm_std[k];
    return out;
}

// Two-class soft-margin SMO, libsvm-style dual with maximal-violating-pair
// selection. Scans run in ascending index order with strict comparisons, so
// ties resolve to the lowest index and training is reproducible.
BinaryMachine solve_binary(const std::vector<Sample>& x, const std::vector<int>& y, double c,
                           double gamma) {
    const std::size_t n = x.size();
    std::vector<double> kernel(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            kernel[i * n + j] = kernel[j * n + i] = rbf(x[i], x[j], gamma);

    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n, -1.0);  // gradient of 0.5 a'Qa - e'a
    const auto q = [&](std::size_t i, std::size_t j) {
        return y[i] * y[j] * kernel[i * n + j];
    };

    const long max_iter = std::max<long>(10000000, static_cast<long>(100 * n * n));
    for (long iter = 0; iter < max_iter; ++iter) {
        // i: maximal -y*grad over I_up; j: minimal over I_low.
        std::ptrdiff_t bi = -1, bj = -1;
        double gmax = -std::numeric_limits<double>::infinity();
        double gmin = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < n; ++t) {
            const bool up = (y[t] > 0 && alpha[t] < c) || (y[t] < 0 && alpha[t] > 0);
            const bool low = (y[t] > 0 && alpha[t] > 0) || (y[t] < 0 && alpha[t] < c);
            const double v = -y[t] * grad[t];
            if (up && v > gmax) {
                gmax = v;
                bi = static_cast<std::ptrdiff_t>(t);
            }
            if (low && v < gmin) {
                gmin = v;
                bj = static_cast<std::ptrdiff_t>(t);
            }
        }
        if (bi < 0 || bj < 0 || gmax - gmin < kKktTolerance) break;
        const std::size_t i = static_cast<std::size_t>(bi);
        const std::size_t j = static_cast<std::size_t>(bj);

        const double old_ai = alpha[i];
        const double old_aj = alpha[j];
        if (y[i] != y[j]) {
            double quad = q(i, i) + q(j, j) + 2.0 * q(i, j);
            if (quad <= 0.0) quad = kTau;
            const double delta = (-grad[i] - grad[j]) / quad;
            const double diff = alpha[i] - alpha[j];
            alpha[i] += delta;
            alpha[j] += delta;
            if (diff > 0 && alpha[j] < 0) { alpha[j] = 0; alpha[i] = diff; }
            if (diff <= 0 && alpha[i] < 0) { alpha[i] = 0; alpha[j] = -diff; }
            if (diff > 0 && alpha[i] > c) { alpha[i] = c; alpha[j] = c - diff; }
            if (diff <= 0 && alpha[j] > c) { alpha[j] = c; alpha[i] = c + diff; }
        } else {
            double quad = q(i, i) + q(j, j) - 2.0 * q(i, j);
            if (quad <= 0.0) quad = kTau;
            const double delta = (grad[i] - grad[j]) / quad;
            const double sum = alpha[i] + alpha[j];
            alpha[i] -= delta;
            alpha[j] += delta;
            if (sum > c && alpha[i] > c) { alpha[i] = c; alpha[j] = sum - c; }
            if (sum <= c && alpha[j] < 0) { alpha[j] = 0; alpha[i] = sum; }
            if (sum > c && alpha[j] > c) { alpha[j] = c; alpha[i] = sum - c; }
            if (sum <= c && alpha[i] < 0) { alpha[i] = 0; alpha[j] = sum; }
        }
        const double dai = alpha[i] - old_ai;
        const double daj = alpha[j] - old_aj;
        for (std::size_t t = 0; t < n; ++t)
            grad[t] += q(t, i) * dai + q(t, j) * daj;
    }

    // rho from the midpoint of the violating-pair bounds (free SVs average
    // when available, the standard fallback otherwise).
    double sum_free = 0.0;
    int n_free = 0;
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
        const double yg = y[t] * grad[t];
        if (alpha[t] > 0 && alpha[t] < c) {
            sum_free += yg;
            ++n_free;
        } else if ((y[t] > 0 && alpha[t] >= c) || (y[t] < 0 && alpha[t] <= 0)) {
            lb = std::max(lb, yg);
        } else {
            ub = std::min(ub, yg);
        }
    }
    BinaryMachine machine;
    machine.rho = n_free > 0 ? sum_free / n_free : (ub + lb) / 2.0;
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] > 0) {
            machine.sv_coef.push_back(alpha[t] * y[t]);
            machine.sv.push_back(x[t]);
        }
    }
    return machine;
}

double decision(const BinaryMachine& m, const Sample& xn, double gamma) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.sv.size(); ++i) sum += m.sv_coef[i] * rbf(m.sv[i], xn, gamma);
    return sum - m.rho;
}

void check_dataset(const std::vector<Sample>& samples, const std::vector<int>& labels,
                   int min_per_class) {
    if (samples.size() != labels.size())
        throw std::invalid_argument("train: samples/labels size mismatch");
    int count[kClassCount] = {0, 0, 0, 0};
    for (int lab : labels) {
        if (lab < 1 || lab > kClassCount) throw std::invalid_argument("train: label out of 1..4");
        ++count[lab - 1];
    }
    for (int cl = 0; cl < kClassCount; ++cl)
        if (count[cl] < min_per_class)
            throw std::invalid_argument("train: class " + std::to_string(cl + 1) +
                                        " has fewer than " + std::to_string(min_per_class) +
                                        " samples");
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ClassifierModel train(const std::vector<Sample>& samples, const std::vector<int>& labels, double c,
                      double gamma) {
    if (c <= 0.0 || gamma <= 0.0) throw std::invalid_argument("train: C and gamma must be positive");
    check_dataset(samples, labels, 2);

    ClassifierModel model;
    model.c = c;
    model.gamma = gamma;
    const std::size_t n = samples.size();
    for (int k = 0; k < kFeatureCount; ++k) {
        double mean = 0.0;
        for (const Sample& s : samples) mean += s[k];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (const Sample& s : samples) var += (s[k] - mean) * (s[k] - mean);
        const double sd = std::sqrt(var / static_cast<double>(n));
        model.norm_mean[k] = mean;
        model.norm_std[k] = sd > 0.0 ? sd : 1.0;
    }

    std::vector<Sample> xn(n);
    for (std::size_t i = 0; i < n; ++i) xn[i] = normalize(model, samples[i]);

    for (int cl = 1; cl <= kClassCount; ++cl) {
        std::vector<int> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = labels[i] == cl ? 1 : -1;
        model.machines[cl - 1] = solve_binary(xn, y, c, gamma);
    }
    return model;
}

int predict(const ClassifierModel& model, const Sample& features) {
    const Sample xn = normalize(model, features);
    int best = 1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int cl = 1; cl <= kClassCount; ++cl) {
        const double v = decision(model.machines[cl - 1], xn, model.gamma);
        if (v > best_value) {
            best_value = v;
            best = cl;
        }
    }
    return best;
}

CvReport cross_validate(const std::vector<Sample>& samples, const std::vector<int>& labels,
                        int folds, double c, double gamma) {
    check_dataset(samples, labels, 2);
    const std::size_t n = samples.size();
    if (folds < 2 || static_cast<std::size_t>(folds) > n)
        throw std::invalid_argument("cross_validate: folds out of range");

    // Stratified assignment: per class, round-robin in input order.
    std::vector<int> fold_of(n);
    int next_fold[kClassCount] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const int cl = labels[i] - 1;
        fold_of[i] = next_fold[cl];
        next_fold[cl] = (next_fold[cl] + 1) % folds;
    }

    std::vector<int> predicted(n, 0);
    for (int f = 0; f < folds; ++f) {
        std::vector<Sample> train_x;
        std::vector<int> train_y;
        for (std::size_t i = 0; i < n; ++i) {
            if (fold_of[i] != f) {
                train_x.push_back(samples[i]);
                train_y.push_back(labels[i]);
            }
        }
        bool any_test = false;
        for (std::size_t i = 0; i < n; ++i) any_test = any_test || fold_of[i] == f;
        if (!any_test) continue;
        const ClassifierModel model = train(train_x, train_y, c, gamma);
        for (std::size_t i = 0; i < n; ++i)
            if (fold_of[i] == f) predicted[i] = predict(model, samples[i]);
    }

    CvReport report;
    int correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        report.confusion[predicted[i] - 1][labels[i] - 1] += 1;
        if (predicted[i] == labels[i]) ++correct;
    }
    report.accuracy = static_cast<double>(correct) / static_cast<double>(n);
    for (int cl = 0; cl < kClassCount; ++cl) {
        int pred_total = 0, true_total = 0;
        for (int other = 0; other < kClassCount; ++other) {
            pred_total += report.confusion[cl][other];
            true_total += report.confusion[other][cl];
        }
        report.precision[cl] = pred_total ? static_cast<double>(report.confusion[cl][cl]) / pred_total : 0.0;
        report.recall[cl] = true_total ? static_cast<double>(report.confusion[cl][cl]) / true_total : 0.0;
    }
    return report;
}

void save_model(const ClassifierModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write model file: " + path);
    out << "sealkit-svm v1\n";
    out << "features " << kFeatureCount << "\n";
    out << "classes " << kClassCount << "\n";
    out << "c " << fmt17(model.c) << "\n";
    out << "gamma " << fmt17(model.gamma) << "\n";
    out << "norm_mean";
    for (double v : model.norm_mean) out << ' ' << fmt17(v);
    out << "\nnorm_std";
    for (double v : model.norm_std) out << ' ' << fmt17(v);
    out << "\n";
    for (int cl = 0; cl < kClassCount; ++cl) {
        const BinaryMachine& m = model.machines[cl];
        out << "machine " << (cl + 1) << " nsv " << m.sv.size() << " rho " << fmt17(m.rho) << "\n";
        for (std::size_t i = 0; i < m.sv.size(); ++i) {
            out << fmt17(m.sv_coef[i]);
            for (double v : m.sv[i]) out << ' ' << fmt17(v);
            out << "\n";
        }
    }
    out << "end\n";
    if (!out) throw IoError("failed writing model file: " + path);
}

ClassifierModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read model file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "sealkit-svm v1")
        throw IoError("model file: unsupported format header");
    ClassifierModel model;
    std::string word;
    int ival = 0;
    in >> word >> ival;
    if (word != "features" || ival != kFeatureCount) throw IoError("model file: bad feature count");
    in >> word >> ival;
    if (word != "classes" || ival != kClassCount) throw IoError("model file: bad class count");
    in >> word >> model.c;
    if (word != "c") throw IoError("model file: missing c");
    in >> word >> model.gamma;
    if (word != "gamma") throw IoError("model file: missing gamma");
    in >> word;
    if (word != "norm_mean") throw IoError("model file: missing norm_mean");
    for (double& v : model.norm_mean) in >> v;
    in >> word;
    if (word != "norm_std") throw IoError("model file: missing norm_std");
    for (double& v : model.norm_std) in >> v;
    for (int cl = 0; cl < kClassCount; ++cl) {
        int label = 0;
        std::size_t nsv = 0;
        in >> word >> label;
        if (word != "machine" || label != cl + 1) throw IoError("model file: bad machine block");
        in >> word >> nsv;
        if (word != "nsv") throw IoError("model file: missing nsv");
        in >> word >> model.machines[cl].rho;
        if (word != "rho") throw IoError("model file: missing rho");
        model.machines[cl].sv_coef.resize(nsv);
        model.machines[cl].sv.resize(nsv);
        for (std::size_t i = 0; i < nsv; ++i) {
            in >> model.machines[cl].sv_coef[i];
            for (double& v : model.machines[cl].sv[i]) in >> v;
        }
    }
    in >> word;
    if (!in || word != "end") throw IoError("model file: truncated");
    return model;
}

}  // namespace sealkit
