#include "mp3sa/cv.hpp"

#include <algorithm>
#include <numeric>

#include "mp3sa/error.hpp"
#include "mp3sa/normalize.hpp"
#include "mp3sa/ovo.hpp"
#include "mp3sa/rng.hpp"

namespace mp3sa {

Kernel resolve_kernel(Kernel kernel, std::size_t feature_count) {
    if (kernel.type == KernelType::kRbf && kernel.gamma <= 0.0) {
        kernel.gamma = 1.0 / static_cast<double>(std::max<std::size_t>(feature_count, 1));
    }
    return kernel;
}

std::vector<int> stratified_folds(std::span<const int> labels, int class_count, int folds, std::uint64_t seed) {
    if (folds < 2) {
        throw Error(ErrorCode::kInvalidArgument, "need at least 2 folds");
    }
    Rng rng(seed);
    std::vector<int> assignment(labels.size(), -1);
    std::size_t dealt = 0;
    for (int c = 0; c < class_count; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == c) {
                members.push_back(i);
            }
        }
        rng.shuffle(std::span<std::size_t>(members));
        for (std::size_t idx : members) {
            assignment[idx] = static_cast<int>(dealt % static_cast<std::size_t>(folds));
            ++dealt;
        }
    }
    return assignment;
}

CvReport kfold_cv(const Matrix& x, std::span<const int> labels, int class_count, const CvOptions& options) {
    if (options.folds < 2) {
        throw Error(ErrorCode::kInvalidArgument, "k-fold needs k >= 2");
    }
    if (labels.size() != x.rows()) {
        throw Error(ErrorCode::kInvalidArgument, "label count differs from sample count");
    }
    const auto k = static_cast<std::size_t>(class_count);
    std::vector<int> counts(k, 0);
    for (int label : labels) {
        if (label < 0 || label >= class_count) {
            throw Error(ErrorCode::kInvalidArgument, "label out of range");
        }
        ++counts[static_cast<std::size_t>(label)];
    }
    const int smallest = *std::min_element(counts.begin(), counts.end());
    if (smallest < 2) {
        throw Error(ErrorCode::kSingleClass, "every class needs at least 2 samples for cross-validation");
    }

    CvReport report;
    report.seed = options.seed;
    report.folds = options.folds;
    if (smallest < options.folds) {
        report.folds = smallest;
        report.warnings.push_back("fold count reduced from " + std::to_string(options.folds) + " to " +
                                  std::to_string(smallest) + " (smallest class has " +
                                  std::to_string(smallest) + " samples)");
    }

    SvmOptions svm = options.svm;
    svm.kernel = resolve_kernel(svm.kernel, x.cols());

    const auto fold_of = stratified_folds(labels, class_count, report.folds, options.seed);
    report.confusion.assign(k, std::vector<int>(k, 0));
    report.scores.assign(labels.size(), 0.0);
    report.predicted.assign(labels.size(), -1);

    std::vector<std::string> names(x.cols());
    for (int f = 0; f < report.folds; ++f) {
        std::vector<std::size_t> train;
        std::vector<std::size_t> test;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            (fold_of[i] == f ? test : train).push_back(i);
        }
        std::vector<std::vector<double>> train_rows;
        std::vector<int> train_labels;
        for (std::size_t i : train) {
            const auto r = x.row(i);
            train_rows.emplace_back(r.begin(), r.end());
            train_labels.push_back(labels[i]);
        }
        const NormStats stats = fit_norm(train_rows, names);
        for (auto& row : train_rows) {
            row = apply_norm(stats, row);
        }
        const OvoModel model = ovo_train(Matrix::from_rows(train_rows), train_labels, class_count, svm);

        int correct = 0;
        for (std::size_t i : test) {
            const auto pred = ovo_predict(model, apply_norm(stats, x.row(i)));
            report.predicted[i] = pred.label;
            report.scores[i] = pred.score;
            ++report.confusion[static_cast<std::size_t>(labels[i])][static_cast<std::size_t>(pred.label)];
            if (pred.label == labels[i]) {
                ++correct;
            }
        }
        report.fold_accuracy.push_back(test.empty() ? 0.0
                                                    : static_cast<double>(correct) / static_cast<double>(test.size()));
    }

    const auto total = static_cast<double>(labels.size());
    int correct = 0;
    for (std::size_t c = 0; c < k; ++c) {
        correct += report.confusion[c][c];
    }
    report.accuracy = correct / total;

    auto recall = [&](std::size_t c) {
        return static_cast<double>(report.confusion[c][c]) / counts[c];
    };
    auto true_negative_rate = [&](std::size_t c) {
        int negatives = 0;
        int tn = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if (t == c) {
                continue;
            }
            negatives += counts[t];
            for (std::size_t p = 0; p < k; ++p) {
                if (p != c) {
                    tn += report.confusion[t][p];
                }
            }
        }
        return static_cast<double>(tn) / negatives;
    };
    if (k == 2) {
        report.sensitivity = recall(1);
        report.specificity = recall(0);
    } else {
        for (std::size_t c = 0; c < k; ++c) {
            report.sensitivity += recall(c) / static_cast<double>(k);
            report.specificity += true_negative_rate(c) / static_cast<double>(k);
        }
    }
    return report;
}

}  // namespace mp3sa
