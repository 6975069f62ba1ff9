#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mp3sa/matrix.hpp"
#include "mp3sa/svm.hpp"

namespace mp3sa {

struct CvOptions {
    int folds = 10;
    std::uint64_t seed = 42;
    SvmOptions svm;
};

struct CvReport {
    int folds = 0;  // after any reduction
    std::uint64_t seed = 0;
    double accuracy = 0.0;
    /// Binary tasks: recall of class 1 (stego) and of class 0 (cover).
    /// Multiclass: macro averages of per-class recall and specificity.
    double sensitivity = 0.0;
    double specificity = 0.0;
    std::vector<double> fold_accuracy;
    std::vector<std::vector<int>> confusion;  // [true][predicted]
    /// Out-of-fold score per sample (binary: decision value for class 1).
    std::vector<double> scores;
    std::vector<int> predicted;
    std::vector<std::string> warnings;
};

/// Stratified fold assignment: each class is shuffled with `seed` and dealt
/// round-robin, so fold sizes differ by at most one per class.
std::vector<int> stratified_folds(std::span<const int> labels, int class_count, int folds, std::uint64_t seed);

/// k-fold cross-validation of the one-vs-one SVM on raw features. The
/// normalization is fitted on each training fold only. When a class has
/// fewer than `folds` samples the fold count is reduced and a warning
/// recorded. Throws kInvalidArgument for folds < 2. An rbf kernel with
/// gamma <= 0 uses 1 / feature count.
CvReport kfold_cv(const Matrix& x, std::span<const int> labels, int class_count, const CvOptions& options);

/// Resolves the default rbf gamma for a feature count.
Kernel resolve_kernel(Kernel kernel, std::size_t feature_count);

}  // namespace mp3sa
