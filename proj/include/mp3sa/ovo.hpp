#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mp3sa/matrix.hpp"
#include "mp3sa/svm.hpp"

namespace mp3sa {

/// One binary machine per class pair (first < second); a positive decision
/// votes for `second`.
struct PairwiseSvm {
    int first = 0;
    int second = 1;
    BinarySvm svm;
};

struct OvoModel {
    int class_count = 0;
    std::vector<PairwiseSvm> machines;
};

struct OvoPrediction {
    int label = 0;
    /// Binary models: the single decision value (positive favours class 1).
    /// Otherwise: the winner's summed |decision| over the votes it won.
    double score = 0.0;
    std::vector<int> votes;
};

/// Labels are class indices 0..class_count-1; every class needs at least
/// one sample (kInvalidArgument otherwise) and class_count >= 2.
OvoModel ovo_train(const Matrix& x, std::span<const int> labels, int class_count, const SvmOptions& options);

/// Majority vote; ties go to the larger summed |decision| of the tied
/// classes' winning votes, then to the lowest class index.
OvoPrediction ovo_predict(const OvoModel& model, std::span<const double> x);

}  // namespace mp3sa
