#pragma once

#include <span>
#include <vector>

namespace mp3sa {

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

/// Thresholds swept from the highest score down; samples with equal scores
/// enter together, so ties produce a diagonal segment. `positive` holds 1
/// for the positive class and 0 otherwise. Starts at (0,0), ends at (1,1).
/// Throws kSingleClass unless both classes are present.
std::vector<RocPoint> roc_points(std::span<const double> scores, std::span<const int> positive);

/// Trapezoid-rule area under the curve.
double roc_auc(std::span<const RocPoint> points);

}  // namespace mp3sa
