#include "mp3sa/roc.hpp"

#include <algorithm>
#include <numeric>

#include "mp3sa/error.hpp"

namespace mp3sa {

std::vector<RocPoint> roc_points(std::span<const double> scores, std::span<const int> positive) {
    if (scores.size() != positive.size()) {
        throw Error(ErrorCode::kInvalidArgument, "score and label counts differ");
    }
    std::size_t pos = 0;
    for (int p : positive) {
        pos += p != 0 ? 1 : 0;
    }
    const std::size_t neg = positive.size() - pos;
    if (pos == 0 || neg == 0) {
        throw Error(ErrorCode::kSingleClass, "ROC needs both classes");
    }
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<RocPoint> points{{0.0, 0.0}};
    std::size_t tp = 0;
    std::size_t fp = 0;
    for (std::size_t i = 0; i < order.size();) {
        const double s = scores[order[i]];
        while (i < order.size() && scores[order[i]] == s) {
            (positive[order[i]] != 0 ? tp : fp) += 1;
            ++i;
        }
        points.push_back({static_cast<double>(fp) / static_cast<double>(neg),
                          static_cast<double>(tp) / static_cast<double>(pos)});
    }
    return points;
}

double roc_auc(std::span<const RocPoint> points) {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        area += (points[i].fpr - points[i - 1].fpr) * (points[i].tpr + points[i - 1].tpr) / 2.0;
    }
    return area;
}

}  // namespace mp3sa
