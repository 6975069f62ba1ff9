#include "mp3sa/stats.hpp"

#include <algorithm>
#include <cmath>

#include "mp3sa/error.hpp"

namespace mp3sa {

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "mean of empty series");
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

double sample_std(std::span<const double> values) {
    if (values.size() < 2) {
        return 0.0;
    }
    // Exactly zero for constant input, whatever the rounding of the mean.
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi) {
        return 0.0;
    }
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - m) * (v - m);
    }
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

Summary summarize(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "summary of empty series");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {mean(values), sample_std(values), *lo, *hi};
}

Moments moments(std::span<const double> values) {
    Moments out;
    out.std = sample_std(values);
    if (out.std == 0.0) {
        return out;
    }
    const double m = mean(values);
    double m3 = 0.0;
    double m4 = 0.0;
    for (double v : values) {
        const double d = v - m;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    const auto n = static_cast<double>(values.size());
    const double s2 = out.std * out.std;
    out.skewness = (m3 / n) / (s2 * out.std);
    out.kurtosis = (m4 / n) / (s2 * s2);
    return out;
}

}  // namespace mp3sa
