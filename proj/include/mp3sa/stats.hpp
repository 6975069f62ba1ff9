#pragma once

#include <span>

namespace mp3sa {

/// mean, sample standard deviation (n - 1; zero for a single value), min, max.
struct Summary {
    double mean = 0.0;
    double std = 0.0;
    double min = 0.0;
    double max = 0.0;
};

Summary summarize(std::span<const double> values);

double mean(std::span<const double> values);
/// Sample standard deviation with the n - 1 denominator.
double sample_std(std::span<const double> values);

/// Standardized third and fourth moments, normalized by the sample standard
/// deviation. Kurtosis is non-excess. Both are 0 when the variance is 0.
struct Moments {
    double std = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

Moments moments(std::span<const double> values);

}  // namespace mp3sa
