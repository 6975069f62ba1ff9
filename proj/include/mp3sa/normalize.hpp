#pragma once

#include <span>
#include <string>
#include <vector>

namespace mp3sa {

/// Per-feature training mean and sample standard deviation, kept with a
/// model and reused unchanged at prediction time.
struct NormStats {
    std::vector<std::string> names;
    std::vector<double> mean;
    std::vector<double> std;

    std::size_t size() const { return mean.size(); }
};

/// Needs at least two rows; every row must have names.size() values.
NormStats fit_norm(std::span<const std::vector<double>> rows, std::vector<std::string> names);

/// (x - mean) / std per column; zero-variance columns map to 0. Throws
/// kSchemaMismatch when the vector length differs from the stats.
std::vector<double> apply_norm(const NormStats& stats, std::span<const double> values);
/// Same, also checking the column names.
std::vector<double> apply_norm(const NormStats& stats, std::span<const double> values,
                               std::span<const std::string> names);

}  // namespace mp3sa
