#include "mp3sa/normalize.hpp"

#include <algorithm>
#include <string>

#include "mp3sa/error.hpp"
#include "mp3sa/stats.hpp"

namespace mp3sa {

NormStats fit_norm(std::span<const std::vector<double>> rows, std::vector<std::string> names) {
    if (rows.size() < 2) {
        throw Error(ErrorCode::kInvalidArgument, "normalization needs at least 2 training vectors");
    }
    const std::size_t width = names.size();
    NormStats stats{std::move(names), std::vector<double>(width), std::vector<double>(width)};
    std::vector<double> column(rows.size());
    for (std::size_t k = 0; k < width; ++k) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != width) {
                throw Error(ErrorCode::kSchemaMismatch, "row " + std::to_string(i) + " has " +
                                                            std::to_string(rows[i].size()) +
                                                            " values, expected " + std::to_string(width));
            }
            column[i] = rows[i][k];
        }
        stats.mean[k] = mean(column);
        stats.std[k] = sample_std(column);
    }
    return stats;
}

std::vector<double> apply_norm(const NormStats& stats, std::span<const double> values) {
    if (values.size() != stats.size()) {
        throw Error(ErrorCode::kSchemaMismatch, "vector has " + std::to_string(values.size()) +
                                                    " values, stats expect " + std::to_string(stats.size()));
    }
    std::vector<double> out(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        out[k] = stats.std[k] > 0.0 ? (values[k] - stats.mean[k]) / stats.std[k] : 0.0;
    }
    return out;
}

std::vector<double> apply_norm(const NormStats& stats, std::span<const double> values,
                               std::span<const std::string> names) {
    if (!std::equal(names.begin(), names.end(), stats.names.begin(), stats.names.end())) {
        throw Error(ErrorCode::kSchemaMismatch, "feature names differ from the normalization stats");
    }
    return apply_norm(stats, values);
}

}  // namespace mp3sa
