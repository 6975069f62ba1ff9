#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mp3sa/matrix.hpp"
#include "mp3sa/normalize.hpp"
#include "mp3sa/ovo.hpp"
#include "mp3sa/svm.hpp"

namespace mp3sa {

inline constexpr int kModelVersion = 1;
inline constexpr int kSelectionVersion = 1;

/// A trained classifier with everything needed to score a new file.
struct Model {
    std::string schema_id;                   // si, mdct, stego or proposed7
    std::string channel_policy = "pooled";
    std::vector<std::string> feature_names;  // input columns, in order
    std::vector<std::string> si_features;    // proposed7 only
    Kernel kernel;
    double c = 1.0;
    std::vector<std::string> classes;
    NormStats norm;
    OvoModel ovo;
};

/// Normalization fitted on all rows, then one-vs-one SVMs on the
/// normalized data. An rbf gamma <= 0 becomes 1 / feature count.
Model fit_model(const Matrix& x, std::span<const int> labels, std::vector<std::string> classes,
                std::vector<std::string> names, const SvmOptions& options);

struct ModelPrediction {
    int label = 0;
    std::string class_name;
    double score = 0.0;
};

/// Raw (unnormalized) features; throws kSchemaMismatch if `names` differ
/// from the model's.
ModelPrediction predict(const Model& model, std::span<const double> values, std::span<const std::string> names);

std::string model_to_json(const Model& model);
/// Throws kFormat for malformed documents or an unknown version.
Model model_from_json(std::string_view text);
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

/// Result of a GA run as stored on disk.
struct Selection {
    std::string schema_id;
    std::vector<std::string> selected;
    std::vector<double> trace;
    double fitness = 0.0;
    std::uint64_t seed = 0;
};

std::string selection_to_json(const Selection& selection);
Selection selection_from_json(std::string_view text);
void save_selection(const Selection& selection, const std::string& path);
Selection load_selection(const std::string& path);

}  // namespace mp3sa
