#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mp3sa/kernel.hpp"
#include "mp3sa/matrix.hpp"

namespace mp3sa {

/// Binary kernel SVM: decision(x) = sum_i coef_i K(sv_i, x) + bias with
/// coef_i = alpha_i y_i. A positive decision means label +1.
struct BinarySvm {
    Kernel kernel;
    double c = 1.0;
    Matrix support_vectors;
    std::vector<double> coef;
    double bias = 0.0;

    double decision(std::span<const double> x) const;
    int predict(std::span<const double> x) const { return decision(x) > 0.0 ? 1 : -1; }
};

struct SvmOptions {
    Kernel kernel;
    double c = 1.0;
    double tolerance = 1e-3;
    std::size_t max_iterations = 10'000'000;
    bool record_objective = false;
    bool parallel_kernel = true;
};

struct SvmTrainResult {
    BinarySvm model;
    std::vector<double> alpha;  // one per training sample
    std::size_t iterations = 0;
    bool converged = false;
    /// Dual objective sum(alpha) - 1/2 alpha' Q alpha after each iteration
    /// (only when SvmOptions::record_objective is set).
    std::vector<double> objective;
};

/// Sequential minimal optimization with second-order working-set
/// selection; stops when the maximal KKT violation drops below the
/// tolerance. Labels must be +1/-1 with both present (kSingleClass
/// otherwise); NaN features are rejected.
SvmTrainResult svm_train(const Matrix& x, std::span<const int> y, const SvmOptions& options);

}  // namespace mp3sa
