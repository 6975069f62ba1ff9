#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mp3sa/matrix.hpp"

namespace mp3sa {

enum class KernelType { kLinear, kRbf };

std::string_view to_string(KernelType type);
KernelType kernel_type_from_string(std::string_view name);

struct Kernel {
    KernelType type = KernelType::kLinear;
    double gamma = 0.0;  // rbf: exp(-gamma * |a - b|^2)

    double operator()(std::span<const double> a, std::span<const double> b) const;
    bool operator==(const Kernel&) const = default;
};

/// Gram matrix K[i * n + j] over the rows of X; serial reference.
std::vector<double> kernel_matrix_serial(const Matrix& x, const Kernel& kernel);
/// Same values, rows computed in parallel (OpenMP).
std::vector<double> kernel_matrix(const Matrix& x, const Kernel& kernel);

}  // namespace mp3sa
