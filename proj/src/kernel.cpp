#include "mp3sa/kernel.hpp"

#include <cmath>
#include <string>

#include "mp3sa/error.hpp"

namespace mp3sa {

std::string_view to_string(KernelType type) { return type == KernelType::kLinear ? "linear" : "rbf"; }

KernelType kernel_type_from_string(std::string_view name) {
    if (name == "linear") {
        return KernelType::kLinear;
    }
    if (name == "rbf" || name == "gaussian") {
        return KernelType::kRbf;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown kernel '" + std::string(name) + "'");
}

double Kernel::operator()(std::span<const double> a, std::span<const double> b) const {
    double acc = 0.0;
    if (type == KernelType::kLinear) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            acc += a[k] * b[k];
        }
        return acc;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return std::exp(-gamma * acc);
}

std::vector<double> kernel_matrix_serial(const Matrix& x, const Kernel& kernel) {
    const std::size_t n = x.rows();
    std::vector<double> k(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            k[i * n + j] = k[j * n + i] = kernel(x.row(i), x.row(j));
        }
    }
    return k;
}

std::vector<double> kernel_matrix(const Matrix& x, const Kernel& kernel) {
    const std::size_t n = x.rows();
    std::vector<double> k(n * n);
    const auto rows = static_cast<long>(n);
    // Each row writes its own lower-triangle entries and their mirror.
#pragma omp parallel for schedule(dynamic, 8)
    for (long ii = 0; ii < rows; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j <= i; ++j) {
            k[i * n + j] = k[j * n + i] = kernel(x.row(i), x.row(j));
        }
    }
    return k;
}

}  // namespace mp3sa
