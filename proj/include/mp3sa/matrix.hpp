#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mp3sa {

/// Dense row-major matrix of samples (rows) by features (columns).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_rows(std::span<const std::vector<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Rows `indices` in order.
    Matrix select_rows(std::span<const std::size_t> indices) const;
    /// Columns `indices` in order.
    Matrix select_cols(std::span<const int> indices) const;

    const std::vector<double>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace mp3sa
