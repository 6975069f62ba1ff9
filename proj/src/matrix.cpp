#include "mp3sa/matrix.hpp"

#include <algorithm>

#include "mp3sa/error.hpp"

namespace mp3sa {

Matrix Matrix::from_rows(std::span<const std::vector<double>> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw Error(ErrorCode::kSchemaMismatch, "ragged rows");
        }
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
    Matrix m(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto src = row(indices[i]);
        std::copy(src.begin(), src.end(), m.row(i).begin());
    }
    return m;
}

Matrix Matrix::select_cols(std::span<const int> indices) const {
    Matrix m(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < indices.size(); ++j) {
            m(i, j) = (*this)(i, static_cast<std::size_t>(indices[j]));
        }
    }
    return m;
}

}  // namespace mp3sa
