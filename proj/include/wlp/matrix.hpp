#ifndef WLP_MATRIX_HPP
#define WLP_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "wlp/complex.hpp"

namespace wlp {

// Dense row-major matrix of small non-negative integers. Entries are
// int32 on purpose: multiplication-map matrices are 0/1 and power maps
// carry r! <= 12!, while the big instances run to ~5000 x ~14000 where
// entry width dominates memory.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  std::int32_t& at(std::int64_t r, std::int64_t c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  std::int32_t at(std::int64_t r, std::int64_t c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  const std::vector<std::int32_t>& data() const { return data_; }
  std::vector<std::int32_t>& data() { return data_; }

  // Basis faces labeling rows/columns; empty for unlabeled matrices.
  std::vector<Face> row_faces;
  std::vector<Face> col_faces;

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<std::int32_t> data_;
};

}  // namespace wlp

#endif  // WLP_MATRIX_HPP
