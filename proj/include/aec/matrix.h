// Copyright 2026 aeckit authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef AEC_MATRIX_H_
#define AEC_MATRIX_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace aec {

// Dense row-major matrix of doubles. Small and dependency-free; the model
// tensors and feature matrices in this project never exceed a few MB.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  double* row(size_t r) { return data_.data() + r * cols_; }
  const double* row(size_t r) const { return data_.data() + r * cols_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  void fill(double v) { data_.assign(data_.size(), v); }

  bool same_shape(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

// y = A x, with x of length A.cols() and y of length A.rows().
inline void matvec(const Matrix& a, const double* x, double* y) {
  for (size_t r = 0; r < a.rows(); ++r) {
    const double* row = a.row(r);
    double acc = 0.0;
    for (size_t c = 0; c < a.cols(); ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

// y = A^T x, with x of length A.rows() and y of length A.cols().
inline void matvec_t(const Matrix& a, const double* x, double* y) {
  for (size_t c = 0; c < a.cols(); ++c) y[c] = 0.0;
  for (size_t r = 0; r < a.rows(); ++r) {
    const double* row = a.row(r);
    const double xr = x[r];
    for (size_t c = 0; c < a.cols(); ++c) y[c] += row[c] * xr;
  }
}

}  // namespace aec

#endif  // AEC_MATRIX_H_
