#pragma once

#include "polardet/gaussian.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polardet {

enum class MatTag {
  none,
  hermitian,  // entry(i,j) == conj(entry(j,i))
  gram,       // hermitian and PSD by construction (M * M^*)
};

// Dense matrix over an exact scalar (GaussianInt or GaussianRat).
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, MatTag tag = MatTag::none)
      : rows_(rows), cols_(cols), tag_(tag), data_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n, MatTag::gram);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  MatTag tag() const { return tag_; }
  void set_tag(MatTag t) { tag_ = t; }

  T& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const T& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat& operator+=(const Mat& o) {
    require_same_shape(o);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    // none < hermitian < gram; a sum keeps the weaker certificate.
    tag_ = std::min(tag_, o.tag_);
    return *this;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    r += o;
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  T trace() const {
    if (!square()) throw std::invalid_argument("trace of non-square matrix");
    T t{};
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  // Columns picked by strictly increasing 0-based indices.
  Mat select_columns(const std::vector<int>& idx) const {
    Mat r(rows_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j) {
      if (idx[j] < 0 || idx[j] >= cols_) throw std::out_of_range("column index");
      for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    }
    return r;
  }

  bool is_hermitian() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i; j < cols_; ++j)
        if (!(at(i, j) == at(j, i).conj())) return false;
    return true;
  }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  MatTag tag_ = MatTag::none;
  std::vector<T> data_;
};

using ExactMat = Mat<GaussianInt>;
using RatMat = Mat<GaussianRat>;

inline RatMat to_rational(const ExactMat& m) {
  RatMat r(m.rows(), m.cols(), m.tag());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = GaussianRat(m.at(i, j));
  return r;
}

// Matrix exchange format: JSON array-of-arrays, each entry a two-element
// array of decimal strings ["re","im"] so arbitrary-precision values survive
// bit-exactly.
std::string matrix_to_json(const ExactMat& m);
ExactMat matrix_from_json(const std::string& text);

}  // namespace polardet
