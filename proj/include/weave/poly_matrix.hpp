#pragma once

#include "weave/cyclotomic.hpp"
#include "weave/errors.hpp"
#include "weave/laurent_poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace weave {

// Dense row-major matrix over an exact ring.
template <class Ring>
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Ring& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Ring& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DomainError("matrix product of " + a.shape() + " and " + b.shape());
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Ring& aik = a(i, k);
        if (aik == Ring()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DomainError("matrix sum of " + a.shape() + " and " + b.shape());
    for (std::size_t idx = 0; idx < a.data_.size(); ++idx) a.data_[idx] += b.data_[idx];
    return a;
  }

  // Every entry multiplied by s on the left.
  friend Matrix operator*(const Ring& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  Matrix pow(unsigned exponent) const {
    if (!is_square()) throw DomainError("power of non-square matrix " + shape());
    Matrix result = identity(rows_);
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == Ring())) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Ring> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using CycloMatrix = Matrix<CycloInt>;

// Entrywise eval_at.
CycloMatrix eval_matrix(const PolyMatrix& m, long long half_power_of_zeta);

}  // namespace weave
