#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "algebroid/rational.hpp"

namespace algebroid {

/// Dense row-major matrix over Q. Zero-row and zero-column shapes are legal.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RationalVector column(std::size_t c) const;

  bool is_zero() const;
  RationalMatrix transpose() const;

  /// Matrix-vector product; v.size() must equal cols().
  RationalVector apply(std::span<const Rational> v) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, RationalMatrix a);

/// Kronecker product: (a ⊗ b)(i*b.rows + k, j*b.cols + l) = a(i,j) b(k,l).
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// Block matrix with a on top of b (equal column counts).
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

/// Copies `block` into `target` with its top-left corner at (row, col).
void place_block(RationalMatrix& target, std::size_t row, std::size_t col, const RationalMatrix& block);

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace algebroid
