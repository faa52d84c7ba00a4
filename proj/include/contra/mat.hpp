#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "contra/field.hpp"

namespace contra {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Immutable sparse matrix over an exact field, stored column-compressed.
///
/// Tensor indices follow one global convention: the basis vector
/// e_i (x) e_j of U (x) W sits at index i * dim(W) + j. Linear maps
/// Hom(X, Y) are identified with X* (x) Y, so the map sending e_x to e_y
/// has coordinate x * dim(Y) + y.
class Mat {
 public:
  struct Column {
    std::span<const std::uint32_t> rows;
    std::span<const Scalar> values;
    std::size_t size() const { return rows.size(); }
  };

  Mat() : field_(Field::rationals()) {}
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  /// Duplicate coordinates are summed; zeros are dropped.
  static Mat from_triplets(const Field& f, std::size_t rows, std::size_t cols,
                           std::vector<Triplet> entries);
  static Mat identity(const Field& f, std::size_t n);
  /// Row-major dense integer literal, mainly for fixtures.
  static Mat from_rows(const Field& f, std::size_t rows, std::size_t cols,
                       std::initializer_list<long> values);
  static Mat from_dense(const Field& f, const std::vector<std::vector<Scalar>>& rows);
  /// Column vector from integers.
  static Mat column(const Field& f, std::initializer_list<long> values);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  Column col(std::size_t j) const;
  Scalar at(std::size_t i, std::size_t j) const;
  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Scalar>> to_dense() const;

  Mat transpose() const;
  Mat select_cols(std::span<const std::size_t> cols) const;
  Mat cols_range(std::size_t begin, std::size_t end) const;
  Mat scaled(const Scalar& s) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string shape_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<std::uint32_t> row_index_;
  std::vector<Scalar> values_;
};

/// Accumulates triplets for a Mat; duplicates are summed on build().
class MatBuilder {
 public:
  MatBuilder(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols) {}
  void add(std::size_t row, std::size_t col, const Scalar& value);
  void add(std::size_t row, std::size_t col, long value) { add(row, col, Scalar(field_, value)); }
  void reserve(std::size_t n) { entries_.reserve(n); }
  Mat build() &&;
  const Field& field() const { return field_; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Triplet> entries_;
};

/// Kronecker product with the row-major tensor index convention.
Mat kron(const Mat& a, const Mat& b);
/// (a (x) b) * x without materializing the Kronecker product.
Mat kron_apply(const Mat& a, const Mat& b, const Mat& x);
Mat hstack(const std::vector<Mat>& blocks);
Mat vstack(const std::vector<Mat>& blocks);
/// Block-diagonal direct sum.
Mat direct_sum(const Mat& a, const Mat& b);

void require_same_field(const Field& a, const Field& b, const char* what);
void require_shape(bool ok, const std::string& message);

}  // namespace contra
