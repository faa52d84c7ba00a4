#include "contra/mat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace contra {

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string("field mismatch in ") + what + ": " + a.name() +
                                " vs " + b.name());
  }
}

void require_shape(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("shape mismatch: " + message);
}

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), col_start_(cols + 1, 0) {
  if (rows > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("matrix has too many rows");
  }
}

Mat Mat::from_triplets(const Field& f, std::size_t rows, std::size_t cols,
                       std::vector<Triplet> entries) {
  Mat m(f, rows, cols);
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  m.row_index_.reserve(entries.size());
  m.values_.reserve(entries.size());
  std::size_t i = 0;
  while (i < entries.size()) {
    const std::size_t r = entries[i].row;
    const std::size_t c = entries[i].col;
    if (r >= rows || c >= cols) {
      throw std::out_of_range("triplet (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") outside " + m.shape_string());
    }
    Scalar sum = std::move(entries[i].value);
    require_same_field(sum.field(), f, "matrix entry");
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].row == r && entries[j].col == c) {
      sum += entries[j].value;
      ++j;
    }
    if (!sum.is_zero()) {
      m.row_index_.push_back(static_cast<std::uint32_t>(r));
      m.values_.push_back(std::move(sum));
      ++m.col_start_[c + 1];
    }
    i = j;
  }
  for (std::size_t c = 0; c < cols; ++c) m.col_start_[c + 1] += m.col_start_[c];
  return m;
}

Mat Mat::identity(const Field& f, std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Scalar::one(f)});
  return from_triplets(f, n, n, std::move(t));
}

Mat Mat::from_rows(const Field& f, std::size_t rows, std::size_t cols,
                   std::initializer_list<long> values) {
  require_shape(values.size() == rows * cols, "dense literal size");
  std::vector<Triplet> t;
  std::size_t k = 0;
  for (long v : values) {
    if (v != 0) t.push_back({k / cols, k % cols, Scalar(f, v)});
    ++k;
  }
  return from_triplets(f, rows, cols, std::move(t));
}

Mat Mat::from_dense(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i) {
    require_shape(rows[i].size() == c, "ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j) {
      if (!rows[i][j].is_zero()) t.push_back({i, j, rows[i][j]});
    }
  }
  return from_triplets(f, r, c, std::move(t));
}

Mat Mat::column(const Field& f, std::initializer_list<long> values) {
  std::vector<Triplet> t;
  std::size_t i = 0;
  for (long v : values) {
    if (v != 0) t.push_back({i, 0, Scalar(f, v)});
    ++i;
  }
  return from_triplets(f, values.size(), 1, std::move(t));
}

Mat::Column Mat::col(std::size_t j) const {
  const std::size_t b = col_start_[j];
  const std::size_t e = col_start_[j + 1];
  return {std::span<const std::uint32_t>(row_index_.data() + b, e - b),
          std::span<const Scalar>(values_.data() + b, e - b)};
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  const Column c = col(j);
  auto it = std::lower_bound(c.rows.begin(), c.rows.end(), static_cast<std::uint32_t>(i));
  if (it != c.rows.end() && *it == i) return c.values[it - c.rows.begin()];
  return Scalar::zero(field_);
}

std::vector<Triplet> Mat::triplets() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t k = col_start_[j]; k < col_start_[j + 1]; ++k) {
      t.push_back({row_index_[k], j, values_[k]});
    }
  }
  return t;
}

std::vector<std::vector<Scalar>> Mat::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_, Scalar::zero(field_)));
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t k = col_start_[j]; k < col_start_[j + 1]; ++k) d[row_index_[k]][j] = values_[k];
  }
  return d;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  std::vector<std::size_t> count(rows_ + 1, 0);
  for (std::uint32_t r : row_index_) ++count[r + 1];
  for (std::size_t i = 0; i < rows_; ++i) count[i + 1] += count[i];
  t.col_start_ = count;
  t.row_index_.resize(nnz());
  t.values_.resize(nnz());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t k = col_start_[j]; k < col_start_[j + 1]; ++k) {
      const std::size_t pos = count[row_index_[k]]++;
      t.row_index_[pos] = static_cast<std::uint32_t>(j);
      t.values_[pos] = values_[k];
    }
  }
  return t;
}

Mat Mat::select_cols(std::span<const std::size_t> cols) const {
  Mat m(field_, rows_, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_shape(cols[c] < cols_, "column selection out of range");
    const Column src = col(cols[c]);
    m.row_index_.insert(m.row_index_.end(), src.rows.begin(), src.rows.end());
    m.values_.insert(m.values_.end(), src.values.begin(), src.values.end());
    m.col_start_[c + 1] = m.values_.size();
  }
  return m;
}

Mat Mat::cols_range(std::size_t begin, std::size_t end) const {
  std::vector<std::size_t> idx;
  for (std::size_t j = begin; j < end; ++j) idx.push_back(j);
  return select_cols(idx);
}

Mat Mat::scaled(const Scalar& s) const {
  if (s.is_zero()) return Mat(field_, rows_, cols_);
  Mat m(*this);
  for (Scalar& v : m.values_) v *= s;
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a.field_, b.field_, "matrix product");
  require_shape(a.cols_ == b.rows_, "product " + a.shape_string() + " * " + b.shape_string());
  Mat m(a.field_, a.rows_, b.cols_);
  std::vector<std::pair<std::uint32_t, Scalar>> acc;
  for (std::size_t j = 0; j < b.cols_; ++j) {
    acc.clear();
    const Mat::Column bc = b.col(j);
    for (std::size_t t = 0; t < bc.size(); ++t) {
      const Mat::Column ac = a.col(bc.rows[t]);
      for (std::size_t s = 0; s < ac.size(); ++s) {
        acc.emplace_back(ac.rows[s], ac.values[s] * bc.values[t]);
      }
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t i = 0;
    while (i < acc.size()) {
      Scalar sum = std::move(acc[i].second);
      std::size_t k = i + 1;
      while (k < acc.size() && acc[k].first == acc[i].first) sum += acc[k++].second;
      if (!sum.is_zero()) {
        m.row_index_.push_back(acc[i].first);
        m.values_.push_back(std::move(sum));
      }
      i = k;
    }
    m.col_start_[j + 1] = m.values_.size();
  }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a.field_, b.field_, "matrix sum");
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_,
                "sum " + a.shape_string() + " + " + b.shape_string());
  Mat m(a.field_, a.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    const Mat::Column x = a.col(j);
    const Mat::Column y = b.col(j);
    std::size_t s = 0, t = 0;
    while (s < x.size() || t < y.size()) {
      if (t == y.size() || (s < x.size() && x.rows[s] < y.rows[t])) {
        m.row_index_.push_back(x.rows[s]);
        m.values_.push_back(x.values[s++]);
      } else if (s == x.size() || y.rows[t] < x.rows[s]) {
        m.row_index_.push_back(y.rows[t]);
        m.values_.push_back(y.values[t++]);
      } else {
        Scalar v = x.values[s] + y.values[t];
        if (!v.is_zero()) {
          m.row_index_.push_back(x.rows[s]);
          m.values_.push_back(std::move(v));
        }
        ++s;
        ++t;
      }
    }
    m.col_start_[j + 1] = m.values_.size();
  }
  return m;
}

Mat operator-(const Mat& a, const Mat& b) { return a + b.scaled(-Scalar::one(b.field_)); }

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.col_start_ == b.col_start_ && a.row_index_ == b.row_index_ && a.values_ == b.values_;
}

std::string Mat::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

void MatBuilder::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (!value.is_zero()) entries_.push_back({row, col, value});
}

Mat MatBuilder::build() && { return Mat::from_triplets(field_, rows_, cols_, std::move(entries_)); }

Mat kron(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "kron");
  std::vector<Triplet> t;
  t.reserve(a.nnz() * b.nnz());
  for (const Triplet& x : a.triplets()) {
    for (const Triplet& y : b.triplets()) {
      t.push_back({x.row * b.rows() + y.row, x.col * b.cols() + y.col, x.value * y.value});
    }
  }
  return Mat::from_triplets(a.field(), a.rows() * b.rows(), a.cols() * b.cols(), std::move(t));
}

Mat kron_apply(const Mat& a, const Mat& b, const Mat& x) {
  require_same_field(a.field(), b.field(), "kron_apply");
  require_same_field(a.field(), x.field(), "kron_apply");
  require_shape(x.rows() == a.cols() * b.cols(),
                "kron_apply " + a.shape_string() + " (x) " + b.shape_string() + " on " +
                    x.shape_string());
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const Mat::Column xc = x.col(j);
    for (std::size_t s = 0; s < xc.size(); ++s) {
      const Mat::Column ac = a.col(xc.rows[s] / b.cols());
      const Mat::Column bc = b.col(xc.rows[s] % b.cols());
      for (std::size_t u = 0; u < ac.size(); ++u) {
        const Scalar av = ac.values[u] * xc.values[s];
        for (std::size_t w = 0; w < bc.size(); ++w) {
          t.push_back({std::size_t(ac.rows[u]) * b.rows() + bc.rows[w], j, av * bc.values[w]});
        }
      }
    }
  }
  return Mat::from_triplets(a.field(), a.rows() * b.rows(), x.cols(), std::move(t));
}

Mat hstack(const std::vector<Mat>& blocks) {
  require_shape(!blocks.empty(), "hstack of nothing");
  const Field f = blocks[0].field();
  const std::size_t r = blocks[0].rows();
  std::vector<Triplet> t;
  std::size_t offset = 0;
  for (const Mat& m : blocks) {
    require_same_field(f, m.field(), "hstack");
    require_shape(m.rows() == r, "hstack row counts");
    for (Triplet& x : m.triplets()) t.push_back({x.row, x.col + offset, std::move(x.value)});
    offset += m.cols();
  }
  return Mat::from_triplets(f, r, offset, std::move(t));
}

Mat vstack(const std::vector<Mat>& blocks) {
  require_shape(!blocks.empty(), "vstack of nothing");
  const Field f = blocks[0].field();
  const std::size_t c = blocks[0].cols();
  std::vector<Triplet> t;
  std::size_t offset = 0;
  for (const Mat& m : blocks) {
    require_same_field(f, m.field(), "vstack");
    require_shape(m.cols() == c, "vstack column counts");
    for (Triplet& x : m.triplets()) t.push_back({x.row + offset, x.col, std::move(x.value)});
    offset += m.rows();
  }
  return Mat::from_triplets(f, offset, c, std::move(t));
}

Mat direct_sum(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "direct sum");
  std::vector<Triplet> t = a.triplets();
  for (Triplet& x : b.triplets()) t.push_back({x.row + a.rows(), x.col + a.cols(), std::move(x.value)});
  return Mat::from_triplets(a.field(), a.rows() + b.rows(), a.cols() + b.cols(), std::move(t));
}

}  // namespace contra
