#pragma once

#include "hypertoric/error.hpp"
#include "hypertoric/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypertoric {

/// Dense row-major matrix of arbitrary-precision integers. Either dimension
/// may be zero.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  IntMatrix(std::size_t rows, std::size_t cols, IntVector entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionMismatch("entry count does not match " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
  }

  /// Nonempty literal, e.g. IntMatrix{{1, 0}, {0, 1}}. Rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  /// Builds a rows.size() x cols matrix; cols is needed when rows is empty
  /// or every row is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged row list");
      std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return entries_.empty(); }
  const IntVector& entries() const noexcept { return entries_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<Integer> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix select_columns(std::span<const std::size_t> columns) const {
    IntMatrix s(rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < columns.size(); ++k) s(i, k) = (*this)(i, columns[k]);
    return s;
  }

  IntMatrix select_rows(std::span<const std::size_t> rows) const {
    IntMatrix s(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
      std::copy(row(rows[k]).begin(), row(rows[k]).end(), s.row(k).begin());
    return s;
  }

  IntMatrix without_column(std::size_t j) const {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < cols_; ++k)
      if (k != j) keep.push_back(k);
    return select_columns(keep);
  }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (x != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
  }

  /// column[target] += factor * column[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
  }

  void negate_row(std::size_t i) {
    for (auto& x : row(i)) x = -x;
  }

  void negate_column(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> x) {
    if (a.cols_ != x.size())
      throw DimensionMismatch("cannot apply " + a.shape() + " to a vector of length " +
                              std::to_string(x.size()));
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector entries_;
};

}  // namespace hypertoric
