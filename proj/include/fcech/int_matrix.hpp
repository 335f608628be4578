#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fcech/errors.hpp"
#include "fcech/numeric.hpp"

namespace fcech {

// Dense matrix over the integers, row-major. Rows and columns may be zero;
// a 0xN or Nx0 matrix is a legitimate (empty) linear map.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Int(0)) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("matrix dimensions must be nonnegative");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_)
        throw ShapeMismatch("ragged initializer for IntMatrix");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  static IntMatrix column(const std::vector<Int>& v) {
    IntMatrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return data_[index(r, c)]; }
  const Int& at(int r, int c) const { return data_[index(r, c)]; }

  bool is_zero() const {
    for (const Int& v : data_)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const Int& a = at(r, k);
        if (a == 0) continue;
        for (int c = 0; c < o.cols_; ++c) {
          const Int& b = o.at(k, c);
          if (b != 0) p.at(r, c) += a * b;
        }
      }
    return p;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeMismatch("matrix difference shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
    return s;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw ShapeMismatch("apply: vector length mismatch");
    std::vector<Int> y(static_cast<std::size_t>(rows_), Int(0));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (at(r, c) != 0) y[static_cast<std::size_t>(r)] += at(r, c) * x[static_cast<std::size_t>(c)];
    return y;
  }

  std::vector<Int> column_vector(int c) const {
    std::vector<Int> v(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
    return v;
  }

  // [this | o] side by side.
  IntMatrix hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
      throw ShapeMismatch("hcat: row count mismatch");
    int rows = cols_ == 0 ? o.rows_ : rows_;
    if (cols_ != 0 && o.cols_ != 0 && rows_ != o.rows_)
      throw ShapeMismatch("hcat: row count mismatch");
    IntMatrix m(rows, cols_ + o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int r = 0; r < o.rows_; ++r)
      for (int c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
    return m;
  }

  IntMatrix submatrix_columns(const std::vector<int>& cols) const {
    IntMatrix m(rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) = at(r, cols[static_cast<std::size_t>(c)]);
    return m;
  }

  IntMatrix submatrix_rows(const std::vector<int>& rows) const {
    IntMatrix m(static_cast<int>(rows.size()), cols_);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < cols_; ++c) m.at(r, c) = at(rows[static_cast<std::size_t>(r)], c);
    return m;
  }

  // Block diagonal with `copies` copies of this matrix.
  IntMatrix block_repeat(int copies) const {
    IntMatrix m(rows_ * copies, cols_ * copies);
    for (int b = 0; b < copies; ++b)
      for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(b * rows_ + r, b * cols_ + c) = at(r, c);
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int r = 0; r < rows_; ++r) {
      s += r == 0 ? "[" : " [";
      for (int c = 0; c < cols_; ++c) {
        s += at(r, c).get_str();
        if (c + 1 < cols_) s += ", ";
      }
      s += "]";
      if (r + 1 < rows_) s += "\n";
    }
    s += "]";
    return s;
  }

  // Row and column operations used by the normal-form routines.
  void swap_rows(int a, int b) {
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }
  void swap_cols(int a, int b) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
  }
  void negate_row(int r) {
    for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
  }
  void negate_col(int c) {
    for (int r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
  }
  // row[dst] += k * row[src]
  void add_row_multiple(int dst, int src, const Int& k) {
    if (k == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
  }
  // col[dst] += k * col[src]
  void add_col_multiple(int dst, int src, const Int& k) {
    if (k == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw ShapeMismatch("matrix index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_;
  int cols_;
  std::vector<Int> data_;
};

}  // namespace fcech
