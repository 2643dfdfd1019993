/*
   Copyright 2026 The skewpois authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewpois/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace skewpois {

namespace {

// Gauss-Jordan elimination to reduced row echelon form, in place.
// Returns the pivot column of each pivot row.
std::vector<int> row_reduce(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Cyclo inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Cyclo factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::domain_error("Mat: negative dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Cyclo());
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo(1);
  return m;
}

Mat Mat::diagonal(const std::vector<Cyclo>& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::domain_error("Mat: shape mismatch in product");
  Mat out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::domain_error("Mat: shape mismatch in sum");
  Mat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::domain_error("Mat: shape mismatch in difference");
  Mat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

Mat Mat::scaled(const Cyclo& c) const {
  Mat out = *this;
  for (auto& entry : out.a_) entry *= c;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Cyclo Mat::det() const {
  if (rows_ != cols_) throw std::domain_error("det: matrix not square");
  Mat work = *this;
  Cyclo result(1);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i) {
      if (!work.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Cyclo();
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
      result = -result;
    }
    result *= work.at(col, col);
    Cyclo inv = work.at(col, col).inverse();
    for (int i = col + 1; i < rows_; ++i) {
      if (work.at(i, col).is_zero()) continue;
      Cyclo factor = work.at(i, col) * inv;
      for (int j = col; j < cols_; ++j)
        work.at(i, j) -= factor * work.at(col, j);
    }
  }
  return result;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse: matrix not square");
  Mat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Cyclo(1);
  }
  auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
    throw std::domain_error("inverse: matrix is singular");
  for (int i = 0; i < rows_; ++i)
    if (pivots[i] != i) throw std::domain_error("inverse: matrix is singular");
  Mat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  return out;
}

int Mat::rank() const {
  Mat work = *this;
  return static_cast<int>(row_reduce(work).size());
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

std::vector<Cyclo> Mat::apply(const std::vector<Cyclo>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::domain_error("apply: vector length mismatch");
  std::vector<Cyclo> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<Cyclo>> kernel_basis(const Mat& m) {
  Mat work = m;
  auto pivots = row_reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int col : pivots) is_pivot[col] = true;
  std::vector<std::vector<Cyclo>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclo> v(m.cols());
    v[free] = Cyclo(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -work.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat column_reduced(const Mat& m) {
  Mat work = m.transpose();
  auto pivots = row_reduce(work);
  Mat out(m.rows(), static_cast<int>(pivots.size()));
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int i = 0; i < m.rows(); ++i)
      out.at(i, static_cast<int>(r)) = work.at(static_cast<int>(r), i);
  return out;
}

std::optional<std::vector<Cyclo>> solve(const Mat& m,
                                        const std::vector<Cyclo>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw std::domain_error("solve: vector length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Cyclo> x(m.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

}  // namespace skewpois
