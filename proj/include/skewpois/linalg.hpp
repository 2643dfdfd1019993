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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewpois/cyclotomic.hpp"

namespace skewpois {

// Dense matrix over the cyclotomic scalars. Everything is exact; there is
// no pivot-size heuristic because there is no rounding.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols);
  static Mat identity(int n);
  static Mat diagonal(const std::vector<Cyclo>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyclo& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Cyclo& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Cyclo& c) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Cyclo det() const;
  // Throws std::domain_error when the matrix is singular or not square.
  Mat inverse() const;
  int rank() const;
  bool is_identity() const;
  std::vector<Cyclo> apply(const std::vector<Cyclo>& v) const;
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Cyclo> a_;
};

// Basis of the right kernel {v : m v = 0}, one vector per entry.
std::vector<std::vector<Cyclo>> kernel_basis(const Mat& m);

// Reduced column echelon form with zero columns dropped. Canonical: two
// matrices with the same column span reduce to the same form.
Mat column_reduced(const Mat& m);

// One solution of m x = rhs, or empty when the system is inconsistent.
std::optional<std::vector<Cyclo>> solve(const Mat& m,
                                        const std::vector<Cyclo>& rhs);

}  // namespace skewpois
