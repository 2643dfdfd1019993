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

#include <string>
#include <vector>

#include "skewpois/linalg.hpp"

namespace skewpois {

// Per-element geometry of a finite linear action: the fixed subspace, a
// complementary sum of nontrivial eigenspaces, and an eigenbasis ("frame")
// adapted to both. For an abelian group the frame is one simultaneous
// eigenbasis shared by every element, with pivot-row ordering so diagonal
// generators keep the standard basis. Otherwise the frame is per element,
// fixed columns first.
struct FixedPointData {
  int element = 0;
  int codim = 0;                 // codimension of the fixed subspace
  std::vector<int> fixed_idx;    // frame columns spanning the fixed subspace
  std::vector<int> normal_idx;   // frame columns spanning the complement
  Mat frame;                     // columns are the basis vectors
  Mat frame_inv;                 // rows are the dual coordinate forms
  std::vector<Cyclo> eigs;       // eigenvalue of the element on each column
  Cyclo det_normal;              // product of eigs over normal_idx
};

// A finite matrix group with its multiplication table and cached
// fixed-point geometry. Immutable after build, so lookups are safe to
// share across threads.
class Group {
 public:
  // Closes the generators under multiplication. Generator names label the
  // element words ("a*b^2"); defaults are a, b, c, ... Throws
  // std::invalid_argument for singular or dimension-mismatched generators
  // and when the closure exceeds size_limit (which also catches generators
  // of infinite order).
  static Group build(const std::vector<Mat>& generators,
                     std::vector<std::string> names = {},
                     int size_limit = 64);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(mats_.size()); }
  int identity() const { return 0; }
  const Mat& mat(int g) const { return mats_[g]; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int g) const { return inv_[g]; }
  int order_of(int g) const { return order_[g]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  const std::vector<std::vector<int>>& conjugacy_classes() const {
    return classes_;
  }
  const std::vector<int>& centralizer(int g) const { return centralizers_[g]; }
  const FixedPointData& fixed_data(int g) const { return fixed_[g]; }

  // Elements of codimension exactly two, ascending; closed under
  // conjugation because the codimension is a class function.
  std::vector<int> codim2_set() const;
  // True when no element except the identity fixes the whole space.
  bool is_reduced() const;

  const std::string& name_of(int g) const { return names_[g]; }
  // Parses a generator word such as "e", "a", "a^2*b", "a^-1". Throws
  // std::invalid_argument for unknown names or malformed words.
  int element_named(const std::string& word) const;

 private:
  int dim_ = 0;
  std::vector<Mat> mats_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> order_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::vector<std::vector<int>> classes_;
  std::vector<std::vector<int>> centralizers_;
  std::vector<FixedPointData> fixed_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, int>> generator_index_;

  int find(const Mat& m) const;
};

}  // namespace skewpois
