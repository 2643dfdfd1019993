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

#include <functional>
#include <map>

#include "skewpois/crossed.hpp"

namespace skewpois {

// Homogeneous polyvector field with polynomial coefficients: a sum of
// terms f(x) d_{i1} ^ ... ^ d_{ik} keyed by strictly increasing index
// lists. add_term accepts indices in any order and normalizes the sign;
// lists with a repeated index contribute zero and are dropped, which is
// exactly the aggregation needed when antisymmetrizing coefficients
// indexed by arbitrary tuples.
class Multivector {
 public:
  Multivector() : nvars_(0), degree_(0) {}
  Multivector(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, MultiPoly>& terms() const { return terms_; }
  // Signed lookup: indices in any order, zero for repeats or absence.
  MultiPoly coeff(std::vector<int> idx) const;
  void add_term(std::vector<int> idx, const MultiPoly& f);

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  Multivector scaled(const Cyclo& c) const;
  Multivector wedge(const Multivector& o) const;

  bool operator==(const Multivector& o) const;
  bool operator!=(const Multivector& o) const { return !(*this == o); }
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  int degree_;
  std::map<std::vector<int>, MultiPoly> terms_;
};

// The multidifferential operator of a multivector, with the 1/degree!
// antisymmetrization constant. Arguments may live in a larger variable
// ring; the coefficient is extended.
MultiPoly apply_as_operator(const Multivector& x,
                            const std::vector<MultiPoly>& args);

// Rewrites a multivector through a linear change of data: coefficients are
// substituted by coord_sub and every direction index j becomes the linear
// combination given by column j of dir_map.
Multivector change_basis(const Multivector& x, const Mat& coord_sub,
                         const Mat& dir_map);

// Frame coordinates of fd -> ambient coordinates, and back.
Multivector to_ambient(const Multivector& x, const FixedPointData& fd);
Multivector to_frame(const Multivector& x, const FixedPointData& fd);

// Pushforward along the group element with matrix h: coefficients compose
// with h^-1, directions map by h.
Multivector pushforward(const Multivector& x, const Mat& h, const Mat& h_inv);

// On frame-coordinate multivectors: set the normal frame coordinates of fd
// to zero in every coefficient.
Multivector restrict_to_fixed(const Multivector& x, const FixedPointData& fd);
// Keep only wedge monomials containing every normal index of fd.
Multivector project_to_normal_volume(const Multivector& x,
                                     const FixedPointData& fd);

// One multivector block per group element, each written in the frame
// coordinates of that element's FixedPointData. This is the codomain of
// the cochain-to-multivector map: sections of the bundle whose fiber at g
// is (tangential polyvectors on the fixed subspace) tensor (the full
// normal volume).
class MultivectorSection {
 public:
  MultivectorSection() : group_(nullptr), degree_(0) {}
  MultivectorSection(const Group* group, int degree);

  const Group* group() const { return group_; }
  int degree() const { return degree_; }
  bool is_zero() const { return blocks_.empty(); }
  const std::map<int, Multivector>& blocks() const { return blocks_; }
  Multivector block_at(int g) const;
  void add_block(int g, const Multivector& mv);

  MultivectorSection operator-() const;
  MultivectorSection& operator+=(const MultivectorSection& o);
  MultivectorSection& operator-=(const MultivectorSection& o);
  friend MultivectorSection operator+(MultivectorSection a, const MultivectorSection& b) { return a += b; }
  friend MultivectorSection operator-(MultivectorSection a, const MultivectorSection& b) { return a -= b; }
  MultivectorSection scaled(const Cyclo& c) const;
  bool operator==(const MultivectorSection& o) const;
  bool operator!=(const MultivectorSection& o) const { return !(*this == o); }

  // Membership in the model: at every element the block's coefficients
  // depend only on fixed frame coordinates and every wedge monomial
  // contains the full normal volume. On failure, why (if given) names the
  // offending block.
  bool in_model(std::string* why = nullptr) const;

  // Action of h on sections: the block at g is carried by the pushforward
  // of h to the block at h^-1 g h.
  MultivectorSection transformed(int h) const;
  bool is_invariant() const;
  MultivectorSection averaged() const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  const Group* group_;
  int degree_;
  std::map<int, Multivector> blocks_;
};

}  // namespace skewpois
