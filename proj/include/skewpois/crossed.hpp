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

#include <map>

#include "skewpois/group.hpp"
#include "skewpois/multipoly.hpp"

namespace skewpois {

// Element of the skew group algebra: a finite sum of terms f * U_g with
// polynomial coefficients, multiplied by U_g f = (g.f) U_g where
// (g.f)(v) = f(g^-1 v). The variable ring may be larger than the action
// dimension; group elements transform only the leading dim() variables,
// which is what lets cochain evaluation carry symbolic basepoint
// variables through untouched.
class CrossedElt {
 public:
  CrossedElt() : group_(nullptr), nvars_(0) {}
  CrossedElt(const Group* group, int nvars) : group_(group), nvars_(nvars) {}
  // f at the identity component.
  static CrossedElt poly(const Group* group, MultiPoly f);
  // U_elem with coefficient 1.
  static CrossedElt unit(const Group* group, int elem, int nvars);
  // f * U_elem.
  static CrossedElt term(const Group* group, int elem, MultiPoly f);

  const Group* group() const { return group_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<int, MultiPoly>& components() const { return comps_; }
  MultiPoly component_at(int g) const;
  void add_component(int g, const MultiPoly& f);

  CrossedElt operator-() const;
  CrossedElt& operator+=(const CrossedElt& o);
  CrossedElt& operator-=(const CrossedElt& o);
  friend CrossedElt operator+(CrossedElt a, const CrossedElt& b) { return a += b; }
  friend CrossedElt operator-(CrossedElt a, const CrossedElt& b) { return a -= b; }
  CrossedElt operator*(const CrossedElt& o) const;
  CrossedElt scaled(const Cyclo& c) const;

  bool operator==(const CrossedElt& o) const;
  bool operator!=(const CrossedElt& o) const { return !(*this == o); }
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  const Group* group_;
  int nvars_;
  std::map<int, MultiPoly> comps_;

  void check_context(const CrossedElt& o, const char* op) const;
};

inline CrossedElt crossed_multiply(const CrossedElt& a, const CrossedElt& b) {
  return a * b;
}

// U_{h^-1} * a * U_h: the component at g moves to h^-1 g h and its
// coefficient picks up the substitution by h.
CrossedElt conjugate_action(int h, const CrossedElt& a);

}  // namespace skewpois
