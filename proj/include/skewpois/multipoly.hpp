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
#include <string>
#include <vector>

#include "skewpois/linalg.hpp"

namespace skewpois {

// Exponent vector of a monomial, one entry per variable.
using Expo = std::vector<int>;

// Sparse polynomial in a fixed number of variables with cyclotomic
// coefficients. Terms live in an ordered map so iteration, printing and
// equality are deterministic.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Cyclo& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(int nvars, Expo e, const Cyclo& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  const std::map<Expo, Cyclo>& terms() const { return terms_; }
  Cyclo coeff(const Expo& e) const;
  Cyclo constant_term() const { return coeff(Expo(nvars_, 0)); }

  // Adds c * x^e, dropping the term if the sum cancels.
  void add_term(const Expo& e, const Cyclo& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Cyclo& c) const;

  MultiPoly derivative(int var) const;
  // Substitutes 0 for one variable; the ring keeps its size.
  MultiPoly substitute_zero(int var) const;
  // Same polynomial in a ring with more variables (appended at the end).
  MultiPoly extended(int new_nvars) const;
  // Sends variable i to variable image[i]; colliding targets merge, so this
  // doubles as substitution of one variable for another.
  MultiPoly remapped(const std::vector<int>& image, int new_nvars) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Variables print as x1, x2, ... unless names are supplied.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<Expo, Cyclo> terms_;
};

// f with x_i replaced by sum_j m(i, j) x_j for i < m.rows(); variables with
// index >= m.rows() pass through unchanged. m must be square and fit inside
// the variable ring.
MultiPoly poly_substitute(const MultiPoly& f, const Mat& m);

// Exact division by the monomial x^mono. Throws std::domain_error naming
// the first term that is not divisible.
MultiPoly exact_monomial_divide(const MultiPoly& f, const Expo& mono);

std::string monomial_str(const Expo& e,
                         const std::vector<std::string>& names = {});

}  // namespace skewpois
