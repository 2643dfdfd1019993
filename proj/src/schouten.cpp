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

#include "skewpois/schouten.hpp"

#include <stdexcept>

namespace skewpois {

namespace {

// One side of the bracket: sum_i (right d/dtheta_i of x) (d/dx^i of y).
// The right theta derivative of a term with sorted indices K removes the
// index at position p with sign (-1)^(k-1-p).
Multivector interior_pairing(const Multivector& x, const Multivector& y,
                             int out_degree) {
  int n = x.nvars();
  int k = x.degree();
  Multivector out(n, out_degree);
  if (k == 0) return out;
  for (const auto& [ki, kf] : x.terms()) {
    for (int p = 0; p < k; ++p) {
      int i = ki[p];
      int sign = (k - 1 - p) % 2 == 0 ? 1 : -1;
      std::vector<int> rest;
      rest.reserve(ki.size() - 1);
      for (int q = 0; q < k; ++q)
        if (q != p) rest.push_back(ki[q]);
      for (const auto& [li, lf] : y.terms()) {
        MultiPoly dlf = lf.derivative(i);
        if (dlf.is_zero()) continue;
        std::vector<int> idx = rest;
        idx.insert(idx.end(), li.begin(), li.end());
        out.add_term(idx, (kf * dlf).scaled(Cyclo(sign)));
      }
    }
  }
  return out;
}

}  // namespace

Multivector schouten_bracket(const Multivector& x, const Multivector& y) {
  if (x.nvars() != y.nvars())
    throw std::invalid_argument("mismatched variable counts");
  int k = x.degree();
  int l = y.degree();
  int out_degree = k + l - 1 < 0 ? 0 : k + l - 1;
  Multivector a = interior_pairing(x, y, out_degree);
  Multivector b = interior_pairing(y, x, out_degree);
  int sgn = (((k - 1) * (l - 1)) & 1) == 0 ? 1 : -1;
  return a - b.scaled(Cyclo(sgn));
}

}  // namespace skewpois
