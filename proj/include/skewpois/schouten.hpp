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

#include "skewpois/multivector.hpp"

namespace skewpois {

// Schouten bracket of polyvector fields, computed in odd-variable form:
// writing a k-vector as a polynomial in anticommuting direction symbols,
//
//   x * y = sum_i (right d/dtheta_i of x) (d/dx^i of y)
//   [x, y] = x * y - (-1)^((k-1)(l-1)) y * x.
//
// On vector fields this is the Lie bracket; on a vector field and a
// function it is the directional derivative. Inputs must share nvars.
// Degrees k = l = 0 return zero.
Multivector schouten_bracket(const Multivector& x, const Multivector& y);

}  // namespace skewpois
