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

#include "skewpois/cochain.hpp"

namespace skewpois {

// The comparison maps between Hochschild cochains of the crossed
// product and sections of the twisted multivector model, and the exact
// roundtrip verification L(T(xi)) == xi.

// Stage one of L: average the group action. On invariant cochains this
// is the restriction to polynomial arguments.
Cochain map_L1(const Cochain& c);

// Stage two: project a crossed-valued cochain on the base algebra to
// one polynomial-coefficient multivector per group component. Each
// component is read off by evaluating on tuples of affine functions
// (coordinate minus symbolic basepoint) for every injective index
// tuple; the wedge aggregation supplies the antisymmetrization. Refuses
// arity above max_arity (the tuple count grows factorially).
std::map<int, Multivector> map_L2(const Cochain& c, int max_arity = 6);

// Stage three: per component, restrict coefficients to the fixed
// subspace and keep the wedge terms carrying the full normal volume.
// Blocks are returned in the eigenframe of their element.
MultivectorSection map_L3(const Group* group,
                          const std::map<int, Multivector>& blocks);

MultivectorSection map_L(const Cochain& c);

// True when every centralizer acts commutatively on the moved subspace
// of its element; decides whether map_T1 may skip the averaging
// fallback.
bool centralizers_abelian_on_normal(const Group* group);

// Sum over components of (tangential part) # (divided difference).
// When some centralizer is non-abelian on a moved subspace the naive
// sum need not be invariant and the result is averaged over the group.
// strict rejects a non-invariant input.
Cochain map_T1(const MultivectorSection& xi, bool strict = true);

// Extends a crossed-valued cochain on the base algebra to the crossed
// product: group tags multiply out and transport the later arguments.
Cochain map_T2(const Cochain& c);

Cochain map_T(const MultivectorSection& xi, bool strict = true);

struct RoundtripReport {
  bool ok = true;
  std::string detail;
};

// Checks L(T(xi)) == xi exactly and that T(xi) is a cocycle on all
// monomial tuples up to the degree bound.
RoundtripReport roundtrip_check(const MultivectorSection& xi,
                                int degree_bound);

}  // namespace skewpois
