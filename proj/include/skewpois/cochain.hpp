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
#include <memory>

#include "skewpois/multivector.hpp"

namespace skewpois {

// Hochschild cochains as immutable, evaluatable expression trees. Every
// node evaluates a tuple of crossed elements to a crossed element; plain
// polynomial arguments ride along as identity components. Arguments may
// live in a ring with more variables than the group dimension (extra
// variables are inert spectators), which is how basepoint bookkeeping
// stays exact.
class CochainNode;

class Cochain {
 public:
  Cochain() = default;
  explicit Cochain(std::shared_ptr<const CochainNode> node)
      : node_(std::move(node)) {}

  bool empty() const { return node_ == nullptr; }
  int arity() const;
  const Group* group() const;

  CrossedElt operator()(const std::vector<CrossedElt>& args) const;
  // Convenience: wraps polynomial arguments at the identity component.
  CrossedElt eval(const std::vector<MultiPoly>& args) const;

  const CochainNode* node() const { return node_.get(); }

 private:
  std::shared_ptr<const CochainNode> node_;
};

// A single polydifferential term: coefficient times one derivative
// multi-order per slot, landing in the group_tag component.
Cochain make_polydiff(const Group* group, int group_tag,
                      const MultiPoly& coeff,
                      const std::vector<Expo>& slot_orders);
// The zero cochain of the given arity.
Cochain make_zero_cochain(const Group* group, int arity);
// 0-cochain with a fixed value.
Cochain make_constant_cochain(const Group* group, const CrossedElt& value);
// a -> a.
Cochain make_identity_cochain(const Group* group);
// (a, b) -> ab in the crossed product.
Cochain make_multiplication(const Group* group);

// Wraps an externally supplied evaluation rule as a cochain. The
// callable must treat variables beyond the action dimension as central
// coefficients so the projection stages can probe it with symbolic
// basepoints.
Cochain make_function_cochain(
    const Group* group, int arity,
    std::function<CrossedElt(const std::vector<CrossedElt>&)> fn);

// The divided-difference cocycle of a group element with l(g) >= 1
// slots, valued in the g component. The second form evaluates in a
// caller-supplied eigenframe (used to certify basis independence).
Cochain make_twisted_cocycle(const Group* group, int g);
Cochain make_twisted_cocycle(const Group* group, int g,
                             const FixedPointData& frame);

// x # omega_g: the tangential multivector x (frame coordinates of fd,
// indices within the fixed block) eats the first deg(x) arguments with
// the 1/deg! antisymmetrization, the divided-difference factor eats the
// remaining l(g). Total arity deg(x) + l(g).
Cochain sharp_product(const Group* group, int g, const FixedPointData& frame,
                      const Multivector& tangential);

Cochain cochain_sum(const Cochain& a, const Cochain& b);
Cochain cochain_scaled(const Cochain& c, const Cyclo& s);

// Alternating-sum coboundary; module products are crossed products, so
// component-valued cochains pick up the twisted right action.
Cochain hochschild_differential(const Cochain& c);

// Insertion sum with signs (-1)^((i-1)(l-1)).
Cochain prelie_circ(const Cochain& phi, const Cochain& psi);
// phi o psi - (-1)^((k-1)(l-1)) psi o phi.
Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi);

// (h c)(args) = U_{h^-1} c(h(args)) U_h; sends g-component cochains to
// h^-1 g h-component cochains.
Cochain group_action_on_cochain(const Group* group, int h, const Cochain& c);
// Average of the action over the whole group.
Cochain group_averaged(const Cochain& c);

// Extends a cochain on the base to the crossed product: tags multiply
// out and later arguments are transported by the preceding tags.
Cochain lift_through_tags(const Cochain& inner);

struct SweepReport {
  bool ok = true;
  long checked = 0;
  std::string witness;
};

// All exponent vectors with total degree <= degree, in a deterministic
// order.
std::vector<Expo> monomials_up_to(int nvars, int degree);

// Evaluates the coboundary of c on every tuple of monomials of per-slot
// total degree <= degree_bound; reports the first nonzero value.
SweepReport cocycle_check(const Cochain& c, int degree_bound);

// Same sweep with every combination of group tags on the arguments, for
// cochains of the full crossed product.
SweepReport crossed_cocycle_check(const Cochain& c, int degree_bound);

// Compares two same-arity cochains on every monomial tuple up to the
// bound; reports the first disagreement.
SweepReport cochains_agree(const Cochain& a, const Cochain& b,
                           int degree_bound);

}  // namespace skewpois
