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
#include <utility>
#include <vector>

#include "skewpois/cochain.hpp"
#include "skewpois/crossed.hpp"
#include "skewpois/multivector.hpp"

namespace skewpois {

// The filtered algebra generated by the coordinates and the group units
// subject to x y - y x = kappa(x, y), where kappa takes values in the
// scalars plus the group algebra. Coordinates get degree one and group
// units degree zero; collecting group units on the right and sorting
// coordinates gives a normal form, and the induced star product on the
// crossed product carries the deformation coefficients.

// One letter of a word: a coordinate generator or a group unit.
struct SRALetter {
  bool group;
  int index;
};
using SRAWord = std::vector<SRALetter>;

SRALetter gen_letter(int i);
SRALetter group_letter(int elem);

// The normal ordered word of a monomial times a group unit: generator
// letters weakly increasing, then the unit (omitted for the identity).
SRAWord pbw_word(const Expo& mono, int elem);

// Holds the symplectic form, the deformation weights, and the pairing
// table kappa(x_i, x_j) = t P(i, j) + sum over plane elements of
// c_alpha P_alpha(i, j) U_alpha, where P is the Poisson matrix of the
// form and P_alpha the plane block matrix. Weights must be constant on
// conjugacy classes, or the pairing could not be group invariant and a
// later confluence failure would be misattributed.
class SRAContext {
 public:
  static SRAContext build(const Group* group, const Mat& omega,
                          const Cyclo& t, const std::map<int, Cyclo>& c);

  const Group* group() const { return group_; }
  const Mat& omega() const { return omega_; }
  const Cyclo& t() const { return t_; }
  const std::map<int, Cyclo>& weights() const { return c_; }

  // The commutator value [x_i, x_j] as a constant crossed element.
  const CrossedElt& kappa(int i, int j) const;

  // Testing hook: adds delta to kappa(i, j), and subtracts it from
  // kappa(j, i) when antisymmetrize is set. Deliberately able to break
  // the invariants so the checkers' sensitivity can be demonstrated.
  // Values must stay constant in the coordinates.
  void perturb_kappa(int i, int j, const CrossedElt& delta,
                     bool antisymmetrize);

 private:
  SRAContext() : group_(nullptr) {}

  const Group* group_;
  Mat omega_;
  Cyclo t_;
  std::map<int, Cyclo> c_;
  std::vector<std::vector<CrossedElt>> table_;
};

// A sum of triples (sorted monomial word, group element, coefficient);
// the filtration degree of a triple is its monomial degree.
class NormalForm {
 public:
  NormalForm() : group_(nullptr), nvars_(0) {}
  NormalForm(const Group* group, int nvars);

  const Group* group() const { return group_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return triples_.empty(); }
  const std::map<std::pair<Expo, int>, Cyclo>& triples() const {
    return triples_;
  }

  void add(const Expo& mono, int elem, const Cyclo& coeff);
  NormalForm& operator+=(const NormalForm& o);
  NormalForm scaled(const Cyclo& c) const;

  // The degree k part of the filtration.
  NormalForm slice(int k) const;
  int top_degree() const;

  // Reads the triples back as a crossed product element.
  CrossedElt to_crossed() const;

  bool operator==(const NormalForm& o) const;
  bool operator!=(const NormalForm& o) const { return !(*this == o); }

 private:
  const Group* group_;
  int nvars_;
  std::map<std::pair<Expo, int>, Cyclo> triples_;
};

// Rewrites the word to its normal form: group units move right across
// generators by the action rule, adjacent units merge, and descending
// generator pairs swap at the cost of a kappa term two degrees down.
// Each rule strictly decreases (degree, unit-generator crossings,
// generator inversions, length) in lexicographic order, so the
// rewriting terminates; confluence_check certifies that the result does
// not depend on the rewrite order.
NormalForm normalize(const SRAContext& ctx, const SRAWord& word,
                     const Cyclo& coeff);

struct SRAReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

// Resolves every overlapping rewrite ambiguity both ways and compares:
// descending generator triples, a unit over a descending pair, and a
// unit pair over a generator. An empty report certifies that normal
// forms are well defined for this pairing table.
SRAReport confluence_check(const SRAContext& ctx);

// The graded product: lifts each filtration slice of the operands to
// normal ordered words, multiplies, and files the degree k part of the
// result under slice (i + j - k) / 2. Every kappa application drops the
// degree by exactly two, so the exponent is integral; printed_exponent
// switches to filing under i + j - k itself, the convention under which
// all odd slices vanish on homogeneous operands. Slices above order are
// discarded. Variables beyond the action dimension ride along as
// central coefficients.
std::vector<CrossedElt> star_product(const SRAContext& ctx,
                                     const CrossedElt& f,
                                     const CrossedElt& g, int order,
                                     bool printed_exponent = false);

// Checks (a star b) star c = a star (b star c) through the given order
// on all monomial and group unit triples up to the degree bound.
SRAReport associativity_check(const SRAContext& ctx, int order,
                              int degree_bound);

// The requested deformation coefficient as a two argument cochain.
Cochain quantization_cochain(const SRAContext& ctx, int slice);

struct C1Report {
  bool ok = false;
  MultivectorSection computed;
  MultivectorSection expected;
};

// Projects the first deformation coefficient to a multivector section
// and compares it exactly with half the pairing data: half the Poisson
// bivector of the form at the identity and half the weighted plane
// block at each weighted element.
C1Report verify_C1(const SRAContext& ctx);

}  // namespace skewpois
