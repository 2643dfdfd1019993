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

#include "skewpois/quasi_iso.hpp"
#include "skewpois/schouten.hpp"

namespace skewpois {

// Brackets on multivector sections over the group, the verifier for
// noncommutative Poisson structures on the crossed product, and the
// degree-2 cohomology of a verified structure.

// Insertion product of ambient multivectors twisted by a linear map:
// the divided-difference expansion of xi with eta inserted in one slot
// and gamma acting on the arguments after the insertion. gamma = id
// gives the ordinary insertion product, whose graded commutator is the
// Schouten bracket.
Multivector twisted_prelie(const Multivector& xi, const Multivector& eta,
                           const Mat& gamma);

// Constant extension of a model block off the fixed subspace: the
// block is given in the frame coordinates of fd with coefficients
// depending only on fixed coordinates, and comes back in ambient
// coordinates, constant along the moved directions. Throws when a
// coefficient involves a normal coordinate.
Multivector extend_tilde(const Multivector& block, const FixedPointData& fd);

// Elements whose moved subspace is a plane. Closed under conjugation.
std::vector<int> codim_two_elements(const Group* group);

// Constant bivector with the entries of an antisymmetric matrix: the
// sum over i < j of p(i,j) d_i ^ d_j. Throws unless p is antisymmetric.
Multivector bivector_of_matrix(const Mat& p);

// The Poisson bivector of an invertible antisymmetric form, with
// components the negated inverse matrix: omega = [[0,1],[-1,0]] gives
// d_0 ^ d_1.
Multivector poisson_of_symplectic(const Mat& omega);

// The constant ambient bivector inverting omega on the moved subspace
// of fd: pull omega back through the frame, restrict to the normal
// columns, invert, and push the result back to ambient coordinates.
Multivector normal_poisson_block(const Mat& omega, const FixedPointData& fd);

enum class BracketRoute { evaluator, closed_form };

// One component of a bracket between sections, in the frame
// coordinates of its element. raw is the value before any restriction,
// restricted zeroes the normal coordinates in the coefficients, and
// projected keeps the wedge terms carrying the full normal volume (the
// model block). The two routes agree on projected values; raw and
// restricted are route-specific diagnostics.
struct BracketComponent {
  Multivector raw;
  Multivector restricted;
  Multivector projected;
};

struct BracketResult {
  const Group* group = nullptr;
  int degree = 0;
  std::map<int, BracketComponent> components;

  MultivectorSection projected_section() const;
};

// Bracket of two invariant sections in the multivector model.
//
// The evaluator route extends both sections to cochains on the crossed
// product, takes the Gerstenhaber bracket there, and projects back; it
// is always available. The closed-form route sums, over ordered block
// pairs whose codimensions add, the insertion products of the constant
// extensions restricted to the joint fixed subspace; pairs that fail
// that condition contribute nothing for abelian groups and raise
// std::runtime_error otherwise, pointing to the evaluator route.
BracketResult cohomology_bracket(const MultivectorSection& xi,
                                 const MultivectorSection& eta,
                                 BracketRoute route, int max_arity = 6);

// Bivector data supported at the identity and at the plane-moving
// elements, all in ambient coordinates: pi at the identity and one
// normal bivector per codimension-2 element.
struct PoissonCandidate {
  const Group* group = nullptr;
  Multivector pi;
  std::map<int, Multivector> lambdas;
};

// Structural validation: every lambda key must move a plane and the
// action must fix no open set off the identity. Softer conditions
// (invariance, coefficients living on the fixed subspace) are reported
// by poisson_check rather than rejected here.
PoissonCandidate make_poisson_candidate(const Group* group, Multivector pi,
                                        std::map<int, Multivector> lambdas);

// The symplectic-plus-constants candidate: pi = t * (inverse of omega)
// and, per plane-moving element g, weight_g times the inverse of omega
// restricted to the moved plane of g. Elements missing from weights get
// weight zero. Throws unless omega is antisymmetric, invertible, and
// preserved by the group.
PoissonCandidate symplectic_candidate(const Group* group, const Mat& omega,
                                      const std::map<int, Cyclo>& weights,
                                      const Cyclo& t = Cyclo(1));

// The candidate as a degree-2 section of the multivector model, blocks
// in frame coordinates.
MultivectorSection candidate_section(const PoissonCandidate& cand);

// One verified condition. raw, restricted, and projected are in the
// frame coordinates of the element the condition concerns (ambient for
// the identity-component condition).
struct PoissonCondition {
  std::string label;
  bool ok = false;
  Multivector raw;
  Multivector restricted;
  Multivector projected;
  std::string note;
};

struct PoissonVerdict {
  bool ok = false;
  std::vector<PoissonCondition> conditions;
  // First failure, empty when ok.
  std::string detail;
};

// Decides whether the candidate is a noncommutative Poisson structure:
// the candidate must be invariant, each normal bivector must be a model
// block over its fixed subspace, the identity bivector must self-commute,
// and the bracket of pi with each constant extension must vanish after
// restriction and projection. With evaluator_diagnostics the full
// self-bracket is recomputed through the cochain route and compared
// against the assembled conditions, confirming the cross terms between
// normal blocks drop out (components moving a 4-dimensional subspace are
// noted as cohomologically trivial when only their raw value survives).
PoissonVerdict poisson_check(const PoissonCandidate& cand,
                             bool evaluator_diagnostics = false);

// The bracket-with-kappa differential applied to an invariant section.
// Throws unless kappa passes poisson_check.
MultivectorSection dkappa(const PoissonCandidate& kappa,
                          const MultivectorSection& phi,
                          BracketRoute route = BracketRoute::evaluator);

struct CohomologyReport {
  int dimension = 0;
  // Coefficient-degree window the computation ran in.
  int truncation_degree = 0;
  int cocycle_dim = 0;
  int coboundary_rank = 0;
  std::vector<MultivectorSection> representatives;
};

// Dimension and representatives of the degree-2 cohomology of the
// bracket-with-kappa differential, over invariant sections with
// coefficient degree at most degree_bound. kappa must come from
// symplectic_candidate form: constant invertible pi and constant normal
// blocks; then the differential lowers coefficient degree and the
// window is exact (coboundaries are taken from degree degree_bound + 1
// fields). A coordinate escaping the window throws, prompting a larger
// bound.
CohomologyReport poisson_cohomology_h2(const PoissonCandidate& kappa,
                                       int degree_bound);

}  // namespace skewpois
