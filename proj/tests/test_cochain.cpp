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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewpois/cochain.hpp"

using skewpois::Cochain;
using skewpois::CrossedElt;
using skewpois::Cyclo;
using skewpois::Expo;
using skewpois::Group;
using skewpois::Mat;
using skewpois::MultiPoly;
using skewpois::Multivector;
using skewpois::Rat;

namespace {

Group line_flip() {
  return Group::build({Mat::diagonal({Cyclo(-1)})}, {"s"});
}

Group antipodal() {
  return Group::build({Mat::diagonal({Cyclo(-1), Cyclo(-1)})}, {"s"});
}

Group kleinian3() {
  return Group::build({Mat::diagonal({Cyclo::zeta(3), Cyclo::zeta(3, 2)})},
                      {"a"});
}

Group half_rotation() {
  return Group::build({Mat::diagonal({Cyclo::zeta(3), Cyclo(1)})}, {"a"});
}

MultiPoly random_poly(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> num(-3, 3);
  MultiPoly f(nvars);
  for (int t = 0; t < 2; ++t) {
    Expo e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = deg(rng);
    f.add_term(e, Cyclo(num(rng)));
  }
  return f;
}

Cochain random_polydiff(std::mt19937& rng, const Group& g, int arity,
                        int tag) {
  std::uniform_int_distribution<int> ord(0, 1);
  int n = g.dim();
  std::vector<Expo> orders(arity, Expo(n, 0));
  for (Expo& e : orders)
    for (int i = 0; i < n; ++i) e[i] = ord(rng);
  return make_polydiff(&g, tag, random_poly(rng, n), orders);
}

Cochain random_polydiff(std::mt19937& rng, const Group& g, int arity) {
  std::uniform_int_distribution<int> tag(0, g.size() - 1);
  return random_polydiff(rng, g, arity, tag(rng));
}

}  // namespace

TEST_CASE("polydiff terms evaluate with tags") {
  Group g = antipodal();
  int s = g.element_named("s");
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);

  // x2 * d/dx1, landing at U_s.
  Cochain c = make_polydiff(&g, s, x2, {Expo{1, 0}});
  CrossedElt out = c.eval({x1 * x1});
  REQUIRE(out.component_at(s) == x2 * (x1 + x1));
  REQUIRE(out.component_at(g.identity()).is_zero());

  // Linearity in the slot.
  CrossedElt sum = c.eval({x1 * x1 + x2.scaled(Cyclo(3))});
  REQUIRE(sum == c.eval({x1 * x1}) + c.eval({x2}).scaled(Cyclo(3)));

  // Arguments in a larger ring pass their extra variables through.
  MultiPoly v1 = MultiPoly::variable(4, 0);
  MultiPoly b1 = MultiPoly::variable(4, 2);
  CrossedElt wide = c.eval({v1 * b1});
  REQUIRE(wide.component_at(s) == x2.extended(4) * b1);
}

TEST_CASE("multiplication and identity cochains") {
  Group g = antipodal();
  int s = g.element_named("s");
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);

  Cochain m = make_multiplication(&g);
  REQUIRE(m.eval({x1, x2}).component_at(g.identity()) == x1 * x2);

  // On crossed arguments it is the crossed multiplication.
  CrossedElt us = CrossedElt::unit(&g, s, 2);
  CrossedElt xs = CrossedElt::poly(&g, x1);
  REQUIRE(m({us, xs}) == us * xs);

  Cochain id = make_identity_cochain(&g);
  REQUIRE(id({us}) == us);
}

TEST_CASE("divided difference on the flipped line") {
  Group g = line_flip();
  int s = g.element_named("s");
  MultiPoly x = MultiPoly::variable(1, 0);
  MultiPoly one = MultiPoly::constant(1, Cyclo(1));

  Cochain omega = make_twisted_cocycle(&g, s);
  REQUIRE(omega.arity() == 1);

  // (f(x) - f(-x)) / (2x) on f = x, x^2, x^3.
  REQUIRE(omega.eval({x}).component_at(s) == one);
  REQUIRE(omega.eval({x * x}).component_at(s).is_zero());
  REQUIRE(omega.eval({x * x * x}).component_at(s) == x * x);
  REQUIRE(omega.eval({one}).is_zero());
}

TEST_CASE("divided difference with one nontrivial eigenvalue") {
  Group g = half_rotation();
  int a = g.element_named("a");
  MultiPoly y = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);

  // The normal coordinate function scales by eps = zeta(3)^-1 under a.
  Cyclo eps = Cyclo::zeta(3).inverse();
  Cochain omega = make_twisted_cocycle(&g, a);
  REQUIRE(omega.arity() == 1);

  REQUIRE(omega.eval({y}).component_at(a) ==
          MultiPoly::constant(2, Cyclo(1)));
  REQUIRE(omega.eval({y * y}).component_at(a) == y.scaled(Cyclo(1) + eps));
  // The fixed coordinate factors straight through.
  REQUIRE(omega.eval({y * x2}).component_at(a) == x2);
  REQUIRE(omega.eval({x2}).is_zero());
}

TEST_CASE("divided difference on the Kleinian point") {
  Group g = kleinian3();
  int a = g.element_named("a");
  MultiPoly y1 = MultiPoly::variable(2, 0);
  MultiPoly y2 = MultiPoly::variable(2, 1);

  Cochain omega = make_twisted_cocycle(&g, a);
  REQUIRE(omega.arity() == 2);

  // Literal normalized value on the coordinate tuple, and the
  // antisymmetrized pairing that restores 1.
  MultiPoly half = MultiPoly::constant(2, Cyclo(Rat(1, 2)));
  REQUIRE(omega.eval({y1, y2}).component_at(a) == half);
  MultiPoly paired = omega.eval({y1, y2}).component_at(a) -
                     omega.eval({y2, y1}).component_at(a);
  REQUIRE(paired == MultiPoly::constant(2, Cyclo(1)));

  // A constant in any slot kills the value, over a small monomial set.
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  for (const Expo& e : skewpois::monomials_up_to(2, 3)) {
    MultiPoly f = MultiPoly::monomial(2, e, Cyclo(1));
    REQUIRE(omega.eval({one, f}).is_zero());
    REQUIRE(omega.eval({f, one}).is_zero());
  }

  // Multilinearity.
  std::mt19937 rng(13);
  for (int t = 0; t < 6; ++t) {
    MultiPoly f = random_poly(rng, 2);
    MultiPoly h = random_poly(rng, 2);
    MultiPoly k = random_poly(rng, 2);
    CrossedElt lhs = omega.eval({f + h.scaled(Cyclo(5)), k});
    REQUIRE(lhs == omega.eval({f, k}) + omega.eval({h, k}).scaled(Cyclo(5)));
  }
}

TEST_CASE("coboundary facts") {
  Group g = antipodal();
  int s = g.element_named("s");
  int n = 2;
  MultiPoly x1 = MultiPoly::variable(n, 0);
  MultiPoly x2 = MultiPoly::variable(n, 1);

  // The Euler field is a derivation, so its coboundary vanishes.
  Cochain euler = cochain_sum(
      make_polydiff(&g, g.identity(), x1, {Expo{1, 0}}),
      make_polydiff(&g, g.identity(), x2, {Expo{0, 1}}));
  skewpois::SweepReport rep = cocycle_check(euler, 3);
  REQUIRE(rep.ok);
  REQUIRE(rep.checked > 0);

  // The identity map is not a cocycle: its coboundary is multiplication.
  Cochain id = make_identity_cochain(&g);
  Cochain did = hochschild_differential(id);
  REQUIRE(cochains_agree(did, make_multiplication(&g), 3).ok);

  // 0-cochain at a twisted constant: boundary is the twisted commutator.
  CrossedElt p = CrossedElt::term(&g, s, x1);
  Cochain c0 = make_constant_cochain(&g, p);
  Cochain dc0 = hochschild_differential(c0);
  CrossedElt got = dc0.eval({x2});
  // x2 (x1 U_s) - (x1 U_s) x2 = 2 x1 x2 U_s.
  REQUIRE(got.component_at(s) == (x1 * x2).scaled(Cyclo(2)));

  // U_s itself: d(U_s)(a) = (a - s(a)) U_s.
  Cochain us = make_constant_cochain(&g, CrossedElt::unit(&g, s, n));
  REQUIRE(hochschild_differential(us).eval({x1}).component_at(s) ==
          x1.scaled(Cyclo(2)));

  // The multiplication cochain is closed identically.
  REQUIRE(cocycle_check(make_multiplication(&g), 2).ok);

  // The divided-difference cochains are closed up to the bound.
  REQUIRE(cocycle_check(make_twisted_cocycle(&g, s), 4).ok);
  Group k3 = kleinian3();
  REQUIRE(cocycle_check(make_twisted_cocycle(&k3, k3.element_named("a")), 3).ok);
}

TEST_CASE("coboundary squares to zero on random cochains") {
  Group g = antipodal();
  std::mt19937 rng(37);
  for (int t = 0; t < 6; ++t) {
    Cochain c = random_polydiff(rng, g, 1 + t % 2);
    Cochain dd = hochschild_differential(hochschild_differential(c));
    skewpois::SweepReport rep;
    rep = cochains_agree(dd, make_zero_cochain(&g, dd.arity()), 2);
    INFO(rep.witness);
    REQUIRE(rep.ok);
  }
}

TEST_CASE("insertion product and bracket") {
  Group g = antipodal();
  int e = g.identity();
  int n = 2;
  MultiPoly x1 = MultiPoly::variable(n, 0);
  MultiPoly x2 = MultiPoly::variable(n, 1);

  // Vector fields compose.
  Cochain X = make_polydiff(&g, e, x2, {Expo{1, 0}});
  Cochain Y = make_polydiff(&g, e, x1 * x1, {Expo{0, 1}});
  Cochain XY = prelie_circ(X, Y);
  // X(Y(f)) with Y(f) = x1^2 df/dx2, X(h) = x2 dh/dx1.
  MultiPoly f = x1 * x2 * x2;
  MultiPoly yf = (x1 * x1) * f.derivative(1);
  MultiPoly expect = x2 * yf.derivative(0);
  REQUIRE(XY.eval({f}).component_at(e) == expect);

  // phi o m on a 1-cochain collapses the product into the slot.
  Cochain phim = prelie_circ(X, make_multiplication(&g));
  REQUIRE(phim.arity() == 2);
  REQUIRE(phim.eval({x1, x2}).component_at(e) == x2 * (x1 * x2).derivative(0));

  // Arity 2 against a hand-expanded insertion sum with the sign
  // (-1)^((i-1)(l-1)).
  std::mt19937 rng(5);
  for (int t = 0; t < 4; ++t) {
    Cochain phi = random_polydiff(rng, g, 2, e);
    Cochain psi = random_polydiff(rng, g, 2, e);
    Cochain comp = prelie_circ(phi, psi);
    for (const Expo& ea : skewpois::monomials_up_to(n, 1)) {
      for (const Expo& eb : skewpois::monomials_up_to(n, 1)) {
        for (const Expo& ec : skewpois::monomials_up_to(n, 1)) {
          CrossedElt a = CrossedElt::poly(&g, MultiPoly::monomial(n, ea, Cyclo(1)));
          CrossedElt b = CrossedElt::poly(&g, MultiPoly::monomial(n, eb, Cyclo(1)));
          CrossedElt cc = CrossedElt::poly(&g, MultiPoly::monomial(n, ec, Cyclo(1)));
          CrossedElt byhand = phi({psi({a, b}), cc}) - phi({a, psi({b, cc})});
          REQUIRE(comp({a, b, cc}) == byhand);
        }
      }
    }
  }

  // Bracket of vector fields is the Lie bracket; self bracket of a
  // 1-cochain vanishes.
  Cochain lie = gerstenhaber_bracket(X, Y);
  MultiPoly xf = x2 * f.derivative(0);
  MultiPoly lie_expect = x2 * ((x1 * x1) * f.derivative(1)).derivative(0) -
                         (x1 * x1) * xf.derivative(1);
  REQUIRE(lie.eval({f}).component_at(e) == lie_expect);
  Cochain self = gerstenhaber_bracket(X, X);
  REQUIRE(cochains_agree(self, make_zero_cochain(&g, 1), 3).ok);
}

TEST_CASE("graded Jacobi and differential compatibility by evaluation") {
  Group g = antipodal();
  std::mt19937 rng(11);
  for (int t = 0; t < 3; ++t) {
    int k = 1 + t % 2;
    int l = 1 + (t + 1) % 2;
    int m = 1;
    int e = g.identity();
    Cochain phi = random_polydiff(rng, g, k, e);
    Cochain psi = random_polydiff(rng, g, l, e);
    Cochain chi = random_polydiff(rng, g, m, e);

    int sgn = ((k - 1) * (l - 1)) % 2 == 0 ? 1 : -1;
    Cochain lhs = gerstenhaber_bracket(phi, gerstenhaber_bracket(psi, chi));
    Cochain rhs = cochain_sum(
        gerstenhaber_bracket(gerstenhaber_bracket(phi, psi), chi),
        cochain_scaled(gerstenhaber_bracket(psi, gerstenhaber_bracket(phi, chi)),
                       Cyclo(sgn)));
    skewpois::SweepReport rep = cochains_agree(lhs, rhs, 2);
    INFO(rep.witness);
    REQUIRE(rep.ok);

    // d[phi,psi] = (-1)^(l-1) [d phi, psi] + [phi, d psi].
    int dsgn = (l - 1) % 2 == 0 ? 1 : -1;
    Cochain dlhs = hochschild_differential(gerstenhaber_bracket(phi, psi));
    Cochain drhs = cochain_sum(
        cochain_scaled(
            gerstenhaber_bracket(hochschild_differential(phi), psi),
            Cyclo(dsgn)),
        gerstenhaber_bracket(phi, hochschild_differential(psi)));
    skewpois::SweepReport drep = cochains_agree(dlhs, drhs, 2);
    INFO(drep.witness);
    REQUIRE(drep.ok);
  }
}

TEST_CASE("pre-Lie associator symmetry") {
  Group g = antipodal();
  std::mt19937 rng(19);
  auto assoc = [](const Cochain& a, const Cochain& b, const Cochain& c) {
    return cochain_sum(prelie_circ(prelie_circ(a, b), c),
                       cochain_scaled(prelie_circ(a, prelie_circ(b, c)),
                                      Cyclo(-1)));
  };
  for (int t = 0; t < 3; ++t) {
    int e = g.identity();
    Cochain phi = random_polydiff(rng, g, 1 + t % 2, e);
    Cochain psi = random_polydiff(rng, g, 1, e);
    Cochain chi = random_polydiff(rng, g, 2, e);
    int l = 1;
    int m = 2;
    int sgn = ((l - 1) * (m - 1)) % 2 == 0 ? 1 : -1;
    Cochain lhs = assoc(phi, psi, chi);
    Cochain rhs = cochain_scaled(assoc(phi, chi, psi), Cyclo(sgn));
    skewpois::SweepReport rep = cochains_agree(lhs, rhs, 2);
    INFO(rep.witness);
    REQUIRE(rep.ok);
  }
}

TEST_CASE("group action on cochains") {
  Group g = half_rotation();
  int a = g.element_named("a");
  Cochain omega = make_twisted_cocycle(&g, a);

  // The identity acts trivially.
  REQUIRE(cochains_agree(group_action_on_cochain(&g, g.identity(), omega),
                         omega, 3)
              .ok);

  // a scales its own divided difference by the function determinant on
  // the normal line, here zeta(3)^-1.
  Cochain acted = group_action_on_cochain(&g, a, omega);
  Cochain scaled = cochain_scaled(omega, Cyclo::zeta(3).inverse());
  REQUIRE(cochains_agree(acted, scaled, 3).ok);

  // On the Kleinian point the determinant is 1 and omega is fixed.
  Group k3 = kleinian3();
  int ka = k3.element_named("a");
  Cochain komega = make_twisted_cocycle(&k3, ka);
  REQUIRE(cochains_agree(group_action_on_cochain(&k3, ka, komega), komega, 2)
              .ok);

  // Composition folds into the product element.
  Mat swap(2, 2);
  swap.at(0, 1) = Cyclo(1);
  swap.at(1, 0) = Cyclo(1);
  Group s3 = Group::build(
      {Mat::diagonal({Cyclo::zeta(3), Cyclo::zeta(3, 2)}), swap}, {"r", "s"});
  std::mt19937 rng(23);
  Cochain c = random_polydiff(rng, s3, 1);
  for (int h1 = 0; h1 < s3.size(); ++h1) {
    for (int h2 = 0; h2 < s3.size(); ++h2) {
      Cochain two = group_action_on_cochain(
          &s3, h2, group_action_on_cochain(&s3, h1, c));
      Cochain one = group_action_on_cochain(&s3, s3.mul(h1, h2), c);
      REQUIRE(cochains_agree(two, one, 1).ok);
    }
  }

  // Averaging fixes the result under any further action.
  Cochain avg = group_averaged(c);
  for (int h = 0; h < s3.size(); ++h)
    REQUIRE(cochains_agree(group_action_on_cochain(&s3, h, avg), avg, 1).ok);
}

TEST_CASE("sharp products split the arguments") {
  Group g = half_rotation();
  int a = g.element_named("a");
  const skewpois::FixedPointData& fd = g.fixed_data(a);
  MultiPoly y = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));

  // Empty tangential part: the sharp product is the divided difference.
  Multivector empty(2, 0);
  empty.add_term({}, one);
  Cochain bare = sharp_product(&g, a, fd, empty);
  Cochain omega = make_twisted_cocycle(&g, a);
  REQUIRE(cochains_agree(bare, omega, 3).ok);

  // d/dw on the fixed coordinate times the divided difference.
  REQUIRE(fd.fixed_idx == std::vector<int>{1});
  Multivector dfix(2, 1);
  dfix.add_term({1}, one);
  Cochain sharp = sharp_product(&g, a, fd, dfix);
  REQUIRE(sharp.arity() == 2);
  CrossedElt out = sharp.eval({x2, y});
  REQUIRE(out.component_at(a) == one);

  // Bilinearity in the twisted slot.
  std::mt19937 rng(29);
  for (int t = 0; t < 4; ++t) {
    MultiPoly f = random_poly(rng, 2);
    MultiPoly h = random_poly(rng, 2);
    MultiPoly k = random_poly(rng, 2);
    CrossedElt lhs = sharp.eval({f, h + k.scaled(Cyclo(7))});
    REQUIRE(lhs == sharp.eval({f, h}) + sharp.eval({f, k}).scaled(Cyclo(7)));
  }

  // At the identity the sharp product is the plain multivector operator.
  const skewpois::FixedPointData& fde = g.fixed_data(g.identity());
  Multivector plane(2, 2);
  plane.add_term({0, 1}, one);
  Cochain op = sharp_product(&g, g.identity(), fde, plane);
  MultiPoly f = y * y * x2;
  MultiPoly h = y + x2;
  MultiPoly expect =
      (f.derivative(0) * h.derivative(1) - f.derivative(1) * h.derivative(0))
          .scaled(Cyclo(Rat(1, 2)));
  REQUIRE(op.eval({f, h}).component_at(g.identity()) == expect);
}

TEST_CASE("lifting through tags") {
  Group g = antipodal();
  int e = g.identity();
  int s = g.element_named("s");
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);

  // Lift of a vector field: arguments carry tags, the first tag
  // transports the later slots.
  Cochain X = make_polydiff(&g, e, x2, {Expo{1, 0}});
  Cochain lifted = lift_through_tags(X);
  CrossedElt arg = CrossedElt::term(&g, s, x1);
  CrossedElt got = lifted({arg});
  REQUIRE(got.component_at(s) == x2 * x1.derivative(0));

  Cochain m2 = lift_through_tags(make_multiplication(&g));
  CrossedElt p = CrossedElt::term(&g, s, x1);
  CrossedElt q = CrossedElt::term(&g, s, x2);
  // Against the crossed product itself.
  REQUIRE(m2({p, q}) == p * q);
}

TEST_CASE("sweeps report witnesses") {
  Group g = antipodal();
  MultiPoly x1 = MultiPoly::variable(2, 0);

  // A second-order term posing as a closed 1-cochain fails with a
  // concrete witness tuple.
  Cochain fake = make_polydiff(&g, g.identity(), MultiPoly::constant(2, Cyclo(1)),
                               {Expo{2, 0}});
  skewpois::SweepReport rep = cocycle_check(fake, 3);
  REQUIRE_FALSE(rep.ok);
  REQUIRE_FALSE(rep.witness.empty());

  Cochain X = make_polydiff(&g, g.identity(), x1, {Expo{1, 0}});
  skewpois::SweepReport ag = cochains_agree(X, fake, 3);
  REQUIRE_FALSE(ag.ok);
  REQUIRE_FALSE(ag.witness.empty());
}
