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

#include "skewpois/quasi_iso.hpp"

using skewpois::Cochain;
using skewpois::CrossedElt;
using skewpois::Cyclo;
using skewpois::Expo;
using skewpois::Group;
using skewpois::Mat;
using skewpois::MultiPoly;
using skewpois::Multivector;
using skewpois::MultivectorSection;
using skewpois::Rat;

namespace {

Group line_flip() {
  return Group::build({Mat::diagonal({Cyclo(-1)})}, {"s"});
}

Group kleinian3() {
  return Group::build({Mat::diagonal({Cyclo::zeta(3), Cyclo::zeta(3, 2)})},
                      {"a"});
}

Group z4_line() {
  return Group::build({Mat::diagonal({Cyclo::zeta(4)})}, {"g"});
}

Group dihedral4() {
  Mat rot(2, 2);
  rot.at(0, 1) = Cyclo(-1);
  rot.at(1, 0) = Cyclo(1);
  return Group::build({rot, Mat::diagonal({Cyclo(1), Cyclo(-1)})},
                      {"r", "s"});
}

MultiPoly random_poly(std::mt19937& rng, int nvars, int maxdeg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  MultiPoly out(nvars);
  for (const Expo& e : skewpois::monomials_up_to(nvars, maxdeg)) {
    int c = coeff(rng);
    if (c != 0) out.add_term(e, Cyclo(c));
  }
  return out;
}

// Random polynomial in the fixed frame coordinates of fd only.
MultiPoly random_fixed_poly(std::mt19937& rng,
                            const skewpois::FixedPointData& fd, int nvars,
                            int maxdeg) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  int nf = static_cast<int>(fd.fixed_idx.size());
  MultiPoly out(nvars);
  for (const Expo& e : skewpois::monomials_up_to(nf, maxdeg)) {
    int c = coeff(rng);
    if (c == 0) continue;
    Expo wide(nvars, 0);
    for (int t = 0; t < nf; ++t) wide[fd.fixed_idx[t]] = e[t];
    out.add_term(wide, Cyclo(c));
  }
  return out;
}

// A random block inside the model at the given element: every wedge term
// carries the full normal volume and coefficients use fixed coordinates
// only. Frame coordinates of fd.
Multivector random_model_block(std::mt19937& rng, const Group& g, int elem,
                               int degree, int maxdeg) {
  const skewpois::FixedPointData& fd = g.fixed_data(elem);
  int n = g.dim();
  Multivector out(n, degree);
  int m = degree - fd.codim;
  int nf = static_cast<int>(fd.fixed_idx.size());
  if (m < 0 || m > nf) return out;
  for (unsigned mask = 0; mask < (1u << nf); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> idx = fd.normal_idx;
    for (int t = 0; t < nf; ++t)
      if (mask & (1u << t)) idx.push_back(fd.fixed_idx[t]);
    MultiPoly coeff = random_fixed_poly(rng, fd, n, maxdeg);
    if (!coeff.is_zero()) out.add_term(idx, coeff);
  }
  return out;
}

MultivectorSection random_invariant_section(std::mt19937& rng, const Group& g,
                                            int degree, int maxdeg) {
  MultivectorSection raw(&g, degree);
  for (int elem = 0; elem < g.size(); ++elem) {
    Multivector blk = random_model_block(rng, g, elem, degree, maxdeg);
    if (!blk.is_zero()) raw.add_block(elem, blk);
  }
  return raw.averaged();
}

}  // namespace

TEST_CASE("stage one averages to an invariant cochain") {
  Group g = kleinian3();
  std::mt19937 rng(11);
  MultiPoly coeff = random_poly(rng, 2, 2);
  Cochain c = skewpois::make_polydiff(&g, 1, coeff, {Expo{1, 0}});
  Cochain c1 = skewpois::map_L1(c);
  for (int h = 0; h < g.size(); ++h) {
    Cochain moved = skewpois::group_action_on_cochain(&g, h, c1);
    REQUIRE(skewpois::cochains_agree(moved, c1, 2).ok);
  }

  // An already invariant cochain is a fixed point of stage one.
  Cochain inv = skewpois::group_averaged(c);
  REQUIRE(skewpois::cochains_agree(skewpois::map_L1(inv), inv, 2).ok);
}

TEST_CASE("stage two reads off multivectors") {
  Group g = kleinian3();
  int e = g.identity();
  int a = g.element_named("a");
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  MultiPoly x2 = MultiPoly::variable(2, 1);

  // The multiplication cochain is symmetric, so the projection kills it.
  auto mblocks = skewpois::map_L2(skewpois::make_multiplication(&g));
  for (const auto& [elem, mv] : mblocks) REQUIRE(mv.is_zero());

  // A constant-coefficient derivative becomes the constant vector field.
  auto db = skewpois::map_L2(skewpois::make_polydiff(&g, e, one, {Expo{1, 0}}));
  Multivector d0(2, 1);
  d0.add_term({0}, one);
  REQUIRE(db.at(e) == d0);

  // Polynomial coefficients survive the basepoint collapse.
  auto pb =
      skewpois::map_L2(skewpois::make_polydiff(&g, e, x2 * x2, {Expo{1, 0}}));
  Multivector want(2, 1);
  want.add_term({0}, x2 * x2);
  REQUIRE(pb.at(e) == want);

  // Arity zero: the value itself, read at the basepoint.
  CrossedElt val = CrossedElt::term(&g, a, x2 * x2);
  auto cb = skewpois::map_L2(skewpois::make_constant_cochain(&g, val));
  Multivector scalar(2, 0);
  scalar.add_term({}, x2 * x2);
  REQUIRE(cb.at(a) == scalar);

  // The divided difference projects onto the moved volume with unit
  // coefficient.
  auto ob = skewpois::map_L2(skewpois::make_twisted_cocycle(&g, a));
  Multivector vol(2, 2);
  vol.add_term({0, 1}, one);
  REQUIRE(ob.at(a) == vol);

  Group flip = line_flip();
  int s = flip.element_named("s");
  auto fb = skewpois::map_L2(skewpois::make_twisted_cocycle(&flip, s));
  Multivector d(1, 1);
  d.add_term({0}, MultiPoly::constant(1, Cyclo(1)));
  REQUIRE(fb.at(s) == d);

  // The arity cap refuses.
  Cochain wide = skewpois::make_polydiff(&g, e, one,
                                         {Expo{1, 0}, Expo{1, 0}, Expo{1, 0}});
  REQUIRE_THROWS_AS(skewpois::map_L2(wide, 2), std::invalid_argument);
}

TEST_CASE("the affine projection inverts multivector operators") {
  Group g = kleinian3();
  int e = g.identity();
  const skewpois::FixedPointData& fde = g.fixed_data(e);
  std::mt19937 rng(17);
  for (int degree = 0; degree <= 2; ++degree) {
    for (int trial = 0; trial < 3; ++trial) {
      Multivector x(2, degree);
      if (degree == 0) {
        x.add_term({}, random_poly(rng, 2, 2));
      } else if (degree == 1) {
        x.add_term({0}, random_poly(rng, 2, 2));
        x.add_term({1}, random_poly(rng, 2, 2));
      } else {
        x.add_term({0, 1}, random_poly(rng, 2, 2));
      }
      Cochain op = skewpois::sharp_product(&g, e, fde, x);
      auto blocks = skewpois::map_L2(op);
      if (x.is_zero()) continue;
      REQUIRE(blocks.at(e) == x);
    }
  }
}

TEST_CASE("stage three restricts and projects") {
  Group g = kleinian3();
  int e = g.identity();
  int a = g.element_named("a");
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  MultiPoly x1 = MultiPoly::variable(2, 0);

  // At the identity nothing is cut.
  std::mt19937 rng(23);
  Multivector amb(2, 1);
  amb.add_term({0}, random_poly(rng, 2, 2));
  amb.add_term({1}, random_poly(rng, 2, 2));
  std::map<int, Multivector> blocks;
  blocks[e] = amb;
  MultivectorSection sec = skewpois::map_L3(&g, blocks);
  REQUIRE(sec.block_at(e) == skewpois::to_frame(amb, g.fixed_data(e)));

  // A term missing part of the moved volume dies, coefficients restrict
  // to the fixed subspace.
  Multivector partial(2, 1);
  partial.add_term({0}, one);
  std::map<int, Multivector> b2;
  b2[a] = partial;
  REQUIRE(skewpois::map_L3(&g, b2).block_at(a).is_zero());

  Multivector coeffdies(2, 2);
  coeffdies.add_term({0, 1}, x1);
  std::map<int, Multivector> b3;
  b3[a] = coeffdies;
  REQUIRE(skewpois::map_L3(&g, b3).block_at(a).is_zero());

  Multivector survives(2, 2);
  survives.add_term({0, 1}, one);
  std::map<int, Multivector> b4;
  b4[a] = survives;
  MultivectorSection s4 = skewpois::map_L3(&g, b4);
  REQUIRE(s4.block_at(a) == skewpois::to_frame(survives, g.fixed_data(a)));
  REQUIRE(s4.in_model());
}

TEST_CASE("divided differences invert the twisted projection") {
  Group g = kleinian3();
  int e = g.identity();
  int a = g.element_named("a");
  int a2 = g.mul(a, a);
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);

  // The unit volume block maps back to the divided difference.
  MultivectorSection lam(&g, 2);
  Multivector vol(2, 2);
  vol.add_term({0, 1}, one);
  lam.add_block(a, skewpois::to_frame(vol, g.fixed_data(a)));
  REQUIRE(lam.is_invariant());
  Cochain t1 = skewpois::map_T1(lam);
  REQUIRE(skewpois::cochains_agree(t1, skewpois::make_twisted_cocycle(&g, a), 3)
              .ok);

  // Concentrated at the identity the map is the plain operator.
  MultivectorSection at_e(&g, 2);
  Multivector pi(2, 2);
  pi.add_term({0, 1}, x1 * x2 + one);
  at_e.add_block(e, pi);
  REQUIRE(at_e.is_invariant());
  Cochain op = skewpois::map_T1(at_e);
  Cochain expect = skewpois::sharp_product(&g, e, g.fixed_data(e), pi);
  REQUIRE(skewpois::cochains_agree(op, expect, 3).ok);

  // Rejects a non-invariant section under the strict flag.
  MultivectorSection bad(&g, 1);
  Multivector vx(2, 1);
  vx.add_term({0}, x2);
  bad.add_block(e, vx);
  REQUIRE(!bad.is_invariant());
  REQUIRE_THROWS_AS(skewpois::map_T1(bad), std::invalid_argument);

  // The affine projection recovers the section after restriction.
  MultivectorSection xi(&g, 2);
  xi.add_block(e, pi);
  xi.add_block(a, skewpois::to_frame(vol.scaled(Cyclo::zeta(3)), g.fixed_data(a)));
  xi.add_block(a2, skewpois::to_frame(vol.scaled(Cyclo(2)), g.fixed_data(a2)));
  REQUIRE(xi.is_invariant());
  REQUIRE(xi.in_model());
  MultivectorSection back =
      skewpois::map_L3(&g, skewpois::map_L2(skewpois::map_T1(xi)));
  REQUIRE(back == xi);
}

TEST_CASE("tag extension restores crossed evaluation") {
  Group g = kleinian3();
  int e = g.identity();
  int a = g.element_named("a");
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);
  std::mt19937 rng(31);

  // One argument: the tag passes straight through.
  MultiPoly coeff = random_poly(rng, 2, 2);
  Cochain phi = skewpois::make_polydiff(&g, e, coeff, {Expo{0, 1}});
  Cochain t2 = skewpois::map_T2(phi);
  CrossedElt got = t2({CrossedElt::term(&g, a, x1 * x2)});
  CrossedElt want = phi.eval({x1 * x2}) * CrossedElt::unit(&g, a, 2);
  REQUIRE(got == want);

  // Two arguments with tags (a, e): the second slot is transported.
  Cochain phi2 = skewpois::make_polydiff(&g, e, coeff, {Expo{0, 1}, Expo{1, 0}});
  Cochain t22 = skewpois::map_T2(phi2);
  MultiPoly b = random_poly(rng, 2, 2);
  CrossedElt got2 = t22({CrossedElt::term(&g, a, x1), CrossedElt::poly(&g, b)});
  MultiPoly moved = skewpois::poly_substitute(b, g.mat(g.inv(a)));
  CrossedElt want2 = phi2.eval({x1, moved}) * CrossedElt::unit(&g, a, 2);
  REQUIRE(got2 == want2);

  // All identity tags restrict to the original cochain.
  REQUIRE(skewpois::cochains_agree(t22, phi2, 2).ok);
}

TEST_CASE("the averaged lift is a left inverse") {
  Group g = kleinian3();
  std::mt19937 rng(37);
  for (int arity = 1; arity <= 2; ++arity) {
    std::vector<Expo> orders;
    std::uniform_int_distribution<int> ord(0, 1);
    for (int t = 0; t < arity; ++t) orders.push_back(Expo{ord(rng), ord(rng)});
    std::uniform_int_distribution<int> tag(0, g.size() - 1);
    Cochain raw =
        skewpois::make_polydiff(&g, tag(rng), random_poly(rng, 2, 2), orders);
    Cochain inv = skewpois::group_averaged(raw);
    Cochain roundtrip = skewpois::map_L1(skewpois::map_T2(inv));
    REQUIRE(skewpois::cochains_agree(roundtrip, inv, 2).ok);
  }
}

TEST_CASE("roundtrips on the flipped line") {
  Group g = line_flip();
  int e = g.identity();
  MultiPoly x = MultiPoly::variable(1, 0);

  // Degree one: odd vector fields at the identity.
  MultivectorSection xi(&g, 1);
  Multivector vf(1, 1);
  vf.add_term({0}, x * x * x + x.scaled(Cyclo(2)));
  xi.add_block(e, vf);
  REQUIRE(xi.is_invariant());
  skewpois::RoundtripReport rep = skewpois::roundtrip_check(xi, 4);
  REQUIRE(rep.ok);

  // Degree zero: even functions.
  MultivectorSection f0(&g, 0);
  Multivector scalar(1, 0);
  scalar.add_term({}, x * x);
  f0.add_block(e, scalar);
  REQUIRE(skewpois::roundtrip_check(f0, 4).ok);

  // The zero section.
  MultivectorSection zero(&g, 1);
  REQUIRE(skewpois::roundtrip_check(zero, 3).ok);
  REQUIRE(skewpois::map_L(skewpois::make_zero_cochain(&g, 1)).is_zero());
}

TEST_CASE("roundtrips on the Kleinian plane") {
  Group g = kleinian3();
  int e = g.identity();
  int a = g.element_named("a");
  int a2 = g.mul(a, a);
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  MultiPoly x1 = MultiPoly::variable(2, 0);
  MultiPoly x2 = MultiPoly::variable(2, 1);

  // Degree two with all three components populated.
  Multivector pie(2, 2);
  pie.add_term({0, 1}, one + x1 * x2);
  Multivector vol(2, 2);
  vol.add_term({0, 1}, one);
  MultivectorSection xi(&g, 2);
  xi.add_block(e, pie);
  xi.add_block(a, skewpois::to_frame(vol.scaled(Cyclo::zeta(3)), g.fixed_data(a)));
  xi.add_block(a2, skewpois::to_frame(vol.scaled(Cyclo(2)), g.fixed_data(a2)));
  REQUIRE(xi.is_invariant());
  REQUIRE(xi.in_model());
  skewpois::RoundtripReport rep = skewpois::roundtrip_check(xi, 2);
  REQUIRE(rep.ok);

  // Degree one: the Euler-type fields concentrate at the identity.
  MultivectorSection eu(&g, 1);
  Multivector vf(2, 1);
  vf.add_term({0}, x1);
  vf.add_term({1}, x2.scaled(Cyclo(-3)));
  eu.add_block(e, vf);
  REQUIRE(eu.is_invariant());
  REQUIRE(skewpois::roundtrip_check(eu, 3).ok);

  // The cocycle condition holds with tagged arguments too.
  Cochain t = skewpois::map_T(xi);
  REQUIRE(skewpois::crossed_cocycle_check(t, 1).ok);
}

TEST_CASE("roundtrips on the fourfold rotation line") {
  Group g = z4_line();
  std::mt19937 rng(41);
  int found = 0;
  for (int trial = 0; trial < 6 && found < 3; ++trial) {
    int degree = trial % 2;
    MultivectorSection xi = random_invariant_section(rng, g, degree, 5);
    REQUIRE(xi.in_model());
    REQUIRE(xi.is_invariant());
    if (xi.is_zero()) continue;
    ++found;
    REQUIRE(skewpois::roundtrip_check(xi, 5).ok);
  }
  REQUIRE(found > 0);
}

TEST_CASE("a corrupted normalization is caught") {
  Group g = kleinian3();
  int a = g.element_named("a");
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  Multivector vol(2, 2);
  vol.add_term({0, 1}, one);
  MultivectorSection xi(&g, 2);
  xi.add_block(a, skewpois::to_frame(vol, g.fixed_data(a)));
  REQUIRE(xi.is_invariant());
  REQUIRE(skewpois::roundtrip_check(xi, 2).ok);

  // Doubling the twisted factor mimics dropping the factorial constant;
  // the exact comparison sees it immediately.
  Cochain corrupted = skewpois::cochain_scaled(skewpois::map_T(xi), Cyclo(2));
  MultivectorSection back = skewpois::map_L(corrupted);
  REQUIRE(back != xi);
  REQUIRE(back == xi.scaled(Cyclo(2)));
}

TEST_CASE("the extension is independent of the eigenframe") {
  Group g = kleinian3();
  int a = g.element_named("a");
  const skewpois::FixedPointData& fd = g.fixed_data(a);

  skewpois::FixedPointData swapped;
  swapped.element = a;
  swapped.codim = 2;
  swapped.normal_idx = {0, 1};
  Mat fr(2, 2);
  fr.at(0, 0) = fd.frame.at(0, 1);
  fr.at(1, 0) = fd.frame.at(1, 1);
  fr.at(0, 1) = fd.frame.at(0, 0);
  fr.at(1, 1) = fd.frame.at(1, 0);
  swapped.frame = fr;
  swapped.frame_inv = fr.inverse();
  swapped.eigs = {fd.eigs[1], fd.eigs[0]};
  swapped.det_normal = fd.det_normal;

  // Reordering the eigenbasis flips the divided difference and the frame
  // coefficient together; the products agree as cochains.
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  Multivector vol(2, 2);
  vol.add_term({0, 1}, one);
  Cyclo ca = skewpois::to_frame(vol, fd).coeff({0, 1}).constant_term();
  Cyclo cb = skewpois::to_frame(vol, swapped).coeff({0, 1}).constant_term();
  Cochain ta =
      skewpois::cochain_scaled(skewpois::make_twisted_cocycle(&g, a), ca);
  Cochain tb = skewpois::cochain_scaled(
      skewpois::make_twisted_cocycle(&g, a, swapped), cb);
  REQUIRE(skewpois::cochains_agree(ta, tb, 4).ok);

  // The projection returns the same section through either frame.
  MultivectorSection xi(&g, 2);
  xi.add_block(a, skewpois::to_frame(vol, fd));
  REQUIRE(skewpois::map_L3(&g, skewpois::map_L2(ta)) == xi);
  REQUIRE(skewpois::map_L3(&g, skewpois::map_L2(tb)) == xi);
}

TEST_CASE("the dihedral fallback averages to invariance") {
  Group d4 = dihedral4();
  REQUIRE(d4.size() == 8);
  REQUIRE(!skewpois::centralizers_abelian_on_normal(&d4));
  Group k3 = kleinian3();
  Group flip = line_flip();
  REQUIRE(skewpois::centralizers_abelian_on_normal(&k3));
  REQUIRE(skewpois::centralizers_abelian_on_normal(&flip));

  // The half turn sits in the center, so its centralizer is the whole
  // dihedral group acting on the full plane.
  int r = d4.element_named("r");
  int r2 = d4.mul(r, r);
  MultiPoly one = MultiPoly::constant(2, Cyclo(1));
  Multivector vol(2, 2);
  vol.add_term({0, 1}, one);

  // Average a volume block at the quarter turn: the result pairs the
  // quarter turn with its inverse.
  MultivectorSection raw(&d4, 2);
  raw.add_block(r, skewpois::to_frame(vol, d4.fixed_data(r)));
  MultivectorSection xi = raw.averaged();
  REQUIRE(xi.is_invariant());
  REQUIRE(xi.in_model());
  REQUIRE(!xi.is_zero());
  REQUIRE(xi.block_at(r2).is_zero());

  Cochain t1 = skewpois::map_T1(xi);
  for (int h = 0; h < d4.size(); ++h) {
    Cochain moved = skewpois::group_action_on_cochain(&d4, h, t1);
    REQUIRE(skewpois::cochains_agree(moved, t1, 1).ok);
  }
  REQUIRE(skewpois::roundtrip_check(xi, 2).ok);

  // An averaged identity block also survives the roundtrip.
  std::mt19937 rng(43);
  MultivectorSection raw2(&d4, 2);
  raw2.add_block(d4.identity(),
                 random_model_block(rng, d4, d4.identity(), 2, 4));
  MultivectorSection xi2 = raw2.averaged();
  REQUIRE(xi2.is_invariant());
  REQUIRE(xi2.in_model());
  if (!xi2.is_zero()) REQUIRE(skewpois::roundtrip_check(xi2, 2).ok);
}
