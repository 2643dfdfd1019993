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

#include "skewpois/multipoly.hpp"

using skewpois::Cyclo;
using skewpois::Expo;
using skewpois::Mat;
using skewpois::MultiPoly;
using skewpois::Rat;

namespace {

Cyclo random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> zexp(0, 3);
  return Cyclo(num(rng)) + Cyclo(num(rng)) * Cyclo::zeta(4, zexp(rng));
}

MultiPoly random_poly(std::mt19937& rng, int nvars, int max_deg, int nterms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  MultiPoly f(nvars);
  for (int t = 0; t < nterms; ++t) {
    Expo e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = deg(rng);
    f.add_term(e, random_scalar(rng));
  }
  return f;
}

// Reference expansion of a substitution, done term by term with plain
// polynomial products. Deliberately ignores how poly_substitute works.
MultiPoly substitute_by_expansion(const MultiPoly& f, const Mat& m) {
  int nv = f.nvars();
  int k = m.rows();
  std::vector<MultiPoly> image(nv);
  for (int i = 0; i < nv; ++i) {
    if (i < k) {
      MultiPoly row(nv);
      for (int j = 0; j < k; ++j)
        row += MultiPoly::variable(nv, j).scaled(m.at(i, j));
      image[i] = row;
    } else {
      image[i] = MultiPoly::variable(nv, i);
    }
  }
  MultiPoly out(nv);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(nv, c);
    for (int i = 0; i < nv; ++i)
      for (int p = 0; p < e[i]; ++p) term = term * image[i];
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic on hand examples") {
  // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
  MultiPoly s = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
  MultiPoly sq = s * s;
  REQUIRE(sq.coeff({2, 0}) == Cyclo(1));
  REQUIRE(sq.coeff({1, 1}) == Cyclo(2));
  REQUIRE(sq.coeff({0, 2}) == Cyclo(1));
  REQUIRE(sq.total_degree() == 2);
  REQUIRE((sq - sq).is_zero());
  REQUIRE(MultiPoly(3).is_zero());
  REQUIRE(MultiPoly(3).total_degree() == -1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    MultiPoly f = random_poly(rng, 3, 3, 4);
    MultiPoly g = random_poly(rng, 3, 3, 4);
    MultiPoly h = random_poly(rng, 3, 3, 4);
    REQUIRE(f * g == g * f);
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("substitution matches independent expansion") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly f = random_poly(rng, 3, 3, 4);
    Mat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = random_scalar(rng);
    REQUIRE(skewpois::poly_substitute(f, m) == substitute_by_expansion(f, m));
  }
}

TEST_CASE("substitution composes contravariantly") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    MultiPoly f = random_poly(rng, 2, 3, 4);
    Mat a(2, 2), b(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a.at(i, j) = random_scalar(rng);
        b.at(i, j) = random_scalar(rng);
      }
    MultiPoly lhs = skewpois::poly_substitute(skewpois::poly_substitute(f, a), b);
    MultiPoly rhs = skewpois::poly_substitute(f, a * b);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("substitution touches only the leading block of variables") {
  // diag(zeta_3, 1) sends x1 to zeta_3*x1; a third variable outside the
  // matrix block passes through untouched.
  MultiPoly f = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 2);
  Mat m = Mat::diagonal({Cyclo::zeta(3), Cyclo(1)});
  MultiPoly out = skewpois::poly_substitute(f, m);
  REQUIRE(out.coeff({1, 0, 1}) == Cyclo::zeta(3));
  REQUIRE(out.terms().size() == 1);
}

TEST_CASE("monomial division multiplies back and reports offenders") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly f = random_poly(rng, 3, 2, 4);
    Expo mono{1, 0, 2};
    MultiPoly shifted = f * MultiPoly::monomial(3, mono, Cyclo(1));
    REQUIRE(skewpois::exact_monomial_divide(shifted, mono) == f);
  }
  MultiPoly bad = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
  REQUIRE_THROWS_WITH(skewpois::exact_monomial_divide(bad, Expo{1, 0}),
                      Catch::Matchers::ContainsSubstring("x2"));
}

TEST_CASE("derivative satisfies the product rule") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly f = random_poly(rng, 3, 3, 4);
    MultiPoly g = random_poly(rng, 3, 3, 4);
    for (int i = 0; i < 3; ++i) {
      REQUIRE((f * g).derivative(i) ==
              f.derivative(i) * g + f * g.derivative(i));
    }
  }
  MultiPoly cube = MultiPoly::monomial(1, {3}, Cyclo(1));
  REQUIRE(cube.derivative(0) == MultiPoly::monomial(1, {2}, Cyclo(3)));
}

TEST_CASE("variable remapping merges colliding targets") {
  // f(v, b) = (v1 - b1)^2 collapses to zero under v := b.
  MultiPoly diff = MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1);
  MultiPoly sq = diff * diff;
  REQUIRE(sq.remapped({0, 0}, 1).is_zero());

  MultiPoly f = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
  MultiPoly g = f.remapped({1, 0}, 2);
  REQUIRE(g == f);
  REQUIRE(f.remapped({0, 0}, 1) == MultiPoly::monomial(1, {2}, Cyclo(1)));
}

TEST_CASE("extension embeds into a larger variable ring") {
  MultiPoly f = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
  MultiPoly wide = f.extended(4);
  REQUIRE(wide.nvars() == 4);
  REQUIRE(wide.coeff({1, 1, 0, 0}) == Cyclo(1));
  REQUIRE(wide.substitute_zero(3) == wide);
  REQUIRE(wide.substitute_zero(0).is_zero());
}

TEST_CASE("string form lists terms deterministically") {
  MultiPoly f = MultiPoly::monomial(2, {2, 1}, Cyclo(2)) -
                MultiPoly::variable(2, 1);
  REQUIRE(f.str() == "-x2 + 2*x1^2*x2");
  REQUIRE(MultiPoly(2).str() == "0");
  MultiPoly g = MultiPoly::variable(2, 0).scaled(Cyclo::zeta(4));
  REQUIRE(g.str() == "(zeta(4))*x1");
}
