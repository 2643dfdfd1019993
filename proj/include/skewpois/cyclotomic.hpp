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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace skewpois {

using Rat = mpq_class;

int euler_phi(int n);

// Element of a cyclotomic field Q(zeta_N), stored as the residue of a
// polynomial in zeta_N modulo the N-th cyclotomic polynomial. Arithmetic
// between different conductors embeds both operands into the field of
// conductor lcm(N, M) first, so values with unequal conductors compare
// and combine exactly. A residue that reduces to a constant is stored
// with conductor 1.
class Cyclo {
 public:
  Cyclo() : cond_(1) {}
  Cyclo(long v);
  Cyclo(int v) : Cyclo(static_cast<long>(v)) {}
  Cyclo(const Rat& v);

  // zeta(n, k) is exp(2*pi*i*k/n), represented exactly.
  static Cyclo zeta(int n, long power = 1);

  int conductor() const { return cond_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  // Throws std::domain_error when the element is not rational.
  Rat rational_value() const;

  // Residue coefficients: coeffs()[k] multiplies zeta(conductor())^k.
  const std::vector<Rat>& coeffs() const { return c_; }

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  // Throws std::domain_error on zero.
  Cyclo inverse() const;
  // Complex conjugation, zeta_N -> zeta_N^(N-1).
  Cyclo conjugate() const;
  Cyclo pow(long e) const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  std::string str() const;

  // Monic coefficients of the n-th cyclotomic polynomial, lowest degree
  // first. Results are cached; precompute(n) warms the cache for every
  // divisor of n so later lookups never mutate shared state (useful
  // before fanning work out across threads).
  static const std::vector<Rat>& cyclotomic_polynomial(int n);
  static void precompute(int n);

 private:
  int cond_;
  std::vector<Rat> c_;

  void reduce();
  Cyclo embedded(int m) const;
  static void align(Cyclo& a, Cyclo& b);
};

}  // namespace skewpois
