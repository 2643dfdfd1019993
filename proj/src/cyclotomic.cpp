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

#include "skewpois/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewpois {

namespace {

using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic polynomial m, in place.
void mod_monic(Poly& a, const Poly& m) {
  const size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    Rat lead = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    trim(a);
  }
}

// Exact quotient a / m for monic m; throws if the division leaves a
// remainder (never expected for cyclotomic factors).
Poly div_monic(Poly a, const Poly& m) {
  trim(a);
  const size_t dm = m.size() - 1;
  if (a.size() <= dm) {
    if (!a.empty()) throw std::logic_error("cyclotomic factor does not divide");
    return {};
  }
  Poly q(a.size() - dm, Rat(0));
  while (a.size() > dm) {
    Rat lead = a.back();
    size_t shift = a.size() - 1 - dm;
    q[shift] = lead;
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("cyclotomic factor does not divide");
  return q;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::map<int, Poly>& phi_cache() {
  static std::map<int, Poly> cache;
  return cache;
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

// Assumes the mutex is held.
const Poly& phi_locked(int n) {
  auto& cache = phi_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p(n + 1, Rat(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = div_monic(std::move(p), phi_locked(d));
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::domain_error("euler_phi: argument must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rat>& Cyclo::cyclotomic_polynomial(int n) {
  if (n < 1) throw std::domain_error("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(phi_mutex());
  return phi_locked(n);
}

void Cyclo::precompute(int n) {
  std::lock_guard<std::mutex> lock(phi_mutex());
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) phi_locked(d);
}

Cyclo::Cyclo(long v) : cond_(1) {
  if (v != 0) c_.assign(1, Rat(v));
}

Cyclo::Cyclo(const Rat& v) : cond_(1) {
  Rat canon = v;
  canon.canonicalize();
  if (canon != 0) c_.assign(1, canon);
}

Cyclo Cyclo::zeta(int n, long power) {
  if (n < 1) throw std::domain_error("zeta: conductor must be positive");
  long k = power % n;
  if (k < 0) k += n;
  Cyclo z;
  z.cond_ = n;
  z.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
  z.c_[static_cast<size_t>(k)] = 1;
  z.reduce();
  return z;
}

void Cyclo::reduce() {
  if (cond_ > 1) mod_monic(c_, cyclotomic_polynomial(cond_));
  trim(c_);
  if (c_.size() <= 1) cond_ = 1;
}

Cyclo Cyclo::embedded(int m) const {
  if (m == cond_) return *this;
  if (m % cond_ != 0) throw std::logic_error("embedded: target conductor not a multiple");
  Cyclo out;
  out.cond_ = m;
  if (is_rational()) {
    // A constant has the same residue vector in every conductor.
    out.c_ = c_;
    return out;
  }
  int stretch = m / cond_;
  out.c_.assign((c_.size() - 1) * stretch + 1, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) out.c_[k * stretch] = c_[k];
  // Embedding is injective, so a non-rational element never reduces to a
  // constant here and the conductor label survives.
  out.reduce();
  return out;
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
  if (a.cond_ == b.cond_) return;
  int l = std::lcm(a.cond_, b.cond_);
  a = a.embedded(l);
  b = b.embedded(l);
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw std::domain_error("rational_value: element is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& coef : out.c_) coef = -coef;
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  Cyclo rhs = o;
  align(*this, rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
  for (size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim(c_);
  if (c_.size() <= 1) cond_ = 1;
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  Cyclo rhs = o;
  align(*this, rhs);
  c_ = mul(c_, rhs.c_);
  reduce();
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("inverse: division by zero");
  if (is_rational()) {
    Cyclo out;
    out.c_.assign(1, Rat(1) / c_[0]);
    return out;
  }
  // Extended Euclid in Q[x]: the cyclotomic polynomial is irreducible, so
  // gcd(c, Phi) = 1 and u with u*c = 1 (mod Phi) always exists.
  Poly r0 = cyclotomic_polynomial(cond_);
  Poly r1 = c_;
  Poly u0{}, u1{Rat(1)};
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::logic_error("inverse: residue shares a factor with Phi");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2 by monic-style elimination on the leading term.
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
    Poly r2 = r0;
    while (r2.size() >= r1.size()) {
      Rat factor = r2.back() / r1.back();
      size_t shift = r2.size() - r1.size();
      q[shift] += factor;
      for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= factor * r1[i];
      trim(r2);
      if (r2.empty()) break;
    }
    Poly u2 = u0;
    Poly qu = mul(q, u1);
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rat(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  Rat scale = Rat(1) / r1[0];
  Cyclo out;
  out.cond_ = cond_;
  out.c_ = std::move(u1);
  for (auto& coef : out.c_) coef *= scale;
  out.reduce();
  return out;
}

Cyclo Cyclo::conjugate() const {
  if (is_rational()) return *this;
  Cyclo out;
  out.cond_ = cond_;
  out.c_.assign(cond_, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k)
    out.c_[(k * (cond_ - 1)) % cond_] += c_[k];
  out.reduce();
  return out;
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
  Cyclo a = *this;
  Cyclo b = o;
  align(a, b);
  return a.c_ == b.c_;
}

std::string Cyclo::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat coef = c_[k];
    bool negative = coef < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    Rat mag = negative ? Rat(-coef) : coef;
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "zeta(" << cond_ << ")";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace skewpois
