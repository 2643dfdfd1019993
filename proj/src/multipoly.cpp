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

#include "skewpois/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewpois {

MultiPoly MultiPoly::constant(int nvars, const Cyclo& c) {
  MultiPoly f(nvars);
  f.add_term(Expo(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::domain_error("variable: index out of range");
  Expo e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, std::move(e), Cyclo(1));
}

MultiPoly MultiPoly::monomial(int nvars, Expo e, const Cyclo& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::domain_error("monomial: exponent length mismatch");
  MultiPoly f(nvars);
  f.add_term(e, c);
  return f;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Cyclo MultiPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclo() : it->second;
}

void MultiPoly::add_term(const Expo& e, const Cyclo& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::domain_error("add_term: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::domain_error("poly sum: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::domain_error("poly difference: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("poly product: variable count mismatch");
  MultiPoly out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Cyclo& c) const {
  MultiPoly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::domain_error("derivative: index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var] -= 1;
    out.add_term(d, c * Cyclo(e[var]));
  }
  return out;
}

MultiPoly MultiPoly::substitute_zero(int var) const {
  if (var < 0 || var >= nvars_) throw std::domain_error("substitute_zero: index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) out.terms_.emplace(e, c);
  return out;
}

MultiPoly MultiPoly::extended(int new_nvars) const {
  if (new_nvars < nvars_) throw std::domain_error("extended: ring would shrink");
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Expo w(new_nvars, 0);
    std::copy(e.begin(), e.end(), w.begin());
    out.terms_.emplace(std::move(w), c);
  }
  return out;
}

MultiPoly MultiPoly::remapped(const std::vector<int>& image, int new_nvars) const {
  if (static_cast<int>(image.size()) != nvars_)
    throw std::domain_error("remapped: image length mismatch");
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Expo w(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      int target = image[i];
      if (target < 0 || target >= new_nvars)
        throw std::domain_error("remapped: target variable out of range");
      w[target] += e[i];
    }
    out.add_term(w, c);
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string monomial_str(const Expo& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    if (i < names.size())
      os << names[i];
    else
      os << "x" << (i + 1);
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = true;
    for (int exp : e) is_const = is_const && exp == 0;
    if (c.is_rational()) {
      Rat v = c.rational_value();
      bool negative = v < 0;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      Rat mag = negative ? Rat(-v) : v;
      if (is_const) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        os << monomial_str(e, names);
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      if (!is_const) os << "*" << monomial_str(e, names);
    }
    first = false;
  }
  return os.str();
}

MultiPoly poly_substitute(const MultiPoly& f, const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("poly_substitute: matrix not square");
  const int k = m.rows();
  const int nv = f.nvars();
  if (k > nv) throw std::domain_error("poly_substitute: matrix larger than variable ring");

  // Image of each transformed variable as a (sparse) linear form.
  std::vector<std::vector<std::pair<int, Cyclo>>> rows(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!m.at(i, j).is_zero()) rows[i].emplace_back(j, m.at(i, j));

  // Cache powers of each linear form as they come up.
  std::vector<std::vector<MultiPoly>> powers(k);
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(MultiPoly::constant(nv, Cyclo(1)));
      MultiPoly lin(nv);
      for (const auto& [j, c] : rows[i]) {
        Expo ex(nv, 0);
        ex[j] = 1;
        lin.add_term(ex, c);
      }
      cache.push_back(std::move(lin));
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  MultiPoly out(nv);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term(nv);
    Expo fixed(nv, 0);
    for (int i = k; i < nv; ++i) fixed[i] = e[i];
    term.add_term(fixed, c);
    for (int i = 0; i < k; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

MultiPoly exact_monomial_divide(const MultiPoly& f, const Expo& mono) {
  if (static_cast<int>(mono.size()) != f.nvars())
    throw std::domain_error("exact_monomial_divide: exponent length mismatch");
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Expo q(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
      q[i] = e[i] - mono[i];
      if (q[i] < 0)
        throw std::domain_error("exact_monomial_divide: term " + monomial_str(e) +
                                " is not divisible by " + monomial_str(mono));
    }
    out.add_term(q, c);
  }
  return out;
}

}  // namespace skewpois
