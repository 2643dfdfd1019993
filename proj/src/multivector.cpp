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

#include "skewpois/multivector.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewpois {

namespace {

// Sorts idx in place and returns the permutation sign, or 0 on a repeat.
int normalize_indices(std::vector<int>& idx) {
  int sign = 1;
  for (size_t a = 1; a < idx.size(); ++a)
    for (size_t b = a; b > 0 && idx[b - 1] > idx[b]; --b) {
      std::swap(idx[b - 1], idx[b]);
      sign = -sign;
    }
  for (size_t a = 1; a < idx.size(); ++a)
    if (idx[a - 1] == idx[a]) return 0;
  return sign;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (size_t a = 0; a < perm.size(); ++a)
    for (size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) sign = -sign;
  return sign;
}

}  // namespace

Multivector::Multivector(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars < 0 || degree < 0)
    throw std::invalid_argument("multivector needs nonnegative shape");
}

MultiPoly Multivector::coeff(std::vector<int> idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("index list has wrong length");
  int sign = normalize_indices(idx);
  if (sign == 0) return MultiPoly(nvars_);
  auto it = terms_.find(idx);
  if (it == terms_.end()) return MultiPoly(nvars_);
  return sign > 0 ? it->second : -it->second;
}

void Multivector::add_term(std::vector<int> idx, const MultiPoly& f) {
  if (static_cast<int>(idx.size()) != degree_)
    throw std::invalid_argument("index list has wrong length");
  for (int i : idx)
    if (i < 0 || i >= nvars_)
      throw std::invalid_argument("direction index out of range");
  if (f.nvars() != nvars_)
    throw std::invalid_argument("coefficient has wrong variable count");
  if (f.is_zero()) return;
  int sign = normalize_indices(idx);
  if (sign == 0) return;
  auto it = terms_.try_emplace(idx, MultiPoly(nvars_)).first;
  it->second += sign > 0 ? f : -f;
  if (it->second.is_zero()) terms_.erase(it);
}

Multivector Multivector::operator-() const {
  Multivector out(nvars_, degree_);
  for (const auto& [idx, f] : terms_) out.terms_.emplace(idx, -f);
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("mismatched variable counts");
  if (degree_ != o.degree_ && !o.terms_.empty() && !terms_.empty())
    throw std::invalid_argument("mismatched multivector degrees");
  if (terms_.empty() && !o.terms_.empty()) degree_ = o.degree_;
  for (const auto& [idx, f] : o.terms_) {
    MultiPoly& slot = terms_.try_emplace(idx, MultiPoly(nvars_)).first->second;
    slot += f;
    if (slot.is_zero()) terms_.erase(idx);
  }
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  return *this += -o;
}

Multivector Multivector::scaled(const Cyclo& c) const {
  Multivector out(nvars_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [idx, f] : terms_) out.terms_.emplace(idx, f.scaled(c));
  return out;
}

Multivector Multivector::wedge(const Multivector& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("mismatched variable counts");
  Multivector out(nvars_, degree_ + o.degree_);
  for (const auto& [ki, kf] : terms_) {
    for (const auto& [li, lf] : o.terms_) {
      std::vector<int> idx = ki;
      idx.insert(idx.end(), li.begin(), li.end());
      out.add_term(idx, kf * lf);
    }
  }
  return out;
}

bool Multivector::operator==(const Multivector& o) const {
  if (nvars_ != o.nvars_) return false;
  if (terms_.empty() && o.terms_.empty()) return true;
  return degree_ == o.degree_ && terms_ == o.terms_;
}

std::string Multivector::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str(names) << ")";
    for (size_t t = 0; t < idx.size(); ++t) {
      os << (t == 0 ? " " : "^");
      os << "d";
      if (!names.empty())
        os << names[idx[t]];
      else
        os << (idx[t] + 1);
    }
  }
  return os.str();
}

MultiPoly apply_as_operator(const Multivector& x,
                            const std::vector<MultiPoly>& args) {
  int m = x.degree();
  if (static_cast<int>(args.size()) != m)
    throw std::invalid_argument("operator arity mismatch");
  int out_n = m == 0 ? x.nvars() : args[0].nvars();
  for (const MultiPoly& a : args)
    if (a.nvars() != out_n)
      throw std::invalid_argument("arguments live in different rings");
  if (out_n < x.nvars())
    throw std::invalid_argument("argument ring smaller than the multivector");

  MultiPoly out(out_n);
  if (m == 0) {
    for (const auto& [idx, f] : x.terms()) out += f.extended(out_n);
    return out;
  }

  Rat inv_fact(1);
  for (int t = 2; t <= m; ++t) inv_fact /= t;
  Cyclo norm((inv_fact));

  std::vector<std::vector<MultiPoly>> darg(m);
  for (int t = 0; t < m; ++t)
    for (int i = 0; i < x.nvars(); ++i) darg[t].push_back(args[t].derivative(i));

  for (const auto& [idx, f] : x.terms()) {
    MultiPoly acc(out_n);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      MultiPoly prod = darg[0][idx[perm[0]]];
      for (int t = 1; t < m && !prod.is_zero(); ++t)
        prod = prod * darg[t][idx[perm[t]]];
      if (permutation_sign(perm) > 0)
        acc += prod;
      else
        acc -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out += (f.extended(out_n) * acc).scaled(norm);
  }
  return out;
}

namespace {

void expand_directions(const Mat& dm, const std::vector<int>& src, size_t t,
                       std::vector<int>& idx, const MultiPoly& acc,
                       Multivector& out) {
  if (t == src.size()) {
    out.add_term(idx, acc);
    return;
  }
  for (int j = 0; j < dm.rows(); ++j) {
    const Cyclo& c = dm.at(j, src[t]);
    if (c.is_zero()) continue;
    idx.push_back(j);
    expand_directions(dm, src, t + 1, idx, acc.scaled(c), out);
    idx.pop_back();
  }
}

}  // namespace

Multivector change_basis(const Multivector& x, const Mat& coord_sub,
                         const Mat& dir_map) {
  if (coord_sub.rows() != x.nvars() || dir_map.rows() != x.nvars())
    throw std::invalid_argument("basis change has wrong shape");
  Multivector out(x.nvars(), x.degree());
  for (const auto& [idx, f] : x.terms()) {
    MultiPoly nf = poly_substitute(f, coord_sub);
    if (nf.is_zero()) continue;
    std::vector<int> scratch;
    expand_directions(dir_map, idx, 0, scratch, nf, out);
  }
  return out;
}

Multivector to_ambient(const Multivector& x, const FixedPointData& fd) {
  return change_basis(x, fd.frame_inv, fd.frame);
}

Multivector to_frame(const Multivector& x, const FixedPointData& fd) {
  return change_basis(x, fd.frame, fd.frame_inv);
}

Multivector pushforward(const Multivector& x, const Mat& h, const Mat& h_inv) {
  return change_basis(x, h_inv, h);
}

Multivector restrict_to_fixed(const Multivector& x, const FixedPointData& fd) {
  Multivector out(x.nvars(), x.degree());
  for (const auto& [idx, f] : x.terms()) {
    MultiPoly r = f;
    for (int i : fd.normal_idx) r = r.substitute_zero(i);
    out.add_term(idx, r);
  }
  return out;
}

Multivector project_to_normal_volume(const Multivector& x,
                                     const FixedPointData& fd) {
  std::vector<int> normal = fd.normal_idx;
  std::sort(normal.begin(), normal.end());
  Multivector out(x.nvars(), x.degree());
  for (const auto& [idx, f] : x.terms())
    if (std::includes(idx.begin(), idx.end(), normal.begin(), normal.end()))
      out.add_term(idx, f);
  return out;
}

MultivectorSection::MultivectorSection(const Group* group, int degree)
    : group_(group), degree_(degree) {
  if (group == nullptr) throw std::invalid_argument("section needs a group");
  if (degree < 0) throw std::invalid_argument("section degree is negative");
}

Multivector MultivectorSection::block_at(int g) const {
  auto it = blocks_.find(g);
  if (it != blocks_.end()) return it->second;
  return Multivector(group_->dim(), degree_);
}

void MultivectorSection::add_block(int g, const Multivector& mv) {
  if (g < 0 || g >= group_->size())
    throw std::invalid_argument("group element out of range");
  if (mv.is_zero()) return;
  if (mv.nvars() != group_->dim() || mv.degree() != degree_)
    throw std::invalid_argument("block has the wrong shape");
  auto it = blocks_.try_emplace(g, Multivector(group_->dim(), degree_)).first;
  it->second += mv;
  if (it->second.is_zero()) blocks_.erase(it);
}

namespace {

void check_section_context(const MultivectorSection& a,
                           const MultivectorSection& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("mismatched algebra contexts");
}

}  // namespace

MultivectorSection MultivectorSection::operator-() const {
  MultivectorSection out(group_, degree_);
  for (const auto& [g, mv] : blocks_) out.blocks_.emplace(g, -mv);
  return out;
}

MultivectorSection& MultivectorSection::operator+=(const MultivectorSection& o) {
  check_section_context(*this, o);
  if (degree_ != o.degree_ && !o.blocks_.empty() && !blocks_.empty())
    throw std::invalid_argument("mismatched section degrees");
  if (blocks_.empty() && !o.blocks_.empty()) degree_ = o.degree_;
  for (const auto& [g, mv] : o.blocks_) add_block(g, mv);
  return *this;
}

MultivectorSection& MultivectorSection::operator-=(const MultivectorSection& o) {
  return *this += -o;
}

MultivectorSection MultivectorSection::scaled(const Cyclo& c) const {
  MultivectorSection out(group_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [g, mv] : blocks_) out.blocks_.emplace(g, mv.scaled(c));
  return out;
}

bool MultivectorSection::operator==(const MultivectorSection& o) const {
  check_section_context(*this, o);
  if (blocks_.empty() && o.blocks_.empty()) return true;
  return degree_ == o.degree_ && blocks_ == o.blocks_;
}

bool MultivectorSection::in_model(std::string* why) const {
  for (const auto& [g, mv] : blocks_) {
    const FixedPointData& fd = group_->fixed_data(g);
    std::vector<int> normal = fd.normal_idx;
    std::sort(normal.begin(), normal.end());
    for (const auto& [idx, f] : mv.terms()) {
      if (!std::includes(idx.begin(), idx.end(), normal.begin(), normal.end())) {
        if (why)
          *why = "block at " + group_->name_of(g) +
                 ": a wedge term is missing part of the normal volume";
        return false;
      }
      for (const auto& [e, c] : f.terms()) {
        for (int i : fd.normal_idx) {
          if (e[i] != 0) {
            if (why)
              *why = "block at " + group_->name_of(g) +
                     ": a coefficient depends on a normal coordinate";
            return false;
          }
        }
      }
    }
  }
  return true;
}

MultivectorSection MultivectorSection::transformed(int h) const {
  MultivectorSection out(group_, degree_);
  int hinv = group_->inv(h);
  const Mat& mh = group_->mat(h);
  const Mat& mhinv = group_->mat(hinv);
  for (const auto& [g, mv] : blocks_) {
    int target = group_->mul(group_->mul(hinv, g), h);
    Multivector ambient = to_ambient(mv, group_->fixed_data(g));
    // Transport along v -> h^-1 v, matching the conjugation action on
    // cochains: coefficients pull back through h and land on the fixed
    // space of the target element.
    Multivector pushed = pushforward(ambient, mhinv, mh);
    out.add_block(target, to_frame(pushed, group_->fixed_data(target)));
  }
  return out;
}

bool MultivectorSection::is_invariant() const {
  for (int h = 0; h < group_->size(); ++h)
    if (transformed(h) != *this) return false;
  return true;
}

MultivectorSection MultivectorSection::averaged() const {
  MultivectorSection out(group_, degree_);
  for (int h = 0; h < group_->size(); ++h) out += transformed(h);
  return out.scaled(Cyclo(Rat(1, group_->size())));
}

std::string MultivectorSection::str(const std::vector<std::string>& names) const {
  if (blocks_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, mv] : blocks_) {
    if (!first) os << "\n";
    first = false;
    os << group_->name_of(g) << ": " << mv.str(names);
  }
  return os.str();
}

}  // namespace skewpois
