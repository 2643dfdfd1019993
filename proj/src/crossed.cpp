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

#include "skewpois/crossed.hpp"

#include <sstream>
#include <stdexcept>

namespace skewpois {

CrossedElt CrossedElt::poly(const Group* group, MultiPoly f) {
  CrossedElt out(group, f.nvars());
  out.add_component(group->identity(), f);
  return out;
}

CrossedElt CrossedElt::unit(const Group* group, int elem, int nvars) {
  CrossedElt out(group, nvars);
  out.add_component(elem, MultiPoly::constant(nvars, Cyclo(1)));
  return out;
}

CrossedElt CrossedElt::term(const Group* group, int elem, MultiPoly f) {
  CrossedElt out(group, f.nvars());
  out.add_component(elem, f);
  return out;
}

MultiPoly CrossedElt::component_at(int g) const {
  auto it = comps_.find(g);
  return it == comps_.end() ? MultiPoly(nvars_) : it->second;
}

void CrossedElt::add_component(int g, const MultiPoly& f) {
  if (group_ == nullptr) throw std::invalid_argument("add_component: no group context");
  if (g < 0 || g >= group_->size())
    throw std::invalid_argument("add_component: element index out of range");
  if (f.nvars() != nvars_)
    throw std::invalid_argument("add_component: variable count mismatch");
  if (f.is_zero()) return;
  auto [it, inserted] = comps_.emplace(g, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

void CrossedElt::check_context(const CrossedElt& o, const char* op) const {
  if (group_ != o.group_ || nvars_ != o.nvars_)
    throw std::invalid_argument(std::string(op) + ": mismatched algebra contexts");
}

CrossedElt CrossedElt::operator-() const {
  CrossedElt out(group_, nvars_);
  for (const auto& [g, f] : comps_) out.comps_.emplace(g, -f);
  return out;
}

CrossedElt& CrossedElt::operator+=(const CrossedElt& o) {
  check_context(o, "crossed sum");
  for (const auto& [g, f] : o.comps_) add_component(g, f);
  return *this;
}

CrossedElt& CrossedElt::operator-=(const CrossedElt& o) {
  check_context(o, "crossed difference");
  for (const auto& [g, f] : o.comps_) add_component(g, -f);
  return *this;
}

CrossedElt CrossedElt::operator*(const CrossedElt& o) const {
  check_context(o, "crossed product");
  CrossedElt out(group_, nvars_);
  for (const auto& [g, f] : comps_) {
    const Mat& gmat_inv = group_->mat(group_->inv(g));
    for (const auto& [k, h] : o.comps_) {
      MultiPoly moved = poly_substitute(h, gmat_inv);
      out.add_component(group_->mul(g, k), f * moved);
    }
  }
  return out;
}

CrossedElt CrossedElt::scaled(const Cyclo& c) const {
  CrossedElt out(group_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [g, f] : comps_) out.comps_.emplace(g, f.scaled(c));
  return out;
}

bool CrossedElt::operator==(const CrossedElt& o) const {
  return group_ == o.group_ && nvars_ == o.nvars_ && comps_ == o.comps_;
}

std::string CrossedElt::str(const std::vector<std::string>& names) const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, f] : comps_) {
    if (!first) os << " + ";
    os << "(" << f.str(names) << ")*U[" << group_->name_of(g) << "]";
    first = false;
  }
  return os.str();
}

CrossedElt conjugate_action(int h, const CrossedElt& a) {
  const Group* group = a.group();
  if (group == nullptr) throw std::invalid_argument("conjugate_action: no group context");
  const Mat& hmat = group->mat(h);
  int hinv = group->inv(h);
  CrossedElt out(group, a.nvars());
  for (const auto& [g, f] : a.components()) {
    int target = group->mul(group->mul(hinv, g), h);
    out.add_component(target, poly_substitute(f, hmat));
  }
  return out;
}

}  // namespace skewpois
