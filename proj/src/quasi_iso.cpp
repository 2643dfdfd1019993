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

#include "skewpois/quasi_iso.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace skewpois {

namespace {

// Identifies the live coordinates with the basepoint spectators, turning
// a doubled-ring value into a polynomial in the basepoint alone.
MultiPoly collapse_basepoint(const MultiPoly& f, int n) {
  if (f.nvars() == n) return f;
  std::vector<int> image(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) image[i] = i < n ? i : i - n;
  return f.remapped(image, n);
}

}  // namespace

Cochain map_L1(const Cochain& c) { return group_averaged(c); }

std::map<int, Multivector> map_L2(const Cochain& c, int max_arity) {
  const Group* group = c.group();
  int k = c.arity();
  if (k > max_arity)
    throw std::invalid_argument("projection arity cap exceeded");
  int n = group->dim();

  std::map<int, Multivector> out;
  for (int g = 0; g < group->size(); ++g) out.emplace(g, Multivector(n, k));

  // Arguments are the affine functions (coordinate minus basepoint) in a
  // ring with the basepoint carried as n extra variables. Summing every
  // injective index tuple into the wedge supplies the sign-weighted
  // permutation average.
  std::vector<int> idx(k);
  std::function<void(int)> rec = [&](int pos) {
    if (pos < k) {
      for (int i = 0; i < n; ++i) {
        if (std::find(idx.begin(), idx.begin() + pos, i) !=
            idx.begin() + pos)
          continue;
        idx[pos] = i;
        rec(pos + 1);
      }
      return;
    }
    std::vector<CrossedElt> args;
    args.reserve(k);
    for (int t = 0; t < k; ++t)
      args.push_back(CrossedElt::poly(
          group, MultiPoly::variable(2 * n, idx[t]) -
                     MultiPoly::variable(2 * n, n + idx[t])));
    CrossedElt val = c(args);
    for (const auto& [g, f] : val.components()) {
      MultiPoly coeff = collapse_basepoint(f, n);
      if (!coeff.is_zero()) out.at(g).add_term(idx, coeff);
    }
  };
  rec(0);
  return out;
}

MultivectorSection map_L3(const Group* group,
                          const std::map<int, Multivector>& blocks) {
  int degree = blocks.empty() ? 0 : blocks.begin()->second.degree();
  MultivectorSection out(group, degree);
  for (const auto& [g, mv] : blocks) {
    if (mv.is_zero()) continue;
    const FixedPointData& fd = group->fixed_data(g);
    Multivector framed = to_frame(mv, fd);
    Multivector cut =
        project_to_normal_volume(restrict_to_fixed(framed, fd), fd);
    if (!cut.is_zero()) out.add_block(g, cut);
  }
  return out;
}

MultivectorSection map_L(const Cochain& c) {
  return map_L3(c.group(), map_L2(map_L1(c)));
}

bool centralizers_abelian_on_normal(const Group* group) {
  int n = group->dim();
  for (int g = 0; g < group->size(); ++g) {
    const FixedPointData& fd = group->fixed_data(g);
    if (fd.codim == 0) continue;
    std::vector<int> centralizer;
    for (int h = 0; h < group->size(); ++h)
      if (group->mul(h, g) == group->mul(g, h)) centralizer.push_back(h);
    for (int h1 : centralizer) {
      for (int h2 : centralizer) {
        if (group->mul(h1, h2) == group->mul(h2, h1)) continue;
        const Mat& m12 = group->mat(group->mul(h1, h2));
        const Mat& m21 = group->mat(group->mul(h2, h1));
        for (int j : fd.normal_idx) {
          std::vector<Cyclo> col(n);
          for (int i = 0; i < n; ++i) col[i] = fd.frame.at(i, j);
          if (m12.apply(col) != m21.apply(col)) return false;
        }
      }
    }
  }
  return true;
}

Cochain map_T1(const MultivectorSection& xi, bool strict) {
  const Group* group = xi.group();
  if (group == nullptr)
    throw std::invalid_argument("section carries no group");
  std::string why;
  if (!xi.in_model(&why))
    throw std::invalid_argument("section outside the model: " + why);
  if (strict && !xi.is_invariant())
    throw std::invalid_argument("section is not invariant");

  int k = xi.degree();
  Cochain out = make_zero_cochain(group, k);
  for (const auto& [g, blk] : xi.blocks()) {
    if (blk.is_zero()) continue;
    const FixedPointData& fd = group->fixed_data(g);
    std::vector<int> normal = fd.normal_idx;
    std::sort(normal.begin(), normal.end());

    // Peel the normal volume off each term; the sign moves the normal
    // factor to the back.
    Multivector tangential(group->dim(), k - fd.codim);
    for (const auto& [idx, f] : blk.terms()) {
      std::vector<int> tan;
      for (int i : idx)
        if (!std::binary_search(normal.begin(), normal.end(), i))
          tan.push_back(i);
      int crossings = 0;
      for (int t : tan)
        for (int m : normal)
          if (t > m) ++crossings;
      tangential.add_term(
          tan, crossings % 2 == 0 ? f : f.scaled(Cyclo(-1)));
    }
    out = cochain_sum(out, sharp_product(group, g, fd, tangential));
  }

  if (!centralizers_abelian_on_normal(group)) out = group_averaged(out);
  return out;
}

Cochain map_T2(const Cochain& c) { return lift_through_tags(c); }

Cochain map_T(const MultivectorSection& xi, bool strict) {
  return map_T2(map_T1(xi, strict));
}

RoundtripReport roundtrip_check(const MultivectorSection& xi,
                                int degree_bound) {
  RoundtripReport rep;
  Cochain t = map_T(xi);
  MultivectorSection back = map_L(t);
  if (back != xi) {
    rep.ok = false;
    rep.detail = "projection of the extension differs from the input";
    for (int g = 0; g < xi.group()->size(); ++g) {
      if (back.block_at(g) != xi.block_at(g)) {
        rep.detail += " at " + xi.group()->name_of(g);
        break;
      }
    }
    return rep;
  }
  SweepReport coc = cocycle_check(t, degree_bound);
  if (!coc.ok) {
    rep.ok = false;
    rep.detail = "extension fails the cocycle sweep at " + coc.witness;
  }
  return rep;
}

}  // namespace skewpois
