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

#include "skewpois/poisson.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace skewpois {

namespace {

int parity_sign(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

void for_injective_tuples(int n, int len, std::vector<int>& cur,
                          std::vector<bool>& used,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == len) {
    fn(cur);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    cur.push_back(i);
    for_injective_tuples(n, len, cur, used, fn);
    cur.pop_back();
    used[i] = false;
  }
}

void require_antisymmetric(const Mat& m) {
  int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!(m.at(i, j) + m.at(j, i)).is_zero())
        throw std::invalid_argument("matrix is not antisymmetric");
}

}  // namespace

Multivector twisted_prelie(const Multivector& xi, const Multivector& eta,
                           const Mat& gamma) {
  if (xi.nvars() != eta.nvars())
    throw std::invalid_argument("operands live in different variable rings");
  int n = xi.nvars();
  if (gamma.rows() != n || gamma.cols() != n)
    throw std::invalid_argument("twist must be a square matrix of the ambient size");
  int k = xi.degree();
  int l = eta.degree();
  int d = k + l - 1;
  if (d < 0) d = 0;
  Multivector out(n, d);
  if (k == 0 || d > n || xi.is_zero() || eta.is_zero()) return out;
  Mat ginv = gamma.inverse();
  std::vector<MultiPoly> coord(n), after(n);
  for (int i = 0; i < n; ++i) {
    coord[i] = MultiPoly::variable(n, i);
    after[i] = poly_substitute(coord[i], ginv);
  }
  // Values of eta on ordered coordinate tuples, cached up front.
  std::map<std::vector<int>, MultiPoly> inner;
  {
    std::vector<int> cur;
    std::vector<bool> used(n, false);
    for_injective_tuples(n, l, cur, used, [&](const std::vector<int>& t) {
      std::vector<MultiPoly> args;
      args.reserve(l);
      for (int i : t) args.push_back(coord[i]);
      MultiPoly v = apply_as_operator(eta, args);
      if (!v.is_zero()) inner.emplace(t, std::move(v));
    });
  }
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  for_injective_tuples(n, d, cur, used, [&](const std::vector<int>& t) {
    for (int s = 0; s < k; ++s) {
      std::vector<int> mid(t.begin() + s, t.begin() + s + l);
      auto it = inner.find(mid);
      if (it == inner.end()) continue;
      std::vector<MultiPoly> args;
      args.reserve(k);
      for (int p = 0; p < s; ++p) args.push_back(coord[t[p]]);
      args.push_back(it->second);
      for (int p = s + l; p < d; ++p) args.push_back(after[t[p]]);
      MultiPoly val = apply_as_operator(xi, args);
      if (val.is_zero()) continue;
      int sgn = parity_sign(static_cast<long>(k - 1 + s) * (l - 1));
      out.add_term(t, val.scaled(Cyclo(sgn)));
    }
  });
  return out;
}

Multivector extend_tilde(const Multivector& block, const FixedPointData& fd) {
  int n = fd.frame.rows();
  if (block.nvars() != n)
    throw std::invalid_argument("block does not match the frame dimension");
  for (const auto& [idx, f] : block.terms())
    for (const auto& [e, c] : f.terms())
      for (int v : fd.normal_idx)
        if (e[v] != 0)
          throw std::invalid_argument(
              "coefficient involves a normal coordinate, so the block has no "
              "constant extension");
  return to_ambient(block, fd);
}

std::vector<int> codim_two_elements(const Group* group) {
  if (group == nullptr) throw std::invalid_argument("null group");
  return group->codim2_set();
}

Multivector bivector_of_matrix(const Mat& p) {
  require_antisymmetric(p);
  int n = p.rows();
  Multivector out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!p.at(i, j).is_zero())
        out.add_term({i, j}, MultiPoly::constant(n, p.at(i, j)));
  return out;
}

Multivector poisson_of_symplectic(const Mat& omega) {
  require_antisymmetric(omega);
  if (omega.det().is_zero())
    throw std::invalid_argument("form must be invertible");
  return bivector_of_matrix(omega.inverse().scaled(Cyclo(-1)));
}

Multivector normal_poisson_block(const Mat& omega, const FixedPointData& fd) {
  int n = fd.frame.rows();
  if (omega.rows() != n || omega.cols() != n)
    throw std::invalid_argument("form does not match the frame dimension");
  require_antisymmetric(omega);
  Mat pulled = fd.frame.transpose() * omega * fd.frame;
  int c = fd.codim;
  Mat sub(c, c);
  for (int s = 0; s < c; ++s)
    for (int t = 0; t < c; ++t)
      sub.at(s, t) = pulled.at(fd.normal_idx[s], fd.normal_idx[t]);
  Mat inv = sub.inverse();
  Multivector fb(n, 2);
  for (int s = 0; s < c; ++s)
    for (int t = s + 1; t < c; ++t)
      if (!inv.at(s, t).is_zero())
        fb.add_term({fd.normal_idx[s], fd.normal_idx[t]},
                    MultiPoly::constant(n, -inv.at(s, t)));
  return to_ambient(fb, fd);
}

MultivectorSection BracketResult::projected_section() const {
  MultivectorSection out(group, degree);
  for (const auto& [e, comp] : components)
    if (!comp.projected.is_zero()) out.add_block(e, comp.projected);
  return out;
}

BracketResult cohomology_bracket(const MultivectorSection& xi,
                                 const MultivectorSection& eta,
                                 BracketRoute route, int max_arity) {
  const Group* g = xi.group();
  if (g == nullptr || eta.group() != g)
    throw std::invalid_argument("sections must share a group");
  if (!xi.is_invariant() || !eta.is_invariant())
    throw std::invalid_argument("bracket requires invariant sections");
  std::string why;
  if (!xi.in_model(&why) || !eta.in_model(&why))
    throw std::invalid_argument("bracket requires model sections: " + why);
  int k = xi.degree();
  int l = eta.degree();
  int d = k + l - 1;
  if (d < 0) d = 0;
  int cs = parity_sign(static_cast<long>(k - 1) * (l - 1));
  std::map<int, Multivector> ambient;
  if (route == BracketRoute::evaluator) {
    Cochain br = gerstenhaber_bracket(map_T(xi), map_T(eta));
    for (const auto& [e, mv] : map_L2(br, max_arity))
      if (!mv.is_zero()) ambient.emplace(e, mv.scaled(Cyclo(cs)));
  } else {
    Mat id = Mat::identity(g->dim());
    auto accumulate = [&](int a, const Multivector& ba, int b,
                          const Multivector& bb, const Cyclo& scale) {
      if (g->fixed_data(a).codim + g->fixed_data(b).codim !=
          g->fixed_data(g->mul(a, b)).codim) {
        if (!g->is_abelian())
          throw std::runtime_error(
              "closed-form route unavailable: blocks at " + g->name_of(a) +
              " and " + g->name_of(b) +
              " meet off transversality; use the evaluator route");
        return;
      }
      Multivector term = twisted_prelie(extend_tilde(ba, g->fixed_data(a)),
                                        extend_tilde(bb, g->fixed_data(b)), id);
      if (term.is_zero()) return;
      int e = g->mul(a, b);
      auto it = ambient.try_emplace(e, Multivector(g->dim(), d)).first;
      it->second += term.scaled(scale);
      if (it->second.is_zero()) ambient.erase(it);
    };
    for (const auto& [a, ba] : xi.blocks())
      for (const auto& [b, bb] : eta.blocks()) {
        accumulate(a, ba, b, bb, Cyclo(1));
        accumulate(b, bb, a, ba, Cyclo(-cs));
      }
  }
  BracketResult res;
  res.group = g;
  res.degree = d;
  for (const auto& [e, amb] : ambient) {
    const FixedPointData& fd = g->fixed_data(e);
    BracketComponent comp;
    comp.raw = to_frame(amb, fd);
    comp.restricted = restrict_to_fixed(comp.raw, fd);
    comp.projected = project_to_normal_volume(comp.restricted, fd);
    res.components.emplace(e, std::move(comp));
  }
  return res;
}

namespace {

void validate_candidate(const PoissonCandidate& cand) {
  const Group* g = cand.group;
  if (g == nullptr) throw std::invalid_argument("candidate has no group");
  if (!g->is_reduced())
    throw std::runtime_error("the action fixes an open set off the identity");
  int n = g->dim();
  if (cand.pi.nvars() != n || cand.pi.degree() != 2)
    throw std::invalid_argument("pi must be a bivector on the ambient space");
  for (const auto& [e, lam] : cand.lambdas) {
    if (e < 0 || e >= g->size())
      throw std::invalid_argument("support key is not a group element");
    if (g->fixed_data(e).codim != 2)
      throw std::invalid_argument("support key " + g->name_of(e) +
                                  " does not move a plane");
    if (lam.nvars() != n || lam.degree() != 2)
      throw std::invalid_argument("block at " + g->name_of(e) +
                                  " has the wrong shape");
  }
}

}  // namespace

PoissonCandidate make_poisson_candidate(const Group* group, Multivector pi,
                                        std::map<int, Multivector> lambdas) {
  PoissonCandidate cand;
  cand.group = group;
  cand.pi = std::move(pi);
  cand.lambdas = std::move(lambdas);
  validate_candidate(cand);
  return cand;
}

PoissonCandidate symplectic_candidate(const Group* group, const Mat& omega,
                                      const std::map<int, Cyclo>& weights,
                                      const Cyclo& t) {
  if (group == nullptr) throw std::invalid_argument("null group");
  int n = group->dim();
  if (omega.rows() != n || omega.cols() != n)
    throw std::invalid_argument("form does not match the group dimension");
  require_antisymmetric(omega);
  if (omega.det().is_zero())
    throw std::invalid_argument("form must be invertible");
  for (int h = 0; h < group->size(); ++h)
    if (group->mat(h).transpose() * omega * group->mat(h) != omega)
      throw std::invalid_argument("form is not preserved by " +
                                  group->name_of(h));
  std::vector<int> planes = group->codim2_set();
  std::map<int, Multivector> lambdas;
  for (const auto& [e, c] : weights) {
    if (std::find(planes.begin(), planes.end(), e) == planes.end())
      throw std::invalid_argument("weight key does not move a plane");
    if (c.is_zero()) continue;
    lambdas.emplace(
        e, normal_poisson_block(omega, group->fixed_data(e)).scaled(c));
  }
  return make_poisson_candidate(group, poisson_of_symplectic(omega).scaled(t),
                                std::move(lambdas));
}

MultivectorSection candidate_section(const PoissonCandidate& cand) {
  validate_candidate(cand);
  const Group* g = cand.group;
  MultivectorSection sec(g, 2);
  sec.add_block(g->identity(),
                to_frame(cand.pi, g->fixed_data(g->identity())));
  for (const auto& [e, lam] : cand.lambdas)
    sec.add_block(e, to_frame(lam, g->fixed_data(e)));
  return sec;
}

PoissonVerdict poisson_check(const PoissonCandidate& cand,
                             bool evaluator_diagnostics) {
  validate_candidate(cand);
  const Group* g = cand.group;
  int n = g->dim();
  Multivector zero2(n, 2);
  Multivector zero3(n, 3);
  PoissonVerdict v;
  MultivectorSection sec = candidate_section(cand);

  bool inv_ok = sec.is_invariant();
  {
    PoissonCondition c;
    c.label = "invariance";
    c.ok = inv_ok;
    c.raw = zero2;
    c.restricted = zero2;
    c.projected = zero2;
    if (!c.ok) c.note = "the candidate section transforms nontrivially";
    v.conditions.push_back(std::move(c));
  }

  std::map<int, bool> model_ok;
  for (const auto& [e, lam] : cand.lambdas) {
    const FixedPointData& fd = g->fixed_data(e);
    Multivector fb = to_frame(lam, fd);
    MultivectorSection single(g, 2);
    single.add_block(e, fb);
    std::string why;
    bool ok = single.in_model(&why);
    model_ok[e] = ok;
    PoissonCondition c;
    c.label = "model[" + g->name_of(e) + "]";
    c.ok = ok;
    c.raw = fb;
    c.restricted = restrict_to_fixed(fb, fd);
    c.projected = project_to_normal_volume(c.restricted, fd);
    if (!ok) c.note = why;
    v.conditions.push_back(std::move(c));
  }

  {
    PoissonCondition c;
    c.label = "flat[" + g->name_of(g->identity()) + "]";
    c.raw = schouten_bracket(cand.pi, cand.pi);
    c.restricted = c.raw;
    c.projected = c.raw;
    c.ok = c.raw.is_zero();
    if (!c.ok) c.note = "the identity bivector does not self-commute";
    v.conditions.push_back(std::move(c));
  }

  std::map<int, Multivector> flat_projected;
  for (const auto& [e, lam] : cand.lambdas) {
    const FixedPointData& fd = g->fixed_data(e);
    PoissonCondition c;
    c.label = "flat[" + g->name_of(e) + "]";
    if (!model_ok[e]) {
      c.ok = false;
      c.raw = zero3;
      c.restricted = zero3;
      c.projected = zero3;
      c.note = "not evaluated: the block is outside the model";
    } else {
      Multivector ext = extend_tilde(to_frame(lam, fd), fd);
      Multivector br = schouten_bracket(cand.pi, ext);
      c.raw = to_frame(br, fd);
      c.restricted = restrict_to_fixed(c.raw, fd);
      c.projected = project_to_normal_volume(c.restricted, fd);
      c.ok = c.projected.is_zero();
      if (!c.ok) c.note = "the bracket with pi survives the projection";
    }
    flat_projected[e] = c.projected;
    v.conditions.push_back(std::move(c));
  }

  bool models_ok = true;
  for (const auto& [e, ok] : model_ok) models_ok = models_ok && ok;

  if (evaluator_diagnostics && inv_ok && models_ok) {
    BracketResult full =
        cohomology_bracket(sec, sec, BracketRoute::evaluator);
    for (int e = 0; e < g->size(); ++e) {
      BracketComponent comp;
      auto it = full.components.find(e);
      if (it != full.components.end()) {
        comp = it->second;
      } else {
        comp.raw = zero3;
        comp.restricted = zero3;
        comp.projected = zero3;
      }
      Multivector expected = zero3;
      if (e == g->identity()) {
        const FixedPointData& fd = g->fixed_data(e);
        Multivector fr = to_frame(schouten_bracket(cand.pi, cand.pi), fd);
        expected = project_to_normal_volume(restrict_to_fixed(fr, fd), fd);
      } else if (auto fit = flat_projected.find(e);
                 fit != flat_projected.end()) {
        expected = fit->second.scaled(Cyclo(2));
      }
      PoissonCondition c;
      c.label = "self[" + g->name_of(e) + "]";
      c.ok = comp.projected == expected;
      c.raw = comp.raw;
      c.restricted = comp.restricted;
      c.projected = comp.projected;
      if (!c.ok)
        c.note = "the self-bracket disagrees with the assembled conditions";
      else if (!c.raw.is_zero() && c.projected.is_zero())
        c.note = "nonzero value misses the normal volume; "
                 "the component is cohomologically trivial";
      v.conditions.push_back(std::move(c));
    }
  }

  v.ok = true;
  for (const auto& c : v.conditions)
    if (!c.ok) {
      if (v.ok) v.detail = c.label + (c.note.empty() ? "" : ": " + c.note);
      v.ok = false;
    }
  return v;
}

MultivectorSection dkappa(const PoissonCandidate& kappa,
                          const MultivectorSection& phi, BracketRoute route) {
  PoissonVerdict v = poisson_check(kappa);
  if (!v.ok)
    throw std::invalid_argument("kappa is not a Poisson structure: " +
                                v.detail);
  return cohomology_bracket(candidate_section(kappa), phi, route)
      .projected_section();
}

namespace {

// Linear coordinates on model sections of a fixed degree: one slot per
// (element, wedge, coefficient monomial) with the wedge containing the
// element's normal volume and the monomial supported on its fixed
// coordinates with total degree at most the window.
struct CoordScheme {
  const Group* group = nullptr;
  int degree = 0;
  int window = 0;
  std::vector<std::tuple<int, std::vector<int>, Expo>> keys;
  std::map<int, std::map<std::vector<int>, std::map<Expo, int>>> index;

  int size() const { return static_cast<int>(keys.size()); }
};

CoordScheme build_scheme(const Group* g, int degree, int window) {
  CoordScheme sc;
  sc.group = g;
  sc.degree = degree;
  sc.window = window;
  int n = g->dim();
  for (int e = 0; e < g->size(); ++e) {
    const FixedPointData& fd = g->fixed_data(e);
    int nf = static_cast<int>(fd.fixed_idx.size());
    int m = degree - fd.codim;
    if (m < 0 || m > nf) continue;
    std::vector<std::vector<int>> wedges;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(pick.size()) == m) {
        std::vector<int> w = fd.normal_idx;
        for (int t : pick) w.push_back(fd.fixed_idx[t]);
        std::sort(w.begin(), w.end());
        wedges.push_back(std::move(w));
        return;
      }
      for (int t = start; t < nf; ++t) {
        pick.push_back(t);
        rec(t + 1);
        pick.pop_back();
      }
    };
    rec(0);
    std::vector<Expo> monos = monomials_up_to(nf, window);
    for (const auto& w : wedges)
      for (const Expo& me : monos) {
        Expo wide(n, 0);
        for (int t = 0; t < nf; ++t) wide[fd.fixed_idx[t]] = me[t];
        sc.index[e][w][wide] = sc.size();
        sc.keys.emplace_back(e, w, wide);
      }
  }
  return sc;
}

std::vector<Cyclo> to_coords(const CoordScheme& sc,
                             const MultivectorSection& s) {
  std::vector<Cyclo> out(sc.size());
  for (const auto& [e, blk] : s.blocks()) {
    auto eit = sc.index.find(e);
    if (eit == sc.index.end())
      throw std::invalid_argument("section does not fit the coordinate scheme");
    for (const auto& [idx, f] : blk.terms()) {
      auto wit = eit->second.find(idx);
      if (wit == eit->second.end())
        throw std::invalid_argument(
            "section does not fit the coordinate scheme");
      for (const auto& [me, c] : f.terms()) {
        auto mit = wit->second.find(me);
        if (mit == wit->second.end()) {
          int total = 0;
          for (int d : me) total += d;
          if (total > sc.window)
            throw std::invalid_argument(
                "coefficient degree escapes the window; increase the degree "
                "bound");
          throw std::invalid_argument(
              "section does not fit the coordinate scheme");
        }
        out[mit->second] = c;
      }
    }
  }
  return out;
}

MultivectorSection from_coords(const CoordScheme& sc,
                               const std::vector<Cyclo>& v) {
  int n = sc.group->dim();
  std::map<int, Multivector> blocks;
  for (int j = 0; j < sc.size(); ++j) {
    if (v[j].is_zero()) continue;
    const auto& [e, w, me] = sc.keys[j];
    auto it = blocks.try_emplace(e, Multivector(n, sc.degree)).first;
    it->second.add_term(w, MultiPoly::monomial(n, me, v[j]));
  }
  MultivectorSection out(sc.group, sc.degree);
  for (const auto& [e, mv] : blocks) out.add_block(e, mv);
  return out;
}

// Columns spanning the invariant sections inside the scheme, in reduced
// column form.
Mat invariant_basis(const CoordScheme& sc) {
  Mat cols(sc.size(), sc.size());
  for (int j = 0; j < sc.size(); ++j) {
    std::vector<Cyclo> unit(sc.size());
    unit[j] = Cyclo(1);
    std::vector<Cyclo> avg = to_coords(sc, from_coords(sc, unit).averaged());
    for (int i = 0; i < sc.size(); ++i) cols.at(i, j) = avg[i];
  }
  return column_reduced(cols);
}

}  // namespace

CohomologyReport poisson_cohomology_h2(const PoissonCandidate& kappa,
                                       int degree_bound) {
  if (degree_bound < 0)
    throw std::invalid_argument("degree bound must be nonnegative");
  PoissonVerdict verdict = poisson_check(kappa);
  if (!verdict.ok)
    throw std::invalid_argument("kappa is not a Poisson structure: " +
                                verdict.detail);
  const Group* g = kappa.group;
  int n = g->dim();
  auto is_constant = [](const Multivector& mv) {
    for (const auto& [idx, f] : mv.terms())
      if (f.total_degree() > 0) return false;
    return true;
  };
  if (!is_constant(kappa.pi))
    throw std::invalid_argument(
        "cohomology computation requires constant symplectic data");
  for (const auto& [e, lam] : kappa.lambdas)
    if (!is_constant(lam))
      throw std::invalid_argument(
          "cohomology computation requires constant symplectic data");
  Mat pmat(n, n);
  for (const auto& [idx, f] : kappa.pi.terms()) {
    Cyclo c = f.constant_term();
    pmat.at(idx[0], idx[1]) = c;
    pmat.at(idx[1], idx[0]) = -c;
  }
  if (pmat.det().is_zero())
    throw std::invalid_argument(
        "cohomology computation requires an invertible identity bivector");

  MultivectorSection ksec = candidate_section(kappa);
  int window = degree_bound;
  CoordScheme sc1 = build_scheme(g, 1, window + 1);
  CoordScheme sc2 = build_scheme(g, 2, window);
  CoordScheme sc3 = build_scheme(g, 3, window);
  Mat inv1 = invariant_basis(sc1);
  Mat inv2 = invariant_basis(sc2);

  auto dsec = [&](const MultivectorSection& s) {
    return cohomology_bracket(ksec, s, BracketRoute::evaluator)
        .projected_section();
  };
  auto col_of = [](const Mat& m, int j) {
    std::vector<Cyclo> c(m.rows());
    for (int i = 0; i < m.rows(); ++i) c[i] = m.at(i, j);
    return c;
  };

  Mat d2(sc3.size(), inv2.cols());
  for (int j = 0; j < inv2.cols(); ++j) {
    std::vector<Cyclo> out = to_coords(sc3, dsec(from_coords(sc2, col_of(inv2, j))));
    for (int i = 0; i < sc3.size(); ++i) d2.at(i, j) = out[i];
  }
  std::vector<std::vector<Cyclo>> kern = kernel_basis(d2);

  Mat d1(sc2.size(), inv1.cols());
  for (int j = 0; j < inv1.cols(); ++j) {
    std::vector<Cyclo> out = to_coords(sc2, dsec(from_coords(sc1, col_of(inv1, j))));
    for (int i = 0; i < sc2.size(); ++i) d1.at(i, j) = out[i];
  }

  CohomologyReport rep;
  rep.truncation_degree = degree_bound;
  rep.cocycle_dim = static_cast<int>(kern.size());
  rep.coboundary_rank = d1.rank();
  rep.dimension = rep.cocycle_dim - rep.coboundary_rank;

  // Representatives: extend the coboundary space one cocycle at a time,
  // preferring the unit normal-volume sections of the plane elements.
  std::vector<std::vector<Cyclo>> chosen;
  auto extends_rank = [&](const std::vector<Cyclo>& col) {
    int extra = static_cast<int>(chosen.size()) + 1;
    Mat m(sc2.size(), d1.cols() + extra);
    for (int c = 0; c < d1.cols(); ++c)
      for (int i = 0; i < sc2.size(); ++i) m.at(i, c) = d1.at(i, c);
    for (int c = 0; c < static_cast<int>(chosen.size()); ++c)
      for (int i = 0; i < sc2.size(); ++i)
        m.at(i, d1.cols() + c) = chosen[c][i];
    for (int i = 0; i < sc2.size(); ++i)
      m.at(i, d1.cols() + extra - 1) = col[i];
    return m.rank() ==
           rep.coboundary_rank + static_cast<int>(chosen.size()) + 1;
  };
  std::vector<MultivectorSection> reps;
  auto try_candidate = [&](const std::vector<Cyclo>& col,
                           const MultivectorSection& s) {
    if (static_cast<int>(reps.size()) >= rep.dimension) return;
    if (extends_rank(col)) {
      chosen.push_back(col);
      reps.push_back(s);
    }
  };
  for (int e : g->codim2_set()) {
    const FixedPointData& fd = g->fixed_data(e);
    Multivector unit(n, 2);
    unit.add_term(fd.normal_idx, MultiPoly::constant(n, Cyclo(1)));
    MultivectorSection s(g, 2);
    s.add_block(e, unit);
    if (!s.is_invariant()) continue;
    if (!dsec(s).is_zero()) continue;
    try_candidate(to_coords(sc2, s), s);
  }
  for (const auto& z : kern) {
    if (static_cast<int>(reps.size()) >= rep.dimension) break;
    std::vector<Cyclo> col(sc2.size());
    for (int j = 0; j < inv2.cols(); ++j) {
      if (z[j].is_zero()) continue;
      for (int i = 0; i < sc2.size(); ++i)
        col[i] = col[i] + inv2.at(i, j) * z[j];
    }
    try_candidate(col, from_coords(sc2, col));
  }
  if (static_cast<int>(reps.size()) != rep.dimension)
    throw std::logic_error("representative extraction fell short");
  rep.representatives = std::move(reps);
  return rep;
}

}  // namespace skewpois
