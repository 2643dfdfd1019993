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

#include "skewpois/sra.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "skewpois/poisson.hpp"
#include "skewpois/quasi_iso.hpp"

namespace skewpois {

SRALetter gen_letter(int i) { return SRALetter{false, i}; }

SRALetter group_letter(int elem) { return SRALetter{true, elem}; }

SRAWord pbw_word(const Expo& mono, int elem) {
  SRAWord out;
  for (size_t i = 0; i < mono.size(); ++i)
    for (int r = 0; r < mono[i]; ++r) out.push_back(gen_letter((int)i));
  if (elem != 0) out.push_back(group_letter(elem));
  return out;
}

namespace {

Cyclo bivector_entry(const Multivector& b, int i, int j) {
  if (i == j) return Cyclo(0);
  if (i < j) return b.coeff({i, j});
  return b.coeff({j, i}).scaled(Cyclo(-1));
}

}  // namespace

SRAContext SRAContext::build(const Group* group, const Mat& omega,
                             const Cyclo& t, const std::map<int, Cyclo>& c) {
  if (group == nullptr)
    throw std::invalid_argument("context needs a group");
  int n = group->dim();
  if (omega.rows() != n || omega.cols() != n)
    throw std::invalid_argument("form does not match the group dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(omega.at(i, j) + omega.at(j, i)).is_zero())
        throw std::invalid_argument("form is not antisymmetric");
  if (omega.det().is_zero())
    throw std::invalid_argument("form must be invertible");
  for (int h = 0; h < group->size(); ++h)
    if (group->mat(h).transpose() * omega * group->mat(h) != omega)
      throw std::invalid_argument("form is not preserved by " +
                                  group->name_of(h));
  std::vector<int> planes = group->codim2_set();
  for (const auto& [alpha, v] : c) {
    if (std::find(planes.begin(), planes.end(), alpha) == planes.end())
      throw std::invalid_argument("weight key does not move a plane");
    for (int h = 0; h < group->size(); ++h) {
      int conj = group->mul(group->mul(h, alpha), group->inv(h));
      auto it = c.find(conj);
      Cyclo w = it == c.end() ? Cyclo(0) : it->second;
      if (w != v)
        throw std::invalid_argument(
            "weights must be constant on conjugacy classes");
    }
  }

  SRAContext ctx;
  ctx.group_ = group;
  ctx.omega_ = omega;
  ctx.t_ = t;
  ctx.c_ = c;

  Mat pmat = omega.inverse().scaled(Cyclo(-1));
  std::map<int, Multivector> blocks;
  for (const auto& [alpha, v] : c) {
    if (v.is_zero()) continue;
    blocks.emplace(alpha,
                   normal_poisson_block(omega, group->fixed_data(alpha)));
  }
  ctx.table_.assign(n, std::vector<CrossedElt>(n, CrossedElt(group, n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      CrossedElt& k = ctx.table_[i][j];
      Cyclo scal = t * pmat.at(i, j);
      if (!scal.is_zero())
        k += CrossedElt::poly(group, MultiPoly::constant(n, scal));
      for (const auto& [alpha, blk] : blocks) {
        Cyclo w = ctx.c_.at(alpha) * bivector_entry(blk, i, j);
        if (!w.is_zero())
          k += CrossedElt::term(group, alpha, MultiPoly::constant(n, w));
      }
    }
  }
  return ctx;
}

const CrossedElt& SRAContext::kappa(int i, int j) const {
  if (group_ == nullptr)
    throw std::invalid_argument("context was not built");
  int n = group_->dim();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("generator index out of range");
  return table_[i][j];
}

void SRAContext::perturb_kappa(int i, int j, const CrossedElt& delta,
                               bool antisymmetrize) {
  if (group_ == nullptr)
    throw std::invalid_argument("context was not built");
  int n = group_->dim();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw std::invalid_argument("perturbation needs two distinct generators");
  if (delta.group() != group_ || delta.nvars() != n)
    throw std::invalid_argument("perturbation has the wrong context");
  for (const auto& [g, f] : delta.components())
    if (f.total_degree() > 0)
      throw std::invalid_argument("perturbation must take constant values");
  table_[i][j] += delta;
  if (antisymmetrize) table_[i][j - j + j] = table_[i][j];
  if (antisymmetrize) table_[j][i] -= delta;
}

NormalForm::NormalForm(const Group* group, int nvars)
    : group_(group), nvars_(nvars) {
  if (group == nullptr)
    throw std::invalid_argument("normal form needs a group");
  if (nvars < group->dim())
    throw std::invalid_argument("normal form needs the action variables");
}

void NormalForm::add(const Expo& mono, int elem, const Cyclo& coeff) {
  if (group_ == nullptr)
    throw std::invalid_argument("normal form has no context");
  if ((int)mono.size() != group_->dim())
    throw std::invalid_argument("monomial does not match the generators");
  if (elem < 0 || elem >= group_->size())
    throw std::invalid_argument("group element out of range");
  if (coeff.is_zero()) return;
  auto key = std::make_pair(mono, elem);
  auto [it, inserted] = triples_.emplace(key, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) triples_.erase(it);
  }
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  if (group_ == nullptr) {
    *this = o;
    return *this;
  }
  if (o.group_ == nullptr) return *this;
  if (o.group_ != group_)
    throw std::invalid_argument("normal forms live over different groups");
  for (const auto& [key, co] : o.triples_) add(key.first, key.second, co);
  return *this;
}

NormalForm NormalForm::scaled(const Cyclo& c) const {
  NormalForm out;
  out.group_ = group_;
  out.nvars_ = nvars_;
  if (c.is_zero()) return out;
  for (const auto& [key, co] : triples_) out.triples_.emplace(key, co * c);
  return out;
}

NormalForm NormalForm::slice(int k) const {
  NormalForm out;
  out.group_ = group_;
  out.nvars_ = nvars_;
  for (const auto& [key, co] : triples_) {
    int deg = std::accumulate(key.first.begin(), key.first.end(), 0);
    if (deg == k) out.triples_.emplace(key, co);
  }
  return out;
}

int NormalForm::top_degree() const {
  int top = -1;
  for (const auto& [key, co] : triples_) {
    int deg = std::accumulate(key.first.begin(), key.first.end(), 0);
    top = std::max(top, deg);
  }
  return top;
}

CrossedElt NormalForm::to_crossed() const {
  CrossedElt out(group_, nvars_);
  for (const auto& [key, co] : triples_) {
    Expo wide(nvars_, 0);
    std::copy(key.first.begin(), key.first.end(), wide.begin());
    out += CrossedElt::term(group_, key.second,
                            MultiPoly::monomial(nvars_, wide, co));
  }
  return out;
}

bool NormalForm::operator==(const NormalForm& o) const {
  return group_ == o.group_ && triples_ == o.triples_;
}

namespace {

// Words are memoized per top level call as integer strings: letters
// below the dimension are generators, the rest are group units shifted
// by the dimension.
using WordKey = std::vector<int>;

const NormalForm& norm_word(const SRAContext& ctx, const WordKey& w,
                            std::map<WordKey, NormalForm>& memo) {
  auto hit = memo.find(w);
  if (hit != memo.end()) return hit->second;
  const Group* g = ctx.group();
  int n = g->dim();

  size_t pos = w.size();
  for (size_t p = 0; p + 1 < w.size(); ++p) {
    bool agrp = w[p] >= n;
    bool bgrp = w[p + 1] >= n;
    if (agrp || (!bgrp && w[p] > w[p + 1])) {
      pos = p;
      break;
    }
  }

  NormalForm out(g, n);
  if (pos == w.size()) {
    Expo mono(n, 0);
    int elem = g->identity();
    for (int v : w) {
      if (v < n)
        ++mono[v];
      else
        elem = v - n;
    }
    out.add(mono, elem, Cyclo(1));
  } else {
    int a = w[pos];
    int b = w[pos + 1];
    auto splice = [&](std::initializer_list<int> mid) {
      WordKey next(w.begin(), w.begin() + pos);
      next.insert(next.end(), mid.begin(), mid.end());
      next.insert(next.end(), w.begin() + pos + 2, w.end());
      return next;
    };
    if (a >= n && b >= n) {
      out += norm_word(ctx, splice({n + g->mul(a - n, b - n)}), memo);
    } else if (a >= n) {
      const Mat& back = g->mat(g->inv(a - n));
      for (int m = 0; m < n; ++m) {
        Cyclo co = back.at(b, m);
        if (co.is_zero()) continue;
        out += norm_word(ctx, splice({m, a}), memo).scaled(co);
      }
    } else {
      out += norm_word(ctx, splice({b, a}), memo);
      for (const auto& [u, f] : ctx.kappa(a, b).components()) {
        Cyclo co = f.constant_term();
        if (co.is_zero()) continue;
        WordKey next = u == g->identity() ? splice({}) : splice({n + u});
        out += norm_word(ctx, next, memo).scaled(co);
      }
    }
  }
  auto [it, inserted] = memo.emplace(w, std::move(out));
  return it->second;
}

WordKey encode_word(const SRAContext& ctx, const SRAWord& word) {
  const Group* g = ctx.group();
  int n = g->dim();
  WordKey key;
  key.reserve(word.size());
  for (const SRALetter& l : word) {
    if (l.group) {
      if (l.index < 0 || l.index >= g->size())
        throw std::invalid_argument("group letter out of range");
      key.push_back(n + l.index);
    } else {
      if (l.index < 0 || l.index >= n)
        throw std::invalid_argument("generator letter out of range");
      key.push_back(l.index);
    }
  }
  return key;
}

}  // namespace

NormalForm normalize(const SRAContext& ctx, const SRAWord& word,
                     const Cyclo& coeff) {
  if (ctx.group() == nullptr)
    throw std::invalid_argument("context was not built");
  std::map<WordKey, NormalForm> memo;
  return norm_word(ctx, encode_word(ctx, word), memo).scaled(coeff);
}

namespace {

std::string word_str(const SRAContext& ctx, const WordKey& w) {
  int n = ctx.group()->dim();
  std::ostringstream os;
  for (size_t p = 0; p < w.size(); ++p) {
    if (p) os << " ";
    if (w[p] < n)
      os << "x" << (w[p] + 1);
    else
      os << "U[" << ctx.group()->name_of(w[p] - n) << "]";
  }
  return os.str();
}

NormalForm norm_items(const SRAContext& ctx,
                      const std::vector<std::pair<WordKey, Cyclo>>& items) {
  NormalForm acc(ctx.group(), ctx.group()->dim());
  std::map<WordKey, NormalForm> memo;
  for (const auto& [w, c] : items) acc += norm_word(ctx, w, memo).scaled(c);
  return acc;
}

// The two ways of starting on a descending generator pair inside a
// word: swap it, or replace it by the pairing value.
std::vector<std::pair<WordKey, Cyclo>> resolve_pair(const SRAContext& ctx,
                                                    const WordKey& w,
                                                    size_t pos) {
  int n = ctx.group()->dim();
  int a = w[pos];
  int b = w[pos + 1];
  std::vector<std::pair<WordKey, Cyclo>> items;
  WordKey swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  items.emplace_back(swapped, Cyclo(1));
  for (const auto& [u, f] : ctx.kappa(a, b).components()) {
    Cyclo co = f.constant_term();
    if (co.is_zero()) continue;
    WordKey next(w.begin(), w.begin() + pos);
    if (u != ctx.group()->identity()) next.push_back(n + u);
    next.insert(next.end(), w.begin() + pos + 2, w.end());
    items.emplace_back(next, co);
  }
  return items;
}

}  // namespace

SRAReport confluence_check(const SRAContext& ctx) {
  if (ctx.group() == nullptr)
    throw std::invalid_argument("context was not built");
  const Group* g = ctx.group();
  int n = g->dim();
  SRAReport report;
  auto mismatch = [&](const WordKey& w) {
    report.ok = false;
    report.witnesses.push_back(word_str(ctx, w) +
                               " resolves to different normal forms");
  };

  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        WordKey w = {k, j, i};
        std::vector<std::pair<WordKey, Cyclo>> left;
        for (auto& [tail, co] : resolve_pair(ctx, {k, j}, 0)) {
          WordKey full = tail;
          full.push_back(i);
          left.emplace_back(full, co);
        }
        std::vector<std::pair<WordKey, Cyclo>> right;
        for (auto& [tail, co] : resolve_pair(ctx, {j, i}, 0)) {
          WordKey full = {k};
          full.insert(full.end(), tail.begin(), tail.end());
          right.emplace_back(full, co);
        }
        if (norm_items(ctx, left) != norm_items(ctx, right)) mismatch(w);
      }
    }
  }

  for (int h = 0; h < g->size(); ++h) {
    const Mat& back = g->mat(g->inv(h));
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        WordKey w = {n + h, j, i};
        std::vector<std::pair<WordKey, Cyclo>> left;
        for (int m = 0; m < n; ++m) {
          Cyclo co = back.at(j, m);
          if (co.is_zero()) continue;
          left.emplace_back(WordKey{m, n + h, i}, co);
        }
        std::vector<std::pair<WordKey, Cyclo>> right;
        for (auto& [tail, co] : resolve_pair(ctx, {j, i}, 0)) {
          WordKey full = {n + h};
          full.insert(full.end(), tail.begin(), tail.end());
          right.emplace_back(full, co);
        }
        if (norm_items(ctx, left) != norm_items(ctx, right)) mismatch(w);
      }
    }
  }

  for (int h = 0; h < g->size(); ++h) {
    for (int u = 0; u < g->size(); ++u) {
      const Mat& back = g->mat(g->inv(u));
      for (int i = 0; i < n; ++i) {
        WordKey w = {n + h, n + u, i};
        std::vector<std::pair<WordKey, Cyclo>> left = {
            {WordKey{n + g->mul(h, u), i}, Cyclo(1)}};
        std::vector<std::pair<WordKey, Cyclo>> right;
        for (int m = 0; m < n; ++m) {
          Cyclo co = back.at(i, m);
          if (co.is_zero()) continue;
          right.emplace_back(WordKey{n + h, m, n + u}, co);
        }
        if (norm_items(ctx, left) != norm_items(ctx, right)) mismatch(w);
      }
    }
  }
  return report;
}

std::vector<CrossedElt> star_product(const SRAContext& ctx,
                                     const CrossedElt& f, const CrossedElt& g,
                                     int order, bool printed_exponent) {
  const Group* grp = ctx.group();
  if (grp == nullptr) throw std::invalid_argument("context was not built");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (f.group() != grp || g.group() != grp)
    throw std::invalid_argument("operands live in a different crossed product");
  int n = grp->dim();
  int nv = std::max(f.nvars(), n);
  if ((!f.is_zero() && f.nvars() != nv) || (!g.is_zero() && g.nvars() != nv))
    if (f.nvars() != g.nvars())
      throw std::invalid_argument("operands live in different variable rings");
  nv = std::max({f.nvars(), g.nvars(), n});

  std::vector<CrossedElt> out(order + 1, CrossedElt(grp, nv));
  std::map<WordKey, NormalForm> memo;
  for (const auto& [gf, pf] : f.components()) {
    for (const auto& [ef, cf] : pf.terms()) {
      Expo genf(ef.begin(), ef.begin() + n);
      int i = std::accumulate(genf.begin(), genf.end(), 0);
      WordKey wf = encode_word(ctx, pbw_word(genf, gf));
      for (const auto& [gg, pg] : g.components()) {
        for (const auto& [eg, cg] : pg.terms()) {
          Expo geng(eg.begin(), eg.begin() + n);
          int j = std::accumulate(geng.begin(), geng.end(), 0);
          WordKey w = wf;
          for (int v : encode_word(ctx, pbw_word(geng, gg))) w.push_back(v);
          NormalForm nf = norm_word(ctx, w, memo).scaled(cf * cg);
          for (const auto& [key, co] : nf.triples()) {
            int k = std::accumulate(key.first.begin(), key.first.end(), 0);
            int drop = i + j - k;
            int slice = drop;
            if (!printed_exponent) {
              if (drop % 2 != 0)
                throw std::logic_error("filtration drop is odd");
              slice = drop / 2;
            }
            if (slice > order) continue;
            Expo wide(nv, 0);
            std::copy(key.first.begin(), key.first.end(), wide.begin());
            for (int v = n; v < nv; ++v) wide[v] = ef[v] + eg[v];
            out[slice] += CrossedElt::term(grp, key.second,
                                           MultiPoly::monomial(nv, wide, co));
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<CrossedElt> star_list(const SRAContext& ctx,
                                  const std::vector<CrossedElt>& xs,
                                  const std::vector<CrossedElt>& ys,
                                  int order) {
  std::vector<CrossedElt> out(order + 1,
                              CrossedElt(ctx.group(), ctx.group()->dim()));
  for (int p = 0; p < (int)xs.size() && p <= order; ++p) {
    if (xs[p].is_zero()) continue;
    for (int q = 0; q < (int)ys.size() && p + q <= order; ++q) {
      if (ys[q].is_zero()) continue;
      std::vector<CrossedElt> part =
          star_product(ctx, xs[p], ys[q], order - p - q);
      for (int w = 0; w < (int)part.size(); ++w) out[p + q + w] += part[w];
    }
  }
  return out;
}

void sweep_parallel(long count, const std::function<void(long)>& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw < 2 || count < 256) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < hw; ++w) {
    pool.emplace_back([&, w]() {
      for (long i = w; i < count; i += hw) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

SRAReport associativity_check(const SRAContext& ctx, int order,
                              int degree_bound) {
  if (ctx.group() == nullptr)
    throw std::invalid_argument("context was not built");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (degree_bound < 0)
    throw std::invalid_argument("degree bound must be nonnegative");
  const Group* g = ctx.group();
  int n = g->dim();
  std::vector<CrossedElt> basis;
  for (const Expo& mono : monomials_up_to(n, degree_bound))
    for (int e = 0; e < g->size(); ++e)
      basis.push_back(
          CrossedElt::term(g, e, MultiPoly::monomial(n, mono, Cyclo(1))));

  long m = (long)basis.size();
  SRAReport report;
  std::mutex guard;
  sweep_parallel(m * m * m, [&](long idx) {
    const CrossedElt& a = basis[idx / (m * m)];
    const CrossedElt& b = basis[(idx / m) % m];
    const CrossedElt& c = basis[idx % m];
    std::vector<CrossedElt> lhs =
        star_list(ctx, star_product(ctx, a, b, order), {c}, order);
    std::vector<CrossedElt> rhs =
        star_list(ctx, {a}, star_product(ctx, b, c, order), order);
    for (int s = 0; s <= order; ++s) {
      if (lhs[s] == rhs[s]) continue;
      std::lock_guard<std::mutex> lk(guard);
      report.ok = false;
      report.witnesses.push_back("(" + a.str() + ", " + b.str() + ", " +
                                 c.str() + ") differs at hbar^" +
                                 std::to_string(s));
    }
  });
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

Cochain quantization_cochain(const SRAContext& ctx, int slice) {
  if (ctx.group() == nullptr)
    throw std::invalid_argument("context was not built");
  if (slice < 0) throw std::invalid_argument("slice must be nonnegative");
  SRAContext held = ctx;
  return make_function_cochain(
      ctx.group(), 2,
      [held, slice](const std::vector<CrossedElt>& args) {
        return star_product(held, args[0], args[1], slice)[slice];
      });
}

C1Report verify_C1(const SRAContext& ctx) {
  C1Report rep;
  rep.computed = map_L(quantization_cochain(ctx, 1));
  PoissonCandidate cand =
      symplectic_candidate(ctx.group(), ctx.omega(), ctx.weights(), ctx.t());
  rep.expected = candidate_section(cand).scaled(Cyclo(Rat(1, 2)));
  rep.ok = rep.computed == rep.expected;
  return rep;
}

}  // namespace skewpois
