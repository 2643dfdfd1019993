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

#include "skewpois/cochain.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace skewpois {

class CochainNode {
 public:
  CochainNode(const Group* group, int arity) : group_(group), arity_(arity) {
    if (group == nullptr) throw std::invalid_argument("cochain needs a group");
    if (arity < 0) throw std::invalid_argument("cochain arity is negative");
  }
  virtual ~CochainNode() = default;

  const Group* group() const { return group_; }
  int arity() const { return arity_; }
  virtual CrossedElt eval(const std::vector<CrossedElt>& args) const = 0;

 private:
  const Group* group_;
  int arity_;
};

namespace {

// Argument of a base-algebra cochain: must be supported at the identity.
MultiPoly base_part(const Group* group, const CrossedElt& a) {
  for (const auto& [g, f] : a.components())
    if (g != group->identity())
      throw std::invalid_argument(
          "cochain argument must lie in the base algebra");
  return a.component_at(group->identity());
}

CrossedElt extend_crossed(const CrossedElt& a, int nvars) {
  if (a.nvars() == nvars) return a;
  CrossedElt out(a.group(), nvars);
  for (const auto& [g, f] : a.components()) out.add_component(g, f.extended(nvars));
  return out;
}

int args_nvars(const Group* group, const std::vector<CrossedElt>& args) {
  if (args.empty()) return group->dim();
  return args[0].nvars();
}

class ZeroNode : public CochainNode {
 public:
  ZeroNode(const Group* group, int arity) : CochainNode(group, arity) {}
  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    return CrossedElt(group(), args_nvars(group(), args));
  }
};

class ConstantNode : public CochainNode {
 public:
  ConstantNode(const Group* group, CrossedElt value)
      : CochainNode(group, 0), value_(std::move(value)) {}
  CrossedElt eval(const std::vector<CrossedElt>&) const override {
    return value_;
  }

 private:
  CrossedElt value_;
};

class IdentityNode : public CochainNode {
 public:
  explicit IdentityNode(const Group* group) : CochainNode(group, 1) {}
  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    return args[0];
  }
};

class MultiplicationNode : public CochainNode {
 public:
  explicit MultiplicationNode(const Group* group) : CochainNode(group, 2) {}
  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    return args[0] * args[1];
  }
};

class FunctionNode : public CochainNode {
 public:
  FunctionNode(const Group* group, int arity,
               std::function<CrossedElt(const std::vector<CrossedElt>&)> fn)
      : CochainNode(group, arity), fn_(std::move(fn)) {
    if (!fn_) throw std::invalid_argument("function cochain needs a callable");
  }
  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    return fn_(args);
  }

 private:
  std::function<CrossedElt(const std::vector<CrossedElt>&)> fn_;
};

class PolyDiffNode : public CochainNode {
 public:
  PolyDiffNode(const Group* group, int tag, MultiPoly coeff,
               std::vector<Expo> orders)
      : CochainNode(group, static_cast<int>(orders.size())),
        tag_(tag),
        coeff_(std::move(coeff)),
        orders_(std::move(orders)) {
    if (tag_ < 0 || tag_ >= group->size())
      throw std::invalid_argument("group tag out of range");
    if (coeff_.nvars() != group->dim())
      throw std::invalid_argument("coefficient has the wrong variable count");
    for (const Expo& e : orders_)
      if (static_cast<int>(e.size()) != group->dim())
        throw std::invalid_argument("derivative orders have the wrong width");
  }

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int nv = args_nvars(group(), args);
    MultiPoly prod = coeff_.extended(nv);
    for (size_t t = 0; t < orders_.size() && !prod.is_zero(); ++t) {
      MultiPoly f = base_part(group(), args[t]);
      for (int i = 0; i < group()->dim(); ++i)
        for (int k = 0; k < orders_[t][i]; ++k) f = f.derivative(i);
      prod = prod * f;
    }
    CrossedElt out(group(), nv);
    out.add_component(tag_, prod);
    return out;
  }

 private:
  int tag_;
  MultiPoly coeff_;
  std::vector<Expo> orders_;
};

class SumNode : public CochainNode {
 public:
  SumNode(Cochain a, Cochain b)
      : CochainNode(a.group(), a.arity()), a_(std::move(a)), b_(std::move(b)) {
    if (a_.group() != b_.group())
      throw std::invalid_argument("mismatched algebra contexts");
    if (a_.arity() != b_.arity())
      throw std::invalid_argument("mismatched cochain arities");
  }
  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    return a_.node()->eval(args) + b_.node()->eval(args);
  }

 private:
  Cochain a_, b_;
};

class ScaledNode : public CochainNode {
 public:
  ScaledNode(Cochain inner, Cyclo s)
      : CochainNode(inner.group(), inner.arity()),
        inner_(std::move(inner)),
        s_(std::move(s)) {}
  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    return inner_.node()->eval(args).scaled(s_);
  }

 private:
  Cochain inner_;
  Cyclo s_;
};

class TwistedNode : public CochainNode {
 public:
  TwistedNode(const Group* group, int g, const FixedPointData& fd)
      : CochainNode(group, fd.codim), g_(g), fd_(fd) {
    int l = fd.codim;
    if (l < 1)
      throw std::invalid_argument(
          "divided difference needs at least one moved direction");
    if (l > 8) throw std::invalid_argument("moved block too large");
    for (int j : fd.normal_idx) eps_.push_back(fd.eigs[j].inverse());
    Cyclo denom(1);
    for (const Cyclo& e : eps_) denom *= Cyclo(1) - e;
    inv_denom_ = denom.inverse();
    Rat lf(1);
    for (int t = 2; t <= l; ++t) lf /= t;
    inv_lfact_ = Cyclo(lf);
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sign = 1;
      for (int a = 0; a < l; ++a)
        for (int b = a + 1; b < l; ++b)
          if (perm[a] > perm[b]) sign = -sign;
      perms_.emplace_back(perm, sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int l = arity();
    int nv = args_nvars(group(), args);
    std::vector<std::vector<std::pair<Expo, Cyclo>>> terms(l);
    for (int t = 0; t < l; ++t) {
      MultiPoly f = poly_substitute(base_part(group(), args[t]), fd_.frame);
      for (const auto& [e, c] : f.terms()) terms[t].emplace_back(e, c);
      if (terms[t].empty()) return CrossedElt(group(), nv);
    }

    Cyclo one(1);
    MultiPoly acc(nv);
    std::vector<size_t> pick(l, 0);
    std::vector<std::vector<Cyclo>> pw(l, std::vector<Cyclo>(l));
    while (true) {
      // Eigenvalue powers of this monomial tuple, per slot and moved
      // coordinate.
      for (int t = 0; t < l; ++t) {
        const Expo& e = terms[t][pick[t]].first;
        for (int j = 0; j < l; ++j)
          pw[t][j] = eps_[j].pow(e[fd_.normal_idx[j]]);
      }

      Cyclo total(0);
      std::vector<bool> in_set(l);
      for (const auto& [perm, sign] : perms_) {
        std::fill(in_set.begin(), in_set.end(), false);
        Cyclo prod = sign > 0 ? Cyclo(1) : Cyclo(-1);
        bool dead = false;
        for (int t = 0; t < l; ++t) {
          const Cyclo& step = pw[t][perm[t]];
          if (step == one) {
            dead = true;
            break;
          }
          Cyclo before(1);
          for (int j = 0; j < l; ++j)
            if (in_set[j]) before *= pw[t][j];
          prod *= before * (one - step);
          in_set[perm[t]] = true;
        }
        if (!dead) total += prod;
      }

      if (!total.is_zero()) {
        Expo esum(nv, 0);
        Cyclo coeff = total * inv_denom_ * inv_lfact_;
        for (int t = 0; t < l; ++t) {
          const auto& [e, c] = terms[t][pick[t]];
          for (int i = 0; i < nv; ++i) esum[i] += e[i];
          coeff *= c;
        }
        for (int j = 0; j < l; ++j) {
          if (--esum[fd_.normal_idx[j]] < 0)
            throw std::logic_error("twisted cocycle: exact division failed");
        }
        acc.add_term(esum, coeff);
      }

      int p = l - 1;
      while (p >= 0 && pick[p] + 1 == terms[p].size()) pick[p--] = 0;
      if (p < 0) break;
      ++pick[p];
    }

    CrossedElt out(group(), nv);
    out.add_component(g_, poly_substitute(acc, fd_.frame_inv));
    return out;
  }

 private:
  int g_;
  FixedPointData fd_;
  std::vector<Cyclo> eps_;
  Cyclo inv_denom_;
  Cyclo inv_lfact_;
  std::vector<std::pair<std::vector<int>, int>> perms_;
};

class SharpNode : public CochainNode {
 public:
  SharpNode(const Group* group, int g, const FixedPointData& fd,
            const Multivector& tangential)
      : CochainNode(group, tangential.degree() + fd.codim),
        g_(g),
        ambient_(to_ambient(tangential, fd)),
        mdeg_(tangential.degree()) {
    for (const auto& [idx, f] : tangential.terms())
      for (int i : idx)
        if (std::find(fd.fixed_idx.begin(), fd.fixed_idx.end(), i) ==
            fd.fixed_idx.end())
          throw std::invalid_argument(
              "tangential part uses a moved direction");
    if (fd.codim > 0) omega_ = Cochain(std::make_shared<TwistedNode>(group, g, fd));
  }

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int nv = args_nvars(group(), args);
    std::vector<MultiPoly> head;
    for (int t = 0; t < mdeg_; ++t)
      head.push_back(base_part(group(), args[t]));
    MultiPoly left = apply_as_operator(ambient_, head);
    if (left.nvars() < nv) left = left.extended(nv);
    MultiPoly right = MultiPoly::constant(nv, Cyclo(1));
    if (!omega_.empty()) {
      std::vector<CrossedElt> tail(args.begin() + mdeg_, args.end());
      right = omega_.node()->eval(tail).component_at(g_);
    }
    CrossedElt out(group(), nv);
    out.add_component(g_, left * right);
    return out;
  }

 private:
  int g_;
  Multivector ambient_;
  int mdeg_;
  Cochain omega_;
};

class DifferentialNode : public CochainNode {
 public:
  explicit DifferentialNode(Cochain inner)
      : CochainNode(inner.group(), inner.arity() + 1),
        inner_(std::move(inner)) {}

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int k = inner_.arity();
    int nv = args_nvars(group(), args);
    std::vector<CrossedElt> head(args.begin() + 1, args.end());
    CrossedElt out =
        args[0] * extend_crossed(inner_.node()->eval(head), nv);
    for (int i = 1; i <= k; ++i) {
      std::vector<CrossedElt> merged;
      merged.reserve(k);
      for (int t = 0; t < i - 1; ++t) merged.push_back(args[t]);
      merged.push_back(args[i - 1] * args[i]);
      for (int t = i + 1; t <= k; ++t) merged.push_back(args[t]);
      CrossedElt val = extend_crossed(inner_.node()->eval(merged), nv);
      out += i % 2 == 0 ? val : -val;
    }
    std::vector<CrossedElt> tail(args.begin(), args.end() - 1);
    CrossedElt last =
        extend_crossed(inner_.node()->eval(tail), nv) * args[k];
    out += k % 2 == 0 ? -last : last;
    return out;
  }

 private:
  Cochain inner_;
};

class PreLieNode : public CochainNode {
 public:
  PreLieNode(Cochain phi, Cochain psi)
      : CochainNode(phi.group(), phi.arity() + psi.arity() - 1),
        phi_(std::move(phi)),
        psi_(std::move(psi)) {
    if (phi_.group() != psi_.group())
      throw std::invalid_argument("mismatched algebra contexts");
    if (phi_.arity() < 1)
      throw std::invalid_argument("insertion needs at least one slot");
  }

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int k = phi_.arity();
    int l = psi_.arity();
    int nv = args_nvars(group(), args);
    CrossedElt out(group(), nv);
    for (int i = 1; i <= k; ++i) {
      std::vector<CrossedElt> slot(args.begin() + (i - 1),
                                   args.begin() + (i - 1) + l);
      CrossedElt inserted = extend_crossed(psi_.node()->eval(slot), nv);
      std::vector<CrossedElt> outer;
      outer.reserve(k);
      for (int t = 0; t < i - 1; ++t) outer.push_back(args[t]);
      outer.push_back(inserted);
      for (int t = i - 1 + l; t < static_cast<int>(args.size()); ++t)
        outer.push_back(args[t]);
      CrossedElt val = phi_.node()->eval(outer);
      out += ((i - 1) * (l - 1)) % 2 == 0 ? val : -val;
    }
    return out;
  }

 private:
  Cochain phi_, psi_;
};

class GroupActedNode : public CochainNode {
 public:
  GroupActedNode(const Group* group, int h, Cochain inner)
      : CochainNode(group, inner.arity()), h_(h), inner_(std::move(inner)) {
    if (group != inner_.group())
      throw std::invalid_argument("mismatched algebra contexts");
    if (h < 0 || h >= group->size())
      throw std::invalid_argument("group element out of range");
  }

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int hinv = group()->inv(h_);
    std::vector<CrossedElt> moved;
    moved.reserve(args.size());
    for (const CrossedElt& a : args)
      moved.push_back(conjugate_action(hinv, a));
    return conjugate_action(h_, inner_.node()->eval(moved));
  }

 private:
  int h_;
  Cochain inner_;
};

class AveragedNode : public CochainNode {
 public:
  explicit AveragedNode(Cochain inner)
      : CochainNode(inner.group(), inner.arity()), inner_(std::move(inner)) {}

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int nv = args_nvars(group(), args);
    CrossedElt out(group(), nv);
    for (int h = 0; h < group()->size(); ++h) {
      int hinv = group()->inv(h);
      std::vector<CrossedElt> moved;
      moved.reserve(args.size());
      for (const CrossedElt& a : args)
        moved.push_back(conjugate_action(hinv, a));
      out += conjugate_action(h, inner_.node()->eval(moved));
    }
    return out.scaled(Cyclo(Rat(1, group()->size())));
  }

 private:
  Cochain inner_;
};

class LiftedNode : public CochainNode {
 public:
  explicit LiftedNode(Cochain inner)
      : CochainNode(inner.group(), inner.arity()), inner_(std::move(inner)) {}

  CrossedElt eval(const std::vector<CrossedElt>& args) const override {
    int k = arity();
    int nv = args_nvars(group(), args);
    CrossedElt out(group(), nv);
    if (k == 0) return inner_.node()->eval(args);

    std::vector<std::vector<std::pair<int, MultiPoly>>> comps(k);
    for (int t = 0; t < k; ++t) {
      for (const auto& [g, f] : args[t].components())
        comps[t].emplace_back(g, f);
      if (comps[t].empty()) return out;
    }

    std::vector<size_t> pick(k, 0);
    while (true) {
      std::vector<CrossedElt> base;
      base.reserve(k);
      int prefix = group()->identity();
      for (int t = 0; t < k; ++t) {
        const auto& [g, f] = comps[t][pick[t]];
        MultiPoly moved =
            t == 0 ? f
                   : poly_substitute(f, group()->mat(group()->inv(prefix)));
        CrossedElt wrapped(group(), nv);
        wrapped.add_component(group()->identity(), moved);
        base.push_back(wrapped);
        prefix = group()->mul(prefix, g);
      }
      out += extend_crossed(inner_.node()->eval(base), nv) *
             CrossedElt::unit(group(), prefix, nv);

      int p = k - 1;
      while (p >= 0 && pick[p] + 1 == comps[p].size()) pick[p--] = 0;
      if (p < 0) break;
      ++pick[p];
    }
    return out;
  }

 private:
  Cochain inner_;
};

}  // namespace

int Cochain::arity() const {
  if (!node_) throw std::logic_error("empty cochain");
  return node_->arity();
}

const Group* Cochain::group() const {
  if (!node_) throw std::logic_error("empty cochain");
  return node_->group();
}

CrossedElt Cochain::operator()(const std::vector<CrossedElt>& args) const {
  if (!node_) throw std::logic_error("empty cochain");
  if (static_cast<int>(args.size()) != node_->arity())
    throw std::invalid_argument("cochain arity mismatch");
  for (const CrossedElt& a : args) {
    if (a.group() != node_->group())
      throw std::invalid_argument("mismatched algebra contexts");
    if (a.nvars() != args[0].nvars() || a.nvars() < node_->group()->dim())
      throw std::invalid_argument("cochain arguments disagree on variables");
  }
  return node_->eval(args);
}

CrossedElt Cochain::eval(const std::vector<MultiPoly>& args) const {
  std::vector<CrossedElt> wrapped;
  wrapped.reserve(args.size());
  for (const MultiPoly& f : args)
    wrapped.push_back(CrossedElt::poly(group(), f));
  return (*this)(wrapped);
}

Cochain make_polydiff(const Group* group, int group_tag,
                      const MultiPoly& coeff,
                      const std::vector<Expo>& slot_orders) {
  return Cochain(
      std::make_shared<PolyDiffNode>(group, group_tag, coeff, slot_orders));
}

Cochain make_zero_cochain(const Group* group, int arity) {
  return Cochain(std::make_shared<ZeroNode>(group, arity));
}

Cochain make_constant_cochain(const Group* group, const CrossedElt& value) {
  if (value.group() != group)
    throw std::invalid_argument("mismatched algebra contexts");
  return Cochain(std::make_shared<ConstantNode>(group, value));
}

Cochain make_identity_cochain(const Group* group) {
  return Cochain(std::make_shared<IdentityNode>(group));
}

Cochain make_multiplication(const Group* group) {
  return Cochain(std::make_shared<MultiplicationNode>(group));
}

Cochain make_function_cochain(
    const Group* group, int arity,
    std::function<CrossedElt(const std::vector<CrossedElt>&)> fn) {
  return Cochain(std::make_shared<FunctionNode>(group, arity, std::move(fn)));
}

Cochain make_twisted_cocycle(const Group* group, int g) {
  return make_twisted_cocycle(group, g, group->fixed_data(g));
}

Cochain make_twisted_cocycle(const Group* group, int g,
                             const FixedPointData& frame) {
  return Cochain(std::make_shared<TwistedNode>(group, g, frame));
}

Cochain sharp_product(const Group* group, int g, const FixedPointData& frame,
                      const Multivector& tangential) {
  return Cochain(std::make_shared<SharpNode>(group, g, frame, tangential));
}

Cochain cochain_sum(const Cochain& a, const Cochain& b) {
  return Cochain(std::make_shared<SumNode>(a, b));
}

Cochain cochain_scaled(const Cochain& c, const Cyclo& s) {
  return Cochain(std::make_shared<ScaledNode>(c, s));
}

Cochain hochschild_differential(const Cochain& c) {
  return Cochain(std::make_shared<DifferentialNode>(c));
}

Cochain prelie_circ(const Cochain& phi, const Cochain& psi) {
  return Cochain(std::make_shared<PreLieNode>(phi, psi));
}

Cochain gerstenhaber_bracket(const Cochain& phi, const Cochain& psi) {
  int k = phi.arity();
  int l = psi.arity();
  int sgn = ((k - 1) * (l - 1)) % 2 == 0 ? 1 : -1;
  return cochain_sum(prelie_circ(phi, psi),
                     cochain_scaled(prelie_circ(psi, phi), Cyclo(-sgn)));
}

Cochain group_action_on_cochain(const Group* group, int h, const Cochain& c) {
  return Cochain(std::make_shared<GroupActedNode>(group, h, c));
}

Cochain group_averaged(const Cochain& c) {
  return Cochain(std::make_shared<AveragedNode>(c));
}

Cochain lift_through_tags(const Cochain& inner) {
  return Cochain(std::make_shared<LiftedNode>(inner));
}

std::vector<Expo> monomials_up_to(int nvars, int degree) {
  std::vector<Expo> out;
  Expo e(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars) {
      out.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[pos] = d;
      rec(pos + 1, left - d);
    }
    e[pos] = 0;
  };
  rec(0, degree);
  return out;
}

namespace {

// Runs fn over [0, count) with early exit; splits across threads when the
// hardware offers them and the sweep is large.
void sweep_indices(long count, const std::function<bool(long)>& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw < 2 || count < 512) {
    for (long i = 0; i < count; ++i)
      if (!fn(i)) return;
    return;
  }
  unsigned workers = hw;
  std::atomic<bool> stop(false);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (long i = w; i < count && !stop.load(std::memory_order_relaxed);
           i += workers) {
        if (!fn(i)) {
          stop.store(true, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

std::string tuple_witness(const std::vector<Expo>& monos,
                          const std::vector<int>& pick) {
  std::ostringstream os;
  os << "(";
  for (size_t t = 0; t < pick.size(); ++t) {
    if (t) os << ", ";
    os << monomial_str(monos[pick[t]], {});
  }
  os << ")";
  return os.str();
}

}  // namespace

SweepReport cochains_agree(const Cochain& a, const Cochain& b,
                           int degree_bound) {
  if (a.group() != b.group())
    throw std::invalid_argument("mismatched algebra contexts");
  if (a.arity() != b.arity())
    throw std::invalid_argument("mismatched cochain arities");
  const Group* group = a.group();
  int n = group->dim();
  int k = a.arity();
  Cyclo::precompute(group->exponent());
  std::vector<Expo> monos = monomials_up_to(n, degree_bound);
  long total = 1;
  for (int t = 0; t < k; ++t) total *= static_cast<long>(monos.size());

  SweepReport rep;
  std::atomic<long> checked(0);
  std::mutex fail_mu;
  sweep_indices(total, [&](long index) {
    std::vector<int> pick(k);
    long rest = index;
    for (int t = k - 1; t >= 0; --t) {
      pick[t] = static_cast<int>(rest % monos.size());
      rest /= static_cast<long>(monos.size());
    }
    std::vector<CrossedElt> args;
    args.reserve(k);
    for (int t = 0; t < k; ++t)
      args.push_back(CrossedElt::poly(
          group, MultiPoly::monomial(n, monos[pick[t]], Cyclo(1))));
    checked.fetch_add(1, std::memory_order_relaxed);
    if (a(args) == b(args)) return true;
    std::lock_guard<std::mutex> lock(fail_mu);
    if (rep.ok) {
      rep.ok = false;
      rep.witness = tuple_witness(monos, pick);
    }
    return false;
  });
  rep.checked = checked.load();
  return rep;
}

SweepReport cocycle_check(const Cochain& c, int degree_bound) {
  Cochain dc = hochschild_differential(c);
  return cochains_agree(dc, make_zero_cochain(c.group(), dc.arity()),
                        degree_bound);
}

SweepReport crossed_cocycle_check(const Cochain& c, int degree_bound) {
  const Group* group = c.group();
  Cochain dc = hochschild_differential(c);
  int n = group->dim();
  int k = dc.arity();
  Cyclo::precompute(group->exponent());
  std::vector<Expo> monos = monomials_up_to(n, degree_bound);
  long slots = static_cast<long>(monos.size()) * group->size();
  long total = 1;
  for (int t = 0; t < k; ++t) total *= slots;

  SweepReport rep;
  std::atomic<long> checked(0);
  std::mutex fail_mu;
  CrossedElt zero(group, n);
  sweep_indices(total, [&](long index) {
    std::vector<CrossedElt> args;
    args.reserve(k);
    std::vector<int> pick(k);
    long rest = index;
    for (int t = k - 1; t >= 0; --t) {
      pick[t] = static_cast<int>(rest % slots);
      rest /= slots;
    }
    for (int t = 0; t < k; ++t) {
      int mono = pick[t] % static_cast<int>(monos.size());
      int tag = pick[t] / static_cast<int>(monos.size());
      args.push_back(CrossedElt::term(
          group, tag, MultiPoly::monomial(n, monos[mono], Cyclo(1))));
    }
    checked.fetch_add(1, std::memory_order_relaxed);
    if (dc(args) == zero) return true;
    std::lock_guard<std::mutex> lock(fail_mu);
    if (rep.ok) {
      rep.ok = false;
      std::ostringstream os;
      os << "(";
      for (int t = 0; t < k; ++t) {
        if (t) os << ", ";
        os << monomial_str(monos[pick[t] % static_cast<int>(monos.size())], {})
           << " [" << group->name_of(pick[t] / static_cast<int>(monos.size()))
           << "]";
      }
      os << ")";
      rep.witness = os.str();
    }
    return false;
  });
  rep.checked = checked.load();
  return rep;
}

}  // namespace skewpois
