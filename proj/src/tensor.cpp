#include "gcalc/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "gcalc/symbolic.hpp"

namespace gcalc {

namespace {

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) out.push_back(i);
  }
  return out;
}

double permutation_sign(std::vector<int> v) {
  double s = 1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) s = -s;
    }
  }
  return s;
}

SqMat<Expr> frame_gram_expr(const Chart& chart, const std::string& frame) {
  return sym::congruence(chart.frame(frame), chart.metric);
}

// All length-k tuples of distinct indices in [0, n).
void distinct_tuples(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
    cur.push_back(i);
    distinct_tuples(n, k, cur, out);
    cur.pop_back();
  }
}

int pure_grade(const FieldDef& b, int n) {
  int k = -1;
  for (const auto& [m, e] : b.components) {
    if (e.is_zero_literal()) continue;
    if (k >= 0 && grade_of(m) != k) throw MixedGrade("tensor conjugate needs a pure-grade multivector");
    k = grade_of(m);
  }
  return k < 0 ? 0 : std::min(k, n);
}

// sum_K B^K det(g_{K,J}) as an expression.
Expr blade_pairing(const FieldDef& b, const SqMat<Expr>& g, Mask j) {
  Expr acc;
  const std::vector<int> cols = indices_of(j);
  for (const auto& [m, e] : b.components) {
    if (grade_of(m) != grade_of(j) || e.is_zero_literal()) continue;
    acc = sym::add(acc, sym::mul(e, sym::minor_det(g, indices_of(m), cols)));
  }
  return acc;
}

class TensorApplyField final : public FieldImpl<TensorApplyField> {
 public:
  TensorApplyField(TensorField t, std::vector<FieldPtr> args)
      : FieldImpl(t.dim(), t.frame(), min_budget(args)), t_(std::move(t)), args_(std::move(args)) {
    if (args_.size() != t_.signature().slots.size()) throw GradeMismatch("wrong number of tensor arguments");
    for (const auto& a : args_) {
      if (a->frame() != t_.frame()) throw FrameMismatch("tensor argument lives in a different frame");
    }
  }
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    std::vector<MV<S>> vals;
    vals.reserve(args_.size());
    for (const auto& a : args_) vals.push_back(a->sample<S>(ctx));
    return t_.eval<S>(ctx, vals);
  }

 private:
  static int min_budget(const std::vector<FieldPtr>& args) {
    int b = 2;
    for (const auto& a : args) b = std::min(b, a->budget());
    return b;
  }
  TensorField t_;
  std::vector<FieldPtr> args_;
};

}  // namespace

TensorField::TensorField(int n, std::string frame, TensorSignature sig) : n_(n), frame_(std::move(frame)), sig_(std::move(sig)) {
  for (int k : sig_.slots) {
    if (k < 0 || k > n_) throw SlotGradeError("slot grade out of range");
  }
  if (sig_.out < 0 || sig_.out > n_) throw SlotGradeError("output grade out of range");
}

void TensorField::set(const TensorKey& key, const Expr& value) {
  if (key.slots.size() != sig_.slots.size()) throw GradeMismatch("component key has wrong number of slots");
  for (std::size_t s = 0; s < key.slots.size(); ++s) {
    if (grade_of(key.slots[s]) != sig_.slots[s] || key.slots[s] >= (Mask{1} << n_)) {
      throw GradeMismatch("component blade does not match slot grade");
    }
  }
  if (grade_of(key.out) != sig_.out || key.out >= (Mask{1} << n_)) throw GradeMismatch("output blade does not match output grade");
  if (value.is_zero_literal()) {
    comps_.erase(key);
  } else {
    comps_[key] = value;
  }
}

Expr TensorField::get(const TensorKey& key) const {
  auto it = comps_.find(key);
  return it == comps_.end() ? Expr() : it->second;
}

template <class S>
MV<S> TensorField::eval(PointContext& ctx, const std::vector<MV<S>>& args) const {
  if (args.size() != sig_.slots.size()) throw GradeMismatch("wrong number of tensor arguments");
  for (std::size_t s = 0; s < args.size(); ++s) {
    if (args[s].n != n_) throw DimMismatch("tensor argument has wrong dimension");
    for (Mask m = 0; m < args[s].size(); ++m) {
      if (grade_of(m) != sig_.slots[s] && max_abs(args[s].c[m]) > 0.0) {
        throw GradeMismatch("tensor argument grade does not match its slot");
      }
    }
  }
  MV<S> r(n_);
  std::map<Mask, MV<S>> images;
  const GramAt<S>* g = nullptr;
  for (const auto& [key, e] : comps_) {
    S coef = ctx.lift<S>(e);
    for (std::size_t s = 0; s < args.size(); ++s) coef *= args[s].c[key.slots[s]];
    if (key.out == 0) {
      r.c[0] += coef;
      continue;
    }
    auto it = images.find(key.out);
    if (it == images.end()) {
      if (g == nullptr) g = &ctx.gram<S>(frame_);
      MV<S> img = MV<S>::scalar(n_, S(1.0));
      const std::vector<int> idx = indices_of(key.out);
      for (auto p = idx.rbegin(); p != idx.rend(); ++p) {
        MV<S> v(n_);
        for (int l = 0; l < n_; ++l) v.c[Mask{1} << l] = g->ginv(*p, l);
        img = wedge(v, img);
      }
      it = images.emplace(key.out, std::move(img)).first;
    }
    r += coef * it->second;
  }
  return r;
}

template MV<double> TensorField::eval<double>(PointContext&, const std::vector<MV<double>>&) const;
template MV<Jet1> TensorField::eval<Jet1>(PointContext&, const std::vector<MV<Jet1>>&) const;
template MV<Jet11> TensorField::eval<Jet11>(PointContext&, const std::vector<MV<Jet11>>&) const;

Multivector tensor_eval(const TensorField& t, const std::vector<Multivector>& args, PointContext& ctx) {
  return t.eval<double>(ctx, args);
}

TensorField tensor_add(const TensorField& a, const TensorField& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch("tensor signatures differ");
  if (a.frame() != b.frame()) throw FrameMismatch("tensors live in different frames");
  TensorField r = a;
  for (const auto& [k, e] : b.components()) r.set(k, sym::add(r.get(k), e));
  return r;
}

TensorField tensor_scale(const TensorField& a, double s) {
  TensorField r(a.dim(), a.frame(), a.signature());
  for (const auto& [k, e] : a.components()) r.set(k, sym::mul(sym::num(s), e));
  return r;
}

TensorField tensor_product(const TensorField& a, const TensorField& b) {
  if (a.signature().out != 0 || b.signature().out != 0) throw NonScalarOutput("tensor product needs scalar-valued tensors");
  if (a.frame() != b.frame()) throw FrameMismatch("tensors live in different frames");
  TensorSignature sig;
  sig.slots = a.signature().slots;
  sig.slots.insert(sig.slots.end(), b.signature().slots.begin(), b.signature().slots.end());
  TensorField r(a.dim(), a.frame(), sig);
  for (const auto& [ka, ea] : a.components()) {
    for (const auto& [kb, eb] : b.components()) {
      TensorKey k;
      k.slots = ka.slots;
      k.slots.insert(k.slots.end(), kb.slots.begin(), kb.slots.end());
      r.set(k, sym::mul(ea, eb));
    }
  }
  return r;
}

TensorField zero_tensor(int n, const std::string& frame, TensorSignature sig) {
  return TensorField(n, frame, std::move(sig));
}

TensorField metric_tensor(const Chart& chart, const std::string& frame) {
  const int n = chart.dim();
  const SqMat<Expr> g = frame_gram_expr(chart, frame);
  TensorField t(n, frame, TensorSignature{{1, 1}, 0});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.set(TensorKey{{Mask{1} << i, Mask{1} << j}, 0}, g(i, j));
  }
  return t;
}

TensorField tensor_conjugate(const Chart& chart, const FieldDef& b) {
  const int n = chart.dim();
  const int k = pure_grade(b, n);
  const SqMat<Expr> g = frame_gram_expr(chart, b.frame);
  TensorField t(n, b.frame, TensorSignature{std::vector<int>(static_cast<std::size_t>(k), 1), 0});
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  distinct_tuples(n, k, cur, tuples);
  for (const auto& tup : tuples) {
    Mask j = 0;
    TensorKey key;
    for (int i : tup) {
      j |= Mask{1} << i;
      key.slots.push_back(Mask{1} << i);
    }
    const Expr pairing = blade_pairing(b, g, j);
    t.set(key, permutation_sign(tup) < 0 ? sym::neg(pairing) : pairing);
  }
  return t;
}

TensorField tensor_conjugate_breve(const Chart& chart, const FieldDef& b) {
  const int n = chart.dim();
  const int k = pure_grade(b, n);
  const SqMat<Expr> g = frame_gram_expr(chart, b.frame);
  TensorField t(n, b.frame, TensorSignature{{k}, 0});
  for (Mask j = 0; j < (Mask{1} << n); ++j) {
    if (grade_of(j) != k) continue;
    const Expr pairing = blade_pairing(b, g, j);
    t.set(TensorKey{{j}, 0}, reverse_sign(k) < 0 ? sym::neg(pairing) : pairing);
  }
  return t;
}

TensorField contorsion_tensor(const Chart& chart, const std::string& frame) {
  const int n = chart.dim();
  const SqMat<Expr>& f = chart.frame(frame);
  TensorField t(n, frame, TensorSignature{{1, 1}, 1});
  std::vector<Expr> chi(static_cast<std::size_t>(n * n * n));
  for (const auto& c : chart.contorsion) {
    auto& slot = chi[static_cast<std::size_t>((c.i * n + c.j) * n + c.k)];
    slot = sym::add(slot, c.value);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Expr acc;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
              const Expr& x = chi[static_cast<std::size_t>((a * n + b) * n + c)];
              if (x.is_zero_literal()) continue;
              acc = sym::add(acc, sym::mul(sym::mul(sym::mul(f(i, a), f(j, b)), f(k, c)), x));
            }
          }
        }
        t.set(TensorKey{{Mask{1} << i, Mask{1} << j}, Mask{1} << k}, acc);
      }
    }
  }
  return t;
}

TensorOp as_op(const TensorField& t) {
  TensorOp op;
  op.slots = t.signature().slots;
  op.frame = t.frame();
  op.apply = [t](const std::vector<FieldPtr>& args) -> FieldPtr { return std::make_shared<TensorApplyField>(t, args); };
  return op;
}

TensorOp contract_op(const TensorOp& t, int p, int q, int n) {
  const int arity = static_cast<int>(t.slots.size());
  if (p == q || p < 0 || q < 0 || p >= arity || q >= arity) throw SlotGradeError("invalid contraction slots");
  if (t.slots[p] != 1 || t.slots[q] != 1) throw SlotGradeError("contraction needs grade-1 slots");
  TensorOp op;
  op.frame = t.frame;
  for (int s = 0; s < arity; ++s) {
    if (s != p && s != q) op.slots.push_back(t.slots[s]);
  }
  op.apply = [t, p, q, n, arity](const std::vector<FieldPtr>& rest) -> FieldPtr {
    if (static_cast<int>(rest.size()) != arity - 2) throw GradeMismatch("wrong number of tensor arguments");
    FieldPtr sum;
    for (int i = 0; i < n; ++i) {
      std::vector<FieldPtr> args;
      std::size_t r = 0;
      for (int s = 0; s < arity; ++s) {
        if (s == p) {
          args.push_back(basis_field(n, t.frame, Mask{1} << i));
        } else if (s == q) {
          args.push_back(reciprocal_field(n, t.frame, i));
        } else {
          args.push_back(rest[r++]);
        }
      }
      FieldPtr term = t.apply(args);
      sum = sum ? add(sum, term) : term;
    }
    return sum;
  };
  return op;
}

Multivector contract(const TensorField& t, int p, int q, const std::vector<Multivector>& rest, PointContext& ctx) {
  const TensorOp op = contract_op(as_op(t), p, q, t.dim());
  std::vector<FieldPtr> args;
  for (const auto& m : rest) args.push_back(constant_field(t.frame(), m));
  return op.apply(args)->at(ctx);
}

Multivector tensor_derivative_chain(PointContext& ctx, const TensorOp& t, std::span<const double> a,
                                    const std::vector<FieldPtr>& args, Conn kind) {
  const std::vector<double> dir(a.begin(), a.end());
  Multivector r = mdd_field(t.apply(args), dir, kind)->at(ctx);
  for (std::size_t s = 0; s < args.size(); ++s) {
    std::vector<FieldPtr> shifted = args;
    shifted[s] = mdd_field(args[s], dir, kind);
    r -= t.apply(shifted)->at(ctx);
  }
  return r;
}

std::vector<double> tensor_derivative_components(PointContext& ctx, const TensorField& t, Conn kind, bool upper) {
  const TensorSignature& sig = t.signature();
  if (sig.out != 0) throw SlotGradeError("component derivative needs a scalar-valued tensor");
  for (int k : sig.slots) {
    if (k != 1) throw SlotGradeError("component derivative needs grade-1 slots");
  }
  const int n = t.dim();
  const int r = static_cast<int>(sig.slots.size());
  std::size_t count = 1;
  for (int s = 0; s < r; ++s) count *= static_cast<std::size_t>(n);

  // Dense components at Jet1, lowered then optionally raised.
  std::vector<Jet1> comp(count, Jet1(0.0));
  for (std::size_t flat = 0; flat < count; ++flat) {
    TensorKey key;
    std::size_t rem = flat;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int s = r - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rem % n);
      rem /= n;
    }
    for (int s = 0; s < r; ++s) key.slots.push_back(Mask{1} << idx[s]);
    const Expr e = t.get(key);
    if (!e.is_zero_literal()) comp[flat] = ctx.lift<Jet1>(e);
  }
  std::size_t stride = count;
  if (upper) {
    const GramAt<Jet1>& gj = ctx.gram<Jet1>(t.frame());
    for (int s = 0; s < r; ++s) {
      stride /= n;
      std::vector<Jet1> next(count, Jet1(0.0));
      for (std::size_t flat = 0; flat < count; ++flat) {
        const int js = static_cast<int>((flat / stride) % n);
        const std::size_t base = flat - static_cast<std::size_t>(js) * stride;
        for (int a = 0; a < n; ++a) next[flat] += gj.ginv(js, a) * comp[base + static_cast<std::size_t>(a) * stride];
      }
      comp = std::move(next);
    }
  }

  const ConnData<double>& c = ctx.connection<double>(t.frame(), kind);
  std::vector<double> recip;
  if (upper) {
    recip.assign(static_cast<std::size_t>(n * n * n), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m) acc -= c.gamma[c.at(i, l, m)] * c.ginv(m, j);
          recip[c.at(i, j, l)] = acc;
        }
      }
    }
  }
  const std::vector<double>& coef = upper ? recip : c.vec;

  std::vector<double> out(count * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (std::size_t flat = 0; flat < count; ++flat) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += c.F(i, k) * comp[flat].d[k];
      std::size_t st = count;
      for (int s = 0; s < r; ++s) {
        st /= n;
        const int js = static_cast<int>((flat / st) % n);
        const std::size_t base = flat - static_cast<std::size_t>(js) * st;
        for (int l = 0; l < n; ++l) v -= coef[c.at(i, js, l)] * comp[base + static_cast<std::size_t>(l) * st].v;
      }
      out[static_cast<std::size_t>(i) * count + flat] = v;
    }
  }
  return out;
}

double conjugate_derivative_check(PointContext& ctx, const FieldDef& b, std::span<const double> a,
                                  const std::vector<Multivector>& vectors, Conn kind) {
  const Chart& chart = ctx.chart();
  const TensorField hat = tensor_conjugate(chart, b);
  if (vectors.size() != hat.signature().slots.size()) throw GradeMismatch("wrong number of vector arguments");
  std::vector<FieldPtr> args;
  for (const auto& v : vectors) args.push_back(constant_field(b.frame, v));
  const Multivector lhs = tensor_derivative_chain(ctx, as_op(hat), a, args, kind);

  const FieldPtr field = field_from_def(chart, b);
  const Multivector db = mdd_field(field, std::vector<double>(a.begin(), a.end()), kind)->at(ctx);
  const int n = chart.dim();
  Multivector blade = Multivector::scalar(n, 1.0);
  for (const auto& v : vectors) blade = wedge(blade, v);
  const GramAt<double>& g = ctx.gram<double>(b.frame);
  const Multivector rhs = grade(dot_t(reverse(db), blade, g.g), 0);
  return max_abs_diff(lhs, rhs);
}

std::map<std::string, std::string> serialize(const TensorField& t, std::span<const std::string> coords) {
  std::map<std::string, std::string> out;
  for (const auto& [k, e] : t.components()) {
    std::string key;
    for (std::size_t s = 0; s < k.slots.size(); ++s) {
      if (s) key += ';';
      key += blade_key(k.slots[s]);
    }
    key += " -> " + blade_key(k.out);
    out[key] = expr::to_string(e, coords);
  }
  return out;
}

}  // namespace gcalc
