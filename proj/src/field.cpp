#include "gcalc/field.hpp"

#include <bit>
#include <cmath>

namespace gcalc {

namespace {

template <class S>
MV<S> convert(const Multivector& a) {
  MV<S> r(a.n);
  for (std::size_t q = 0; q < a.size(); ++q) r.c[q] = S(a.c[q]);
  return r;
}

template <class S>
std::vector<S> row(const SqMat<S>& m, int i) {
  return std::vector<S>(m.a.begin() + i * m.n, m.a.begin() + (i + 1) * m.n);
}

void require_same_frame(const FieldPtr& a, const FieldPtr& b) {
  if (a->frame() != b->frame()) {
    throw FrameMismatch("operands live in different frames ('" + a->frame() + "' vs '" + b->frame() + "')");
  }
  if (a->dim() != b->dim()) throw DimMismatch("operands have different dimensions");
}

// Sign of sorting the ascending index list of `blade` after its entry `old`
// has been replaced by `repl` (repl not already present).
double replace_sign(Mask blade, int old, int repl) {
  if (old == repl) return 1.0;
  const int lo = std::min(old, repl);
  const int hi = std::max(old, repl);
  const Mask between = blade & ~(Mask{1} << old) & (((Mask{1} << hi) - 1) & ~((Mask{1} << (lo + 1)) - 1));
  return (std::popcount(between) & 1) ? -1.0 : 1.0;
}

// D_{e_i} A from A sampled one level up: coordinate partials of the
// components along e_i plus the wedge-compatible derivative of each blade.
template <class S>
MV<S> mdd_kernel(const ConnData<S>& c, int i, const MV<Dual<S>>& a) {
  const int n = a.n;
  MV<S> r(n);
  for (Mask blade = 0; blade < a.size(); ++blade) {
    const Dual<S>& comp = a.c[blade];
    S d{};
    for (int k = 0; k < n; ++k) d += c.F(i, k) * comp.d[k];
    r.c[blade] += d;
    if (blade == 0) continue;
    for (int jm = 0; jm < n; ++jm) {
      if (!(blade & (Mask{1} << jm))) continue;
      const Mask rest = blade & ~(Mask{1} << jm);
      for (int l = 0; l < n; ++l) {
        if (rest & (Mask{1} << l)) continue;
        const S& coef = c.vec[c.at(i, jm, l)];
        r.c[rest | (Mask{1} << l)] += replace_sign(blade, jm, l) * (coef * comp.v);
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

class ExprField final : public FieldImpl<ExprField> {
 public:
  ExprField(int n, const std::string& frame, std::map<Mask, Expr> comps)
      : FieldImpl(n, frame, 2), comps_(std::move(comps)) {
    for (const auto& [m, e] : comps_) {
      if (m >= (Mask{1} << n)) throw DimMismatch("blade index exceeds field dimension");
    }
  }
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    MV<S> r(dim());
    for (const auto& [m, e] : comps_) r.c[m] = ctx.lift<S>(e);
    return r;
  }

 private:
  std::map<Mask, Expr> comps_;
};

class ConstantField final : public FieldImpl<ConstantField> {
 public:
  ConstantField(const std::string& frame, Multivector v) : FieldImpl(v.n, frame, 2), v_(std::move(v)) {}
  template <class S>
  MV<S> eval(PointContext&) const {
    return convert<S>(v_);
  }

 private:
  Multivector v_;
};

class ReciprocalField final : public FieldImpl<ReciprocalField> {
 public:
  ReciprocalField(int n, const std::string& frame, int i) : FieldImpl(n, frame, 2), i_(i) {
    if (i < 0 || i >= n) throw DimMismatch("reciprocal index out of range");
  }
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    return MV<S>::vector(dim(), row(ctx.gram<S>(frame()).ginv, i_));
  }

 private:
  int i_;
};

double frame_orientation(PointContext& ctx, const std::string& frame) {
  const double det_f = ctx.gram<double>(frame).det_F;
  return ctx.chart().orientation * (det_f < 0 ? -1.0 : 1.0);
}

class PseudoscalarField final : public FieldImpl<PseudoscalarField> {
 public:
  PseudoscalarField(int n, const std::string& frame) : FieldImpl(n, frame, 2) {}
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    return pseudoscalar_t(ctx.gram<S>(frame()).g, frame_orientation(ctx, frame())).first;
  }
};

class ReexpressField final : public FieldImpl<ReexpressField> {
 public:
  ReexpressField(FieldPtr in, const std::string& frame)
      : FieldImpl(in->dim(), frame, in->budget()), in_(std::move(in)) {}
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    const MV<S> a = in_->sample<S>(ctx);
    if (in_->frame() == frame()) return a;
    const int n = dim();
    const SqMat<S>& from = ctx.gram<S>(in_->frame()).F;
    SqMat<S> to_inv;
    S det{};
    if (!invert(ctx.gram<S>(frame()).F, to_inv, det)) throw SingularFrame("target frame is singular");
    const SqMat<S> m = matmul(from, to_inv);  // e_i(from) = m(i,j) e_j(to)
    const std::size_t count = a.size();
    std::vector<MV<S>> img(count);
    img[0] = MV<S>::scalar(n, S(1.0));
    MV<S> r = a.c[0] * img[0];
    for (Mask blade = 1; blade < count; ++blade) {
      const int i = std::countr_zero(blade);
      img[blade] = wedge(MV<S>::vector(n, row(m, i)), img[blade & (blade - 1)]);
      r += a.c[blade] * img[blade];
    }
    return r;
  }

 private:
  FieldPtr in_;
};

class RetagField final : public FieldImpl<RetagField> {
 public:
  RetagField(FieldPtr in, const std::string& frame) : FieldImpl(in->dim(), frame, in->budget()), in_(std::move(in)) {}
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    return in_->sample<S>(ctx);
  }

 private:
  FieldPtr in_;
};

enum class BinKind { Add, Sub, Gp, Dot, Wedge };

class BinaryField final : public FieldImpl<BinaryField> {
 public:
  BinaryField(BinKind kind, FieldPtr a, FieldPtr b)
      : FieldImpl(a->dim(), a->frame(), std::min(a->budget(), b->budget())), kind_(kind), a_(std::move(a)), b_(std::move(b)) {}
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    const MV<S> x = a_->sample<S>(ctx);
    const MV<S> y = b_->sample<S>(ctx);
    switch (kind_) {
      case BinKind::Add:
        return x + y;
      case BinKind::Sub:
        return x - y;
      case BinKind::Wedge:
        return gcalc::wedge(x, y);
      case BinKind::Gp:
        return gp_t(x, y, ctx.gram<S>(frame()).g);
      case BinKind::Dot:
        return dot_t(x, y, ctx.gram<S>(frame()).g);
    }
    return x;
  }

 private:
  BinKind kind_;
  FieldPtr a_;
  FieldPtr b_;
};

enum class UnKind { Grade, Scale, Dual, Reverse };

class UnaryField final : public FieldImpl<UnaryField> {
 public:
  UnaryField(UnKind kind, FieldPtr a, double param)
      : FieldImpl(a->dim(), a->frame(), a->budget()), kind_(kind), a_(std::move(a)), param_(param) {}
  template <class S>
  MV<S> eval(PointContext& ctx) const {
    const MV<S> x = a_->sample<S>(ctx);
    switch (kind_) {
      case UnKind::Grade:
        return gcalc::grade(x, static_cast<int>(param_));
      case UnKind::Scale:
        return param_ * x;
      case UnKind::Dual:
        return dual_t(x, ctx.gram<S>(frame()).g, frame_orientation(ctx, frame()));
      case UnKind::Reverse:
        return gcalc::reverse(x);
    }
    return x;
  }

 private:
  UnKind kind_;
  FieldPtr a_;
  double param_;
};

enum class DerivKind { Mdd, Gradient, Divergence, Curl, CoordD };

class DerivedField final : public FieldImpl<DerivedField> {
 public:
  DerivedField(DerivKind kind, FieldPtr in, Conn conn, std::vector<double> dir)
      : FieldImpl(in->dim(), in->frame(), in->budget() - 1), kind_(kind), in_(std::move(in)), conn_(conn), dir_(std::move(dir)) {
    if (in_->budget() < 1) throw JetBudgetExhausted("derivative applied to a field with no remaining jet budget");
    if (kind_ == DerivKind::Mdd && static_cast<int>(dir_.size()) != dim()) {
      throw DimMismatch("direction has wrong dimension");
    }
  }

  template <class S>
  MV<S> eval(PointContext& ctx) const {
    if constexpr (std::is_same_v<S, Jet11>) {
      throw JetBudgetExhausted("derived field sampled at second-derivative level");
    } else {
      const MV<Dual<S>> a = in_->sample<Dual<S>>(ctx);
      const int n = dim();
      if (kind_ == DerivKind::CoordD) return coordinate_d(a);
      const ConnData<S>& c = ctx.connection<S>(frame(), conn_);
      MV<S> r(n);
      for (int i = 0; i < n; ++i) {
        if (kind_ == DerivKind::Mdd) {
          if (dir_[i] == 0.0) continue;
          r += dir_[i] * mdd_kernel(c, i, a);
          continue;
        }
        const MV<S> di = mdd_kernel(c, i, a);
        const std::vector<S> recip = row(c.ginv, i);
        switch (kind_) {
          case DerivKind::Gradient:
            r += gp_t(MV<S>::vector(n, recip), di, c.g);
            break;
          case DerivKind::Divergence:
            r += lc_vector(recip, di, c.g);
            break;
          case DerivKind::Curl:
            r += gcalc::wedge(MV<S>::vector(n, recip), di);
            break;
          default:
            break;
        }
      }
      return r;
    }
  }

 private:
  // (dA)_I = sum_m (-1)^m d_{i_m} A_{I \ i_m}
  template <class S>
  static MV<S> coordinate_d(const MV<Dual<S>>& a) {
    const int n = a.n;
    MV<S> r(n);
    for (Mask blade = 1; blade < a.size(); ++blade) {
      int m = 0;
      S acc{};
      for (int k = 0; k < n; ++k) {
        const Mask kb = Mask{1} << k;
        if (!(blade & kb)) continue;
        const S term = a.c[blade ^ kb].d[k];
        if (m & 1) {
          acc -= term;
        } else {
          acc += term;
        }
        ++m;
      }
      r.c[blade] = acc;
    }
    return r;
  }

  DerivKind kind_;
  FieldPtr in_;
  Conn conn_;
  std::vector<double> dir_;
};

}  // namespace

FieldPtr expr_field(int n, const std::string& frame, std::map<Mask, Expr> components) {
  return std::make_shared<ExprField>(n, frame, std::move(components));
}

FieldPtr field_from_def(const Chart& chart, const FieldDef& def) { return expr_field(chart.dim(), def.frame, def.components); }

FieldPtr constant_field(const std::string& frame, const Multivector& value) {
  return std::make_shared<ConstantField>(frame, value);
}

FieldPtr basis_field(int n, const std::string& frame, Mask blade) {
  return constant_field(frame, Multivector::blade(n, blade, 1.0));
}

FieldPtr reciprocal_field(int n, const std::string& frame, int i) { return std::make_shared<ReciprocalField>(n, frame, i); }

FieldPtr pseudoscalar_field(int n, const std::string& frame) { return std::make_shared<PseudoscalarField>(n, frame); }

FieldPtr reexpress(const FieldPtr& f, const std::string& frame) { return std::make_shared<ReexpressField>(f, frame); }

FieldPtr retag(const FieldPtr& f, const std::string& frame) { return std::make_shared<RetagField>(f, frame); }

FieldPtr add(const FieldPtr& a, const FieldPtr& b) {
  require_same_frame(a, b);
  return std::make_shared<BinaryField>(BinKind::Add, a, b);
}
FieldPtr sub(const FieldPtr& a, const FieldPtr& b) {
  require_same_frame(a, b);
  return std::make_shared<BinaryField>(BinKind::Sub, a, b);
}
FieldPtr gp(const FieldPtr& a, const FieldPtr& b) {
  require_same_frame(a, b);
  return std::make_shared<BinaryField>(BinKind::Gp, a, b);
}
FieldPtr dot(const FieldPtr& a, const FieldPtr& b) {
  require_same_frame(a, b);
  return std::make_shared<BinaryField>(BinKind::Dot, a, b);
}
FieldPtr wedge(const FieldPtr& a, const FieldPtr& b) {
  require_same_frame(a, b);
  return std::make_shared<BinaryField>(BinKind::Wedge, a, b);
}
FieldPtr grade(const FieldPtr& a, int k) { return std::make_shared<UnaryField>(UnKind::Grade, a, k); }
FieldPtr scale(const FieldPtr& a, double s) { return std::make_shared<UnaryField>(UnKind::Scale, a, s); }
FieldPtr dual(const FieldPtr& a) { return std::make_shared<UnaryField>(UnKind::Dual, a, 0.0); }
FieldPtr reverse(const FieldPtr& a) { return std::make_shared<UnaryField>(UnKind::Reverse, a, 0.0); }

FieldPtr mdd_field(const FieldPtr& a, std::vector<double> direction, Conn kind) {
  return std::make_shared<DerivedField>(DerivKind::Mdd, a, kind, std::move(direction));
}
FieldPtr mdd_basis_field(const FieldPtr& a, int i, Conn kind) {
  if (i < 0 || i >= a->dim()) throw DimMismatch("direction index out of range");
  std::vector<double> dir(static_cast<std::size_t>(a->dim()), 0.0);
  dir[i] = 1.0;
  return mdd_field(a, std::move(dir), kind);
}
FieldPtr gradient_field(const FieldPtr& a, Conn kind) {
  return std::make_shared<DerivedField>(DerivKind::Gradient, a, kind, std::vector<double>{});
}
FieldPtr divergence_field(const FieldPtr& a, Conn kind) {
  return std::make_shared<DerivedField>(DerivKind::Divergence, a, kind, std::vector<double>{});
}
FieldPtr curl_field(const FieldPtr& a, Conn kind) {
  return std::make_shared<DerivedField>(DerivKind::Curl, a, kind, std::vector<double>{});
}
FieldPtr ext_d_field(const FieldPtr& a) { return curl_field(a, Conn::LeviCivita); }
FieldPtr coordinate_d_field(const FieldPtr& a) {
  return std::make_shared<DerivedField>(DerivKind::CoordD, a, Conn::LeviCivita, std::vector<double>{});
}

}  // namespace gcalc
