#include "ternalg/ternary_coalgebra.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ternalg/kernels.hpp"

namespace ternalg {

namespace {

// Dense element of the fivefold tensor power, local to the coassociativity check.
class Tensor5 {
 public:
  explicit Tensor5(std::size_t dim) : dim_(dim), entries_(dim * dim * dim * dim * dim) {}
  QuadScalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t q, std::size_t p) {
    return entries_[(((i * dim_ + j) * dim_ + k) * dim_ + q) * dim_ + p];
  }
  const QuadScalar& flat(std::size_t idx) const { return entries_[idx]; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::size_t dim_;
  std::vector<QuadScalar> entries_;
};

std::vector<std::size_t> one_based(std::vector<std::size_t> idx) {
  for (auto& i : idx) ++i;
  return idx;
}

Tensor3 basis_coproduct(const TernaryCoalgebra& C, std::size_t l) {
  const std::size_t n = C.dim();
  Tensor3 out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) out(r, s, t) = C.delta()(l, r, s, t);
    }
  }
  return out;
}

enum class Nest { Left, Middle, Right };

// Applies the coproduct in the chosen slot of Delta(e_l) and the twists elsewhere.
Tensor5 nested_coproduct(const TernaryCoalgebra& C, std::size_t l, Nest where) {
  const std::size_t n = C.dim();
  const Tensor4& a = C.delta();
  const Matrix& y1 = C.alpha1();
  const Matrix& y2 = C.alpha2();
  Tensor5 out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        const QuadScalar& c = a(l, r, s, t);
        if (c.is_zero()) continue;
        // Indices u, v, w address the inner coproduct; x, z the twisted slots.
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w = 0; w < n; ++w) {
              const std::size_t inner_arg = where == Nest::Left ? r : where == Nest::Middle ? s : t;
              const QuadScalar& d = a(inner_arg, u, v, w);
              if (d.is_zero()) continue;
              const QuadScalar cd = c * d;
              for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t z = 0; z < n; ++z) {
                  switch (where) {
                    case Nest::Left:
                      if (!y1(x, s).is_zero() && !y2(z, t).is_zero()) out.at(u, v, w, x, z) += cd * y1(x, s) * y2(z, t);
                      break;
                    case Nest::Middle:
                      if (!y1(x, r).is_zero() && !y2(z, t).is_zero()) out.at(x, u, v, w, z) += cd * y1(x, r) * y2(z, t);
                      break;
                    case Nest::Right:
                      if (!y1(x, r).is_zero() && !y2(z, s).is_zero()) out.at(x, z, u, v, w) += cd * y1(x, r) * y2(z, s);
                      break;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::string coassoc_statement(Mode mode) {
  switch (mode) {
    case Mode::Total:
      return "(Δ⊗α1⊗α2)∘Δ = (α1⊗Δ⊗α2)∘Δ = (α1⊗α2⊗Δ)∘Δ";
    case Mode::Partial:
      return "(Δ⊗α1⊗α2 + α1⊗Δ⊗α2 + α1⊗α2⊗Δ)∘Δ = 0";
    case Mode::Weak:
      return "(Δ⊗α1⊗α2)∘Δ = (α1⊗α2⊗Δ)∘Δ";
  }
  return {};
}

}  // namespace

TernaryCoalgebra::TernaryCoalgebra(Tensor4 delta, Matrix alpha1, Matrix alpha2)
    : delta_(std::move(delta)), alpha1_(std::move(alpha1)), alpha2_(std::move(alpha2)) {
  for (std::size_t axis = 0; axis < 4; ++axis) require_dim(delta_.extent(axis), alpha1_.dim(), "coproduct");
  require_dim(alpha2_.dim(), alpha1_.dim(), "coalgebra twist");
}

TernaryCoalgebra TernaryCoalgebra::classical(Tensor4 delta) {
  const std::size_t n = delta.extent(0);
  return TernaryCoalgebra(std::move(delta), Matrix::identity(n), Matrix::identity(n));
}

TernaryCoalgebra TernaryCoalgebra::zero(std::size_t dim) { return classical(Tensor4::cube(dim)); }

TernaryCoalgebra TernaryCoalgebra::with_twists(Matrix alpha1, Matrix alpha2) const {
  return TernaryCoalgebra(delta_, std::move(alpha1), std::move(alpha2));
}

TernaryCoalgebra TernaryCoalgebra::with_coproduct(Tensor4 delta) const {
  return TernaryCoalgebra(std::move(delta), alpha1_, alpha2_);
}

Tensor3 evaluate_delta(const TernaryCoalgebra& C, const Vector& x) { return C.delta().contract_first(x); }

LawReport check_hom_coassociativity(const TernaryCoalgebra& C, CoassocMode mode) {
  const std::size_t n = C.dim();
  const kernels::IndexSpace inner({n, n, n, n, n});
  LawReport report;
  report.law = "coassoc." + std::string(mode_name(mode));
  report.statement = coassoc_statement(mode);
  report.violations = kernels::sweep(n, [&](std::size_t l, std::vector<Violation>& out) {
    const Tensor5 left = nested_coproduct(C, l, Nest::Left);
    const Tensor5 right = nested_coproduct(C, l, Nest::Right);
    const bool need_middle = mode != Mode::Weak;
    const Tensor5 middle = need_middle ? nested_coproduct(C, l, Nest::Middle) : Tensor5(0);
    auto emit = [&](std::size_t idx, const char* relation, QuadScalar residual) {
      std::vector<std::size_t> key{l};
      for (std::size_t i : inner.decode(idx)) key.push_back(i);
      out.push_back(Violation{one_based(std::move(key)), relation, {std::move(residual)}});
    };
    for (std::size_t idx = 0; idx < inner.size(); ++idx) {
      switch (mode) {
        case Mode::Total: {
          QuadScalar d1 = left.flat(idx) - middle.flat(idx);
          if (!d1.is_zero()) emit(idx, "left=middle", d1);
          QuadScalar d2 = middle.flat(idx) - right.flat(idx);
          if (!d2.is_zero()) emit(idx, "middle=right", d2);
          break;
        }
        case Mode::Partial: {
          QuadScalar sum = left.flat(idx) + middle.flat(idx) + right.flat(idx);
          if (!sum.is_zero()) emit(idx, "left+middle+right=0", sum);
          break;
        }
        case Mode::Weak: {
          QuadScalar d = left.flat(idx) - right.flat(idx);
          if (!d.is_zero()) emit(idx, "left=right", d);
          break;
        }
      }
    }
  });
  return report;
}

namespace {

LawReport twist_commutes_with_coproduct(const TernaryCoalgebra& C, const Matrix& alpha, std::string name,
                                        const std::string& label) {
  const std::size_t n = C.dim();
  LawReport report;
  report.law = std::move(name);
  report.statement = label + "⊗" + label + "⊗" + label + "∘Δ = Δ∘" + label;
  report.violations = kernels::sweep(n, [&](std::size_t l, std::vector<Violation>& out) {
    Tensor3 d = tensor3_map(alpha, alpha, alpha, basis_coproduct(C, l)) - evaluate_delta(C, alpha.column(l));
    if (!d.is_zero()) out.push_back(Violation{{l + 1}, label + "^3∘Δ=Δ∘" + label, d.entries()});
  });
  return report;
}

LawReport intertwines(const Matrix& f, const Matrix& alpha, const Matrix& beta, std::string name,
                      const std::string& statement) {
  LawReport report;
  report.law = std::move(name);
  report.statement = statement;
  const Matrix d = f * alpha - beta * f;
  for (std::size_t j = 0; j < d.dim(); ++j) {
    Vector col = d.column(j);
    if (!col.is_zero()) report.violations.push_back(Violation{{j + 1}, statement, col.entries()});
  }
  return report;
}

}  // namespace

LawReport check_comultiplicative(const TernaryCoalgebra& C) {
  return conjunction("comultiplicative", "αi⊗αi⊗αi∘Δ = Δ∘αi, i = 1,2",
                     {twist_commutes_with_coproduct(C, C.alpha1(), "comultiplicative.alpha1", "α1"),
                      twist_commutes_with_coproduct(C, C.alpha2(), "comultiplicative.alpha2", "α2")});
}

LawReport structure_identity_check(const TernaryCoalgebra& C, CoassocMode mode) {
  const std::size_t n = C.dim();
  const Tensor4& c = C.delta();
  const Matrix& y1 = C.alpha1();
  const Matrix& y2 = C.alpha2();
  const kernels::IndexSpace space({n, n, n, n, n, n, n, n});
  LawReport report;
  report.law = "structure_identity." + std::string(mode_name(mode));
  switch (mode) {
    case Mode::Total:
      report.statement = "Σ_r c^l_rst c^r_ijk y1^s_q y2^t_p = Σ_r c^l_rst c^s_jkq y1^r_i y2^t_p = Σ_r c^l_rst c^t_kqp y1^r_i y2^s_j";
      break;
    case Mode::Partial:
      report.statement = "Σ_r (c^l_rst c^r_ijk y1^s_q y2^t_p + c^l_rst c^s_jkq y1^r_i y2^t_p + c^l_rst c^t_kqp y1^r_i y2^s_j) = 0";
      break;
    case Mode::Weak:
      report.statement = "Σ_r c^l_rst c^r_ijk y1^s_q y2^t_p = Σ_r c^l_rst c^t_kqp y1^r_i y2^s_j";
      break;
  }
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t x[8];
    space.decode(flat, x);
    const std::size_t l = x[0], i = x[1], j = x[2], k = x[3], s = x[4], t = x[5], p = x[6], q = x[7];
    QuadScalar first, second, third;
    for (std::size_t r = 0; r < n; ++r) {
      const QuadScalar& lead = c(l, r, s, t);
      if (lead.is_zero()) continue;
      first += lead * c(r, i, j, k) * y1(q, s) * y2(p, t);
      second += lead * c(s, j, k, q) * y1(i, r) * y2(p, t);
      third += lead * c(t, k, q, p) * y1(i, r) * y2(j, s);
    }
    std::vector<std::size_t> key(x, x + 8);
    auto emit = [&](const char* relation, QuadScalar residual) {
      out.push_back(Violation{one_based(key), relation, {std::move(residual)}});
    };
    switch (mode) {
      case Mode::Total: {
        QuadScalar d1 = first - second;
        if (!d1.is_zero()) emit("first=second", d1);
        QuadScalar d2 = second - third;
        if (!d2.is_zero()) emit("second=third", d2);
        break;
      }
      case Mode::Partial: {
        QuadScalar sum = first + second + third;
        if (!sum.is_zero()) emit("first+second+third=0", sum);
        break;
      }
      case Mode::Weak: {
        QuadScalar d = first - third;
        if (!d.is_zero()) emit("first=third", d);
        break;
      }
    }
  });
  return report;
}

MorphismReport check_coalgebra_morphism(const Matrix& f, const TernaryCoalgebra& C1, const TernaryCoalgebra& C2) {
  const std::size_t n = C1.dim();
  require_dim(C2.dim(), n, "coalgebra morphism target");
  require_dim(f.dim(), n, "coalgebra morphism map");
  LawReport coproduct;
  coproduct.law = "comorphism.coproduct";
  coproduct.statement = "(f⊗f⊗f)∘Δ1 = Δ2∘f";
  coproduct.violations = kernels::sweep(n, [&](std::size_t l, std::vector<Violation>& out) {
    Tensor3 d = tensor3_map(f, f, f, basis_coproduct(C1, l)) - evaluate_delta(C2, f.column(l));
    if (!d.is_zero()) out.push_back(Violation{{l + 1}, "f^3∘Δ1=Δ2∘f", d.entries()});
  });
  MorphismReport out;
  out.laws = conjunction("comorphism", "(f⊗f⊗f)∘Δ1 = Δ2∘f and f∘αi = α'i∘f",
                         {std::move(coproduct),
                          intertwines(f, C1.alpha1(), C2.alpha1(), "comorphism.twist1", "f∘α1 = α'1∘f"),
                          intertwines(f, C1.alpha2(), C2.alpha2(), "comorphism.twist2", "f∘α2 = α'2∘f")});
  out.invertible = f.is_invertible();
  return out;
}

}  // namespace ternalg
