#include "ternalg/bialgebra.hpp"

#include <array>
#include <string>
#include <utility>

#include "ternalg/duality.hpp"
#include "ternalg/errors.hpp"
#include "ternalg/kernels.hpp"

namespace ternalg {

TernaryBialgebra::TernaryBialgebra(TernaryAlgebra alg, TernaryCoalgebra coalg)
    : alg_(std::move(alg)), coalg_(std::move(coalg)) {
  require_dim(coalg_.dim(), alg_.dim(), "bialgebra coalgebra");
  if (!(alg_.alpha1() == coalg_.alpha1()) || !(alg_.alpha2() == coalg_.alpha2())) {
    throw DimensionMismatch("algebra and coalgebra must share their twist maps");
  }
}

TernaryBialgebra::TernaryBialgebra(Tensor4 mu, Tensor4 delta, Matrix alpha1, Matrix alpha2)
    : TernaryBialgebra(TernaryAlgebra(std::move(mu), alpha1, alpha2),
                       TernaryCoalgebra(std::move(delta), alpha1, alpha2)) {}

std::vector<QuadScalar> ExchangeOp::apply(const std::vector<QuadScalar>& t, std::size_t dim) {
  require_dim(t.size(), dim * dim, "exchange operand");
  std::vector<QuadScalar> out(t.size());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out[j * dim + i] = t[i * dim + j];
  }
  return out;
}

namespace {

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.dim(); ++j) out.push_back(m.column(j));
  return out;
}

Tensor3 coproduct_of_basis(const TernaryCoalgebra& C, std::size_t l) {
  return evaluate_delta(C, Vector::basis(C.dim(), l));
}

}  // namespace

LawReport check_compatibility(const TernaryBialgebra& B) {
  const std::size_t n = B.dim();
  const auto& A = B.alg();
  const auto& C = B.coalg();
  const Matrix& a1 = B.alpha1();
  const Matrix& a2 = B.alpha2();
  const auto c1 = columns(a1);
  const auto c2 = columns(a2);
  const kernels::IndexSpace space({n, n, n});
  LawReport report;
  report.law = "compat";
  report.statement = "Δμ(x,y,z) = (L(α1x,α2y)⊗α1⊗α2)Δz + (α1⊗M(α1x,α2z)⊗α2)Δy + (α1⊗α2⊗R(α1y,α2z))Δx";
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t t[3];
    space.decode(flat, t);
    const std::size_t i = t[0], j = t[1], k = t[2];
    const Vector x = Vector::basis(n, i), y = Vector::basis(n, j), z = Vector::basis(n, k);
    Tensor3 residual = evaluate_delta(C, evaluate_mu(A, x, y, z));
    const Matrix left = multiplication_operators(A, c1[i], c2[j]).left;
    const Matrix middle = multiplication_operators(A, c1[i], c2[k]).middle;
    const Matrix right = multiplication_operators(A, c1[j], c2[k]).right;
    residual -= tensor3_map(left, a1, a2, coproduct_of_basis(C, k));
    residual -= tensor3_map(a1, middle, a2, coproduct_of_basis(C, j));
    residual -= tensor3_map(a1, a2, right, coproduct_of_basis(C, i));
    if (!residual.is_zero()) out.push_back(Violation{{i + 1, j + 1, k + 1}, "Δμ=rhs", residual.entries()});
  });
  return report;
}

namespace {

// Element of the fivefold tensor power, used only to evaluate the composed-map form literally.
class Tensor5 {
 public:
  explicit Tensor5(std::size_t dim) : dim_(dim), entries_(dim * dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  QuadScalar& at(const std::array<std::size_t, 5>& i) { return entries_[offset(i)]; }
  const QuadScalar& flat(std::size_t k) const { return entries_[k]; }
  std::array<std::size_t, 5> decode(std::size_t k) const {
    std::array<std::size_t, 5> i{};
    for (std::size_t axis = 5; axis-- > 0;) {
      i[axis] = k % dim_;
      k /= dim_;
    }
    return i;
  }

  // Places the triple tensor t at slots [p, p+3) and the vectors u, w in the two remaining slots, in order.
  static Tensor5 embed(std::size_t p, const Tensor3& t, const Vector& u, const Vector& w) {
    const std::size_t n = t.dim();
    Tensor5 out(n);
    for (std::size_t k = 0; k < out.size(); ++k) {
      const auto i = out.decode(k);
      std::array<std::size_t, 2> rest{};
      std::size_t r = 0;
      for (std::size_t axis = 0; axis < 5; ++axis) {
        if (axis < p || axis >= p + 3) rest[r++] = i[axis];
      }
      const QuadScalar& c = t(i[p], i[p + 1], i[p + 2]);
      if (c.is_zero() || u[rest[0]].is_zero() || w[rest[1]].is_zero()) continue;
      out.entries_[k] = c * u[rest[0]] * w[rest[1]];
    }
    return out;
  }

  // (σ⊗id⊗σ): swaps slots 1,2 and slots 4,5.
  Tensor5 exchange_outer_pairs() const {
    Tensor5 out(dim_);
    for (std::size_t k = 0; k < size(); ++k) {
      if (entries_[k].is_zero()) continue;
      const auto i = decode(k);
      out.at({i[1], i[0], i[2], i[4], i[3]}) = entries_[k];
    }
    return out;
  }

  // Applies μ to slots [p, p+3) and f, g to the remaining two slots in order.
  Tensor3 collapse(std::size_t p, const TernaryAlgebra& A, const Matrix& f, const Matrix& g) const {
    Tensor3 out(dim_);
    for (std::size_t k = 0; k < size(); ++k) {
      const QuadScalar& c = entries_[k];
      if (c.is_zero()) continue;
      const auto i = decode(k);
      std::array<std::size_t, 2> rest{};
      std::size_t r = 0;
      for (std::size_t axis = 0; axis < 5; ++axis) {
        if (axis < p || axis >= p + 3) rest[r++] = i[axis];
      }
      const Vector prod = A.mu().apply(Vector::basis(dim_, i[p]), Vector::basis(dim_, i[p + 1]),
                                       Vector::basis(dim_, i[p + 2]));
      const Vector fu = f.column(rest[0]);
      const Vector gw = g.column(rest[1]);
      Tensor3 piece = p == 0   ? Tensor3::outer(prod, fu, gw)
                      : p == 1 ? Tensor3::outer(fu, prod, gw)
                               : Tensor3::outer(fu, gw, prod);
      for (std::size_t a = 0; a < dim_; ++a) {
        for (std::size_t b = 0; b < dim_; ++b) {
          for (std::size_t d = 0; d < dim_; ++d) {
            if (!piece(a, b, d).is_zero()) out(a, b, d) += c * piece(a, b, d);
          }
        }
      }
    }
    return out;
  }

 private:
  std::size_t offset(const std::array<std::size_t, 5>& i) const {
    return (((i[0] * dim_ + i[1]) * dim_ + i[2]) * dim_ + i[3]) * dim_ + i[4];
  }

  std::size_t dim_;
  std::vector<QuadScalar> entries_;
};

}  // namespace

LawReport check_compatibility_sigma_form(const TernaryBialgebra& B) {
  const std::size_t n = B.dim();
  const auto& A = B.alg();
  const auto& C = B.coalg();
  const Matrix& a1 = B.alpha1();
  const Matrix& a2 = B.alpha2();
  const kernels::IndexSpace space({n, n, n});
  LawReport report;
  report.law = "compat.sigma_form";
  report.statement =
      "Δμ = (μ⊗α1⊗α2)(α1⊗α2⊗Δ) + (α1⊗μ⊗α2)(σ⊗id⊗σ)(α1⊗Δ⊗α2) + (α1⊗α2⊗μ)(Δ⊗α1⊗α2)";
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t t[3];
    space.decode(flat, t);
    const Vector x = Vector::basis(n, t[0]), y = Vector::basis(n, t[1]), z = Vector::basis(n, t[2]);
    const Tensor3 lhs = evaluate_delta(C, evaluate_mu(A, x, y, z));
    // (α1⊗α2⊗Δ)(x⊗y⊗z) = α1x ⊗ α2y ⊗ Δz, then μ on the first three slots.
    const Tensor5 first = Tensor5::embed(2, evaluate_delta(C, z), a1.apply(x), a2.apply(y));
    // (α1⊗Δ⊗α2)(x⊗y⊗z) = α1x ⊗ Δy ⊗ α2z, exchanged, then μ on the middle three slots.
    const Tensor5 second = Tensor5::embed(1, evaluate_delta(C, y), a1.apply(x), a2.apply(z)).exchange_outer_pairs();
    // (Δ⊗α1⊗α2)(x⊗y⊗z) = Δx ⊗ α1y ⊗ α2z, then μ on the last three slots.
    const Tensor5 third = Tensor5::embed(0, evaluate_delta(C, x), a1.apply(y), a2.apply(z));
    Tensor3 residual = lhs - first.collapse(0, A, a1, a2) - second.collapse(1, A, a1, a2) -
                       third.collapse(2, A, a1, a2);
    if (!residual.is_zero()) {
      out.push_back(Violation{{t[0] + 1, t[1] + 1, t[2] + 1}, "Δμ=rhs", residual.entries()});
    }
  });
  return report;
}

LawReport check_bialgebra(const TernaryBialgebra& B, Mode mode) {
  return conjunction("bialgebra." + std::string(mode_name(mode)),
                     "hom-associative, hom-coassociative and compatible",
                     {check_hom_associativity(B.alg(), mode), check_hom_coassociativity(B.coalg(), mode),
                      check_compatibility(B)});
}

TernaryBialgebra sign_variant(const TernaryBialgebra& B, bool flip_mu, bool flip_delta) {
  return TernaryBialgebra(flip_mu ? -B.alg().mu() : B.alg().mu(), flip_delta ? -B.coalg().delta() : B.coalg().delta(),
                          B.alpha1(), B.alpha2());
}

TernaryBialgebra dualize_bialgebra(const TernaryBialgebra& B) {
  return TernaryBialgebra(dualize_coalgebra(B.coalg()), dualize_algebra(B.alg()));
}

LawReport check_bialgebra_equivalence(const Matrix& f, const TernaryBialgebra& B1, const TernaryBialgebra& B2) {
  require_dim(B2.dim(), B1.dim(), "equivalence target");
  MorphismReport alg = check_algebra_morphism(f, B1.alg(), B2.alg());
  MorphismReport coalg = check_coalgebra_morphism(f, B1.coalg(), B2.coalg());
  LawReport invertible;
  invertible.law = "equivalence.invertible";
  invertible.statement = "f is a linear isomorphism";
  if (!alg.invertible) invertible.violations.push_back(Violation{{}, "det f = 0", {}});
  return conjunction("equivalence", "f is an invertible algebra and coalgebra morphism",
                     {std::move(alg.laws), std::move(coalg.laws), std::move(invertible)});
}

LawReport compatibility_identity_check(const TernaryBialgebra& B) {
  const std::size_t n = B.dim();
  const Tensor4& c = B.alg().mu();
  const Tensor4& a = B.coalg().delta();
  const Matrix& y1 = B.alpha1();
  const Matrix& y2 = B.alpha2();
  const kernels::IndexSpace space(std::vector<std::size_t>(10, n));
  LawReport report;
  report.law = "compat.structure_identity";
  report.statement =
      "Σ_l [a^rst_k c^l_pqr y1^i_p y2^j_q y1^s_u y2^t_v + a^rst_j c^u_psq y1^i_p y2^k_q y1^r_l y2^t_v"
      " + a^rst_i c^v_tpq y1^j_p y2^k_q y1^r_l y2^s_u − a^rst_l c^l_ijk] = 0";
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t x[10];
    space.decode(flat, x);
    const std::size_t i = x[0], j = x[1], k = x[2], r = x[3], s = x[4], t = x[5], p = x[6], q = x[7], u = x[8],
                      v = x[9];
    QuadScalar sum;
    for (std::size_t l = 0; l < n; ++l) {
      if (!a(k, r, s, t).is_zero()) sum += a(k, r, s, t) * c(l, p, q, r) * y1(p, i) * y2(q, j) * y1(u, s) * y2(v, t);
      if (!a(j, r, s, t).is_zero()) sum += a(j, r, s, t) * c(u, p, s, q) * y1(p, i) * y2(q, k) * y1(l, r) * y2(v, t);
      if (!a(i, r, s, t).is_zero()) sum += a(i, r, s, t) * c(v, t, p, q) * y1(p, j) * y2(q, k) * y1(l, r) * y2(u, s);
      if (!a(l, r, s, t).is_zero()) sum -= a(l, r, s, t) * c(l, i, j, k);
    }
    if (!sum.is_zero()) {
      std::vector<std::size_t> key(x, x + 10);
      for (auto& e : key) ++e;
      out.push_back(Violation{std::move(key), "sum=0", {sum}});
    }
  });
  return report;
}

}  // namespace ternalg
