#include "ternalg/ternary_algebra.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ternalg/errors.hpp"
#include "ternalg/kernels.hpp"

namespace ternalg {

namespace {

void require_cube(const Tensor4& t, std::size_t dim, const char* what) {
  for (std::size_t axis = 0; axis < 4; ++axis) require_dim(t.extent(axis), dim, what);
}

std::vector<QuadScalar> entries_of(const Vector& v) { return v.entries(); }

Violation make_violation(std::vector<std::size_t> index0, std::string relation, const Vector& residual) {
  for (auto& i : index0) ++i;
  return Violation{std::move(index0), std::move(relation), entries_of(residual)};
}

// mu(e_r, e_s, e_t) for every basis triple, flattened row-major.
std::vector<Vector> basis_products(const TernaryAlgebra& A) {
  const std::size_t n = A.dim();
  std::vector<Vector> out;
  out.reserve(n * n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        Vector v(n);
        for (std::size_t o = 0; o < n; ++o) v[o] = A.mu()(o, r, s, t);
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.dim(); ++j) out.push_back(m.column(j));
  return out;
}

}  // namespace

TernaryAlgebra::TernaryAlgebra(Tensor4 mu, Matrix alpha1, Matrix alpha2)
    : mu_(std::move(mu)), alpha1_(std::move(alpha1)), alpha2_(std::move(alpha2)) {
  require_cube(mu_, alpha1_.dim(), "algebra product");
  require_dim(alpha2_.dim(), alpha1_.dim(), "algebra twist");
}

TernaryAlgebra TernaryAlgebra::classical(Tensor4 mu) {
  const std::size_t n = mu.extent(0);
  return TernaryAlgebra(std::move(mu), Matrix::identity(n), Matrix::identity(n));
}

TernaryAlgebra TernaryAlgebra::zero(std::size_t dim) { return classical(Tensor4::cube(dim)); }

TernaryAlgebra TernaryAlgebra::with_twists(Matrix alpha1, Matrix alpha2) const {
  return TernaryAlgebra(mu_, std::move(alpha1), std::move(alpha2));
}

TernaryAlgebra TernaryAlgebra::with_product(Tensor4 mu) const {
  return TernaryAlgebra(std::move(mu), alpha1_, alpha2_);
}

Vector evaluate_mu(const TernaryAlgebra& A, const Vector& x, const Vector& y, const Vector& z) {
  return A.mu().apply(x, y, z);
}

LawReport check_hom_associativity(const TernaryAlgebra& A, AssocMode mode) {
  const std::size_t n = A.dim();
  const auto products = basis_products(A);
  const auto a1 = columns(A.alpha1());
  const auto a2 = columns(A.alpha2());
  const auto& mu = A.mu();
  const kernels::IndexSpace space({n, n, n, n, n});

  LawReport report;
  report.law = "assoc." + std::string(mode_name(mode));
  switch (mode) {
    case Mode::Total:
      report.statement = "μ(μ(x1,x2,x3),α1x4,α2x5) = μ(α1x1,μ(x2,x3,x4),α2x5) = μ(α1x1,α2x2,μ(x3,x4,x5))";
      break;
    case Mode::Partial:
      report.statement = "μ(μ(x1,x2,x3),α1x4,α2x5) + μ(α1x1,μ(x2,x3,x4),α2x5) + μ(α1x1,α2x2,μ(x3,x4,x5)) = 0";
      break;
    case Mode::Weak:
      report.statement = "μ(μ(x1,x2,x3),α1x4,α2x5) = μ(α1x1,α2x2,μ(x3,x4,x5))";
      break;
  }

  auto triple = [n](std::size_t r, std::size_t s, std::size_t t) { return (r * n + s) * n + t; };
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t i[5];
    space.decode(flat, i);
    const Vector left = mu.apply(products[triple(i[0], i[1], i[2])], a1[i[3]], a2[i[4]]);
    const Vector right = mu.apply(a1[i[0]], a2[i[1]], products[triple(i[2], i[3], i[4])]);
    if (mode == Mode::Weak) {
      Vector d = left - right;
      if (!d.is_zero()) out.push_back(make_violation({i, i + 5}, "left=right", d));
      return;
    }
    const Vector middle = mu.apply(a1[i[0]], products[triple(i[1], i[2], i[3])], a2[i[4]]);
    if (mode == Mode::Partial) {
      Vector sum = left + middle + right;
      if (!sum.is_zero()) out.push_back(make_violation({i, i + 5}, "left+middle+right=0", sum));
      return;
    }
    Vector d1 = left - middle;
    if (!d1.is_zero()) out.push_back(make_violation({i, i + 5}, "left=middle", d1));
    Vector d2 = middle - right;
    if (!d2.is_zero()) out.push_back(make_violation({i, i + 5}, "middle=right", d2));
  });
  return report;
}

namespace {

LawReport twist_commutes_with_product(const TernaryAlgebra& A, const Matrix& alpha, const std::string& name,
                                      const std::string& label) {
  const std::size_t n = A.dim();
  const auto products = basis_products(A);
  const auto cols = columns(alpha);
  const kernels::IndexSpace space({n, n, n});
  LawReport report;
  report.law = name;
  report.statement = label + "∘μ = μ∘" + label + "⊗" + label + "⊗" + label;
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t i[3];
    space.decode(flat, i);
    Vector d = alpha.apply(products[flat]) - A.mu().apply(cols[i[0]], cols[i[1]], cols[i[2]]);
    if (!d.is_zero()) out.push_back(make_violation({i, i + 3}, label + "∘μ=μ∘" + label + "^3", d));
  });
  return report;
}

LawReport product_morphism(const Matrix& f, const TernaryAlgebra& A, const TernaryAlgebra& B) {
  const std::size_t n = A.dim();
  const auto products = basis_products(A);
  const auto fc = columns(f);
  const kernels::IndexSpace space({n, n, n});
  LawReport report;
  report.law = "morphism.product";
  report.statement = "f(μ(x,y,z)) = μ'(f x,f y,f z)";
  report.violations = kernels::sweep(space.size(), [&](std::size_t flat, std::vector<Violation>& out) {
    std::size_t i[3];
    space.decode(flat, i);
    Vector d = f.apply(products[flat]) - B.mu().apply(fc[i[0]], fc[i[1]], fc[i[2]]);
    if (!d.is_zero()) out.push_back(make_violation({i, i + 3}, "f∘μ=μ'∘f^3", d));
  });
  return report;
}

LawReport intertwines(const Matrix& f, const Matrix& alpha, const Matrix& beta, std::string name,
                      std::string statement) {
  LawReport report;
  report.law = std::move(name);
  report.statement = statement;
  const Matrix d = f * alpha - beta * f;
  for (std::size_t j = 0; j < d.dim(); ++j) {
    Vector col = d.column(j);
    if (!col.is_zero()) report.violations.push_back(make_violation({j}, statement, col));
  }
  return report;
}

}  // namespace

LawReport check_multiplicative(const TernaryAlgebra& A) {
  return conjunction("multiplicative", "αi∘μ = μ∘αi⊗αi⊗αi, i = 1,2",
                     {twist_commutes_with_product(A, A.alpha1(), "multiplicative.alpha1", "α1"),
                      twist_commutes_with_product(A, A.alpha2(), "multiplicative.alpha2", "α2")});
}

MorphismReport check_algebra_morphism(const Matrix& f, const TernaryAlgebra& A, const TernaryAlgebra& B) {
  require_dim(B.dim(), A.dim(), "algebra morphism target");
  require_dim(f.dim(), A.dim(), "algebra morphism map");
  MorphismReport out;
  out.laws = conjunction("morphism", "f∘μ = μ'∘f⊗f⊗f and f∘αi = α'i∘f",
                         {product_morphism(f, A, B),
                          intertwines(f, A.alpha1(), B.alpha1(), "morphism.twist1", "f∘α1 = α'1∘f"),
                          intertwines(f, A.alpha2(), B.alpha2(), "morphism.twist2", "f∘α2 = α'2∘f")});
  out.invertible = f.is_invertible();
  return out;
}

TernaryAlgebra yau_twist(const TernaryAlgebra& A, const Matrix& rho) {
  require_dim(rho.dim(), A.dim(), "twisting map");
  const TernaryAlgebra plain = TernaryAlgebra::classical(A.mu());
  const LawReport endo = product_morphism(rho, plain, plain);
  if (!endo.passed()) {
    const auto& idx = endo.violations.front().index;
    throw NotEndomorphism({idx[0], idx[1], idx[2]},
                          "twisting map is not an endomorphism of the product: fails at (" +
                              std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                              std::to_string(idx[2]) + ")");
  }
  if (!A.is_classical()) {
    throw PreconditionNotClassical("twisting needs an algebra with identity twist maps");
  }
  return TernaryAlgebra(A.mu().map_output(rho), rho, rho);
}

MultiplicationOperators multiplication_operators(const TernaryAlgebra& A, const Vector& x, const Vector& y) {
  const std::size_t n = A.dim();
  require_dim(x.dim(), n, "multiplication operator argument");
  require_dim(y.dim(), n, "multiplication operator argument");
  std::vector<Vector> l, r, m;
  for (std::size_t j = 0; j < n; ++j) {
    const Vector e = Vector::basis(n, j);
    l.push_back(A.mu().apply(x, y, e));
    r.push_back(A.mu().apply(e, x, y));
    m.push_back(A.mu().apply(x, e, y));
  }
  return {Matrix::from_columns(l), Matrix::from_columns(r), Matrix::from_columns(m)};
}

}  // namespace ternalg
