#pragma once

#include <cstddef>

#include "ternalg/law_report.hpp"
#include "ternalg/linalg.hpp"
#include "ternalg/ternary_algebra.hpp"

namespace ternalg {

/// Ternary coalgebra: Delta(e_o) = sum delta(o, r, s, t) e_r (x) e_s (x) e_t, twists alpha1, alpha2.
class TernaryCoalgebra {
 public:
  TernaryCoalgebra() : TernaryCoalgebra(Tensor4::cube(0), Matrix(0), Matrix(0)) {}
  TernaryCoalgebra(Tensor4 delta, Matrix alpha1, Matrix alpha2);
  static TernaryCoalgebra classical(Tensor4 delta);
  static TernaryCoalgebra zero(std::size_t dim);

  std::size_t dim() const { return alpha1_.dim(); }
  const Tensor4& delta() const { return delta_; }
  const Matrix& alpha1() const { return alpha1_; }
  const Matrix& alpha2() const { return alpha2_; }

  TernaryCoalgebra with_twists(Matrix alpha1, Matrix alpha2) const;
  TernaryCoalgebra with_coproduct(Tensor4 delta) const;

  friend bool operator==(const TernaryCoalgebra&, const TernaryCoalgebra&) = default;

 private:
  Tensor4 delta_;
  Matrix alpha1_;
  Matrix alpha2_;
};

Tensor3 evaluate_delta(const TernaryCoalgebra& C, const Vector& x);

/// Compares (Delta⊗α1⊗α2)Delta, (α1⊗Delta⊗α2)Delta and (α1⊗α2⊗Delta)Delta coefficientwise;
/// violations are keyed by (l, i, j, k, q, p).
LawReport check_hom_coassociativity(const TernaryCoalgebra& C, CoassocMode mode);

LawReport check_comultiplicative(const TernaryCoalgebra& C);

/// The coassociativity laws written on structure constants, summing over the
/// single index r only, with free indices (l, i, j, k, s, t, p, q):
///   A = c^l_{rst} c^r_{ijk} y^{1s}_q y^{2t}_p
///   B = c^l_{rst} c^s_{jkq} y^{1r}_i y^{2t}_p
///   C = c^l_{rst} c^t_{kqp} y^{1r}_i y^{2s}_j
/// Partial: A + B + C = 0; Total: A = B = C; Weak: A = C. Here y^{qs}_p = alpha_q(p, s).
LawReport structure_identity_check(const TernaryCoalgebra& C, CoassocMode mode);

/// (f⊗f⊗f)Delta1 = Delta2 f on basis vectors and f alpha_i = alpha'_i f.
MorphismReport check_coalgebra_morphism(const Matrix& f, const TernaryCoalgebra& C1, const TernaryCoalgebra& C2);

}  // namespace ternalg
