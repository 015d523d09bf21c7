#pragma once

#include <cstddef>
#include <vector>

#include "ternalg/law_report.hpp"
#include "ternalg/ternary_algebra.hpp"
#include "ternalg/ternary_coalgebra.hpp"

namespace ternalg {

/// Algebra and coalgebra on one space sharing the twist maps.
class TernaryBialgebra {
 public:
  TernaryBialgebra() = default;
  TernaryBialgebra(TernaryAlgebra alg, TernaryCoalgebra coalg);
  TernaryBialgebra(Tensor4 mu, Tensor4 delta, Matrix alpha1, Matrix alpha2);

  std::size_t dim() const { return alg_.dim(); }
  const TernaryAlgebra& alg() const { return alg_; }
  const TernaryCoalgebra& coalg() const { return coalg_; }
  const Matrix& alpha1() const { return alg_.alpha1(); }
  const Matrix& alpha2() const { return alg_.alpha2(); }
  friend bool operator==(const TernaryBialgebra&, const TernaryBialgebra&) = default;

 private:
  TernaryAlgebra alg_;
  TernaryCoalgebra coalg_;
};

/// Flip a⊗b -> b⊗a on a dim×dim coefficient array.
struct ExchangeOp {
  static std::vector<QuadScalar> apply(const std::vector<QuadScalar>& t, std::size_t dim);
};

/// Δμ(x,y,z) = (L(α1x,α2y)⊗α1⊗α2)Δz + (α1⊗M(α1x,α2z)⊗α2)Δy + (α1⊗α2⊗R(α1y,α2z))Δx on basis triples.
LawReport check_compatibility(const TernaryBialgebra& B);

/// The same law as a composition of maps on the fivefold tensor power, with (σ⊗id⊗σ) flipping
/// slots (1,2) and (4,5) in the middle term.
LawReport check_compatibility_sigma_form(const TernaryBialgebra& B);

/// Associativity, coassociativity (both in `mode`) and compatibility.
LawReport check_bialgebra(const TernaryBialgebra& B, Mode mode);

TernaryBialgebra sign_variant(const TernaryBialgebra& B, bool flip_mu, bool flip_delta);

/// Product from the dual coproduct and coproduct from the dual product, twists transposed.
TernaryBialgebra dualize_bialgebra(const TernaryBialgebra& B);

/// f is an invertible algebra morphism and a coalgebra morphism.
LawReport check_bialgebra_equivalence(const Matrix& f, const TernaryBialgebra& B1, const TernaryBialgebra& B2);

/// Compatibility written on structure constants, free indices (i,j,k,r,s,t,p,q,u,v), summing over l:
///   a^{rst}_k c^l_{pqr} y1^i_p y2^j_q y1^s_u y2^t_v + a^{rst}_j c^u_{psq} y1^i_p y2^k_q y1^r_l y2^t_v
///   + a^{rst}_i c^v_{tpq} y1^j_p y2^k_q y1^r_l y2^s_u − a^{rst}_l c^l_{ijk} = 0
/// with a^{rst}_l = Δ(l,r,s,t), c^l_{rst} = μ(l,r,s,t), yq^j_k = alpha_q(k, j).
LawReport compatibility_identity_check(const TernaryBialgebra& B);

}  // namespace ternalg
