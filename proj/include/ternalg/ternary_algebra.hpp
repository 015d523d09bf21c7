#pragma once

#include <cstddef>

#include "ternalg/law_report.hpp"
#include "ternalg/linalg.hpp"

namespace ternalg {

/// Ternary algebra given by structure constants mu(o, r, s, t): mu(e_r, e_s, e_t) = sum_o mu(o,r,s,t) e_o,
/// with twist maps alpha1, alpha2.
class TernaryAlgebra {
 public:
  TernaryAlgebra() : TernaryAlgebra(Tensor4::cube(0), Matrix(0), Matrix(0)) {}
  TernaryAlgebra(Tensor4 mu, Matrix alpha1, Matrix alpha2);
  static TernaryAlgebra classical(Tensor4 mu);
  static TernaryAlgebra zero(std::size_t dim);

  std::size_t dim() const { return alpha1_.dim(); }
  const Tensor4& mu() const { return mu_; }
  const Matrix& alpha1() const { return alpha1_; }
  const Matrix& alpha2() const { return alpha2_; }
  bool is_classical() const { return alpha1_.is_identity() && alpha2_.is_identity(); }

  TernaryAlgebra with_twists(Matrix alpha1, Matrix alpha2) const;
  TernaryAlgebra with_product(Tensor4 mu) const;

  friend bool operator==(const TernaryAlgebra&, const TernaryAlgebra&) = default;

 private:
  Tensor4 mu_;
  Matrix alpha1_;
  Matrix alpha2_;
};

Vector evaluate_mu(const TernaryAlgebra& A, const Vector& x, const Vector& y, const Vector& z);

/// The three re-associations of a five-fold product: left nests at slots 1-3,
/// middle at 2-4, right at 3-5. Total: left = middle = right; Partial: their
/// sum vanishes; Weak: left = right.
LawReport check_hom_associativity(const TernaryAlgebra& A, AssocMode mode);

LawReport check_multiplicative(const TernaryAlgebra& A);

struct MorphismReport {
  LawReport laws;
  bool invertible = false;
  bool passed() const { return laws.passed(); }
  bool is_isomorphism() const { return passed() && invertible; }
};

/// f(mu(x,y,z)) = mu'(f x, f y, f z) on basis triples and f alpha_i = alpha'_i f.
MorphismReport check_algebra_morphism(const Matrix& f, const TernaryAlgebra& A, const TernaryAlgebra& B);

/// Product rho o mu with both twists rho. A must have identity twists and rho must be an endomorphism of mu.
TernaryAlgebra yau_twist(const TernaryAlgebra& A, const Matrix& rho);

struct MultiplicationOperators {
  Matrix left;    // z -> mu(x, y, z)
  Matrix right;   // z -> mu(z, x, y)
  Matrix middle;  // z -> mu(x, z, y)
};

MultiplicationOperators multiplication_operators(const TernaryAlgebra& A, const Vector& x, const Vector& y);

}  // namespace ternalg
