#pragma once

#include <cstddef>
#include <string>

#include "ternalg/law_report.hpp"
#include "ternalg/linalg.hpp"
#include "ternalg/ternary_algebra.hpp"

namespace ternalg {

/// Vector space V with two twist maps.
class BihomModule {
 public:
  BihomModule() = default;
  BihomModule(Matrix beta1, Matrix beta2);
  static BihomModule plain(std::size_t dim_v);

  std::size_t dim() const { return beta1_.dim(); }
  const Matrix& beta1() const { return beta1_; }
  const Matrix& beta2() const { return beta2_; }
  friend bool operator==(const BihomModule&, const BihomModule&) = default;

 private:
  Matrix beta1_;
  Matrix beta2_;
};

/// Left, middle and right actions stored uncurried:
///   L(o, x, y, v) for L(x,y)(v),  M(o, x, v, y) for M(x,y)(v),  R(o, v, x, y) for R(x,y)(v).
struct TrimoduleActions {
  Tensor4 L;
  Tensor4 M;
  Tensor4 R;

  static TrimoduleActions zero(std::size_t dim_a, std::size_t dim_v);
  // Throws DimensionMismatch unless every extent matches.
  void validate(std::size_t dim_a, std::size_t dim_v) const;
  friend bool operator==(const TrimoduleActions&, const TrimoduleActions&) = default;
};

Vector act_left(const TrimoduleActions& act, const Vector& x, const Vector& y, const Vector& v);
Vector act_middle(const TrimoduleActions& act, const Vector& x, const Vector& y, const Vector& v);
Vector act_right(const TrimoduleActions& act, const Vector& x, const Vector& y, const Vector& v);

enum class TrimoduleLevel { Quasi, Full };

/// Sub-laws, in order:
///   <prefix>.base_algebra    the algebra itself passes `mode`
///   <prefix>.v_at_5 .. v_at_3   five-fold products with one module element at the named slot
/// and at level Full additionally
///   <prefix>.braiding, <prefix>.intertwine_left/_middle/_right.
/// Only Total and Partial are defined; Weak throws UnsupportedMode.
LawReport check_trimodule(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act, Mode mode,
                          TrimoduleLevel level, const std::string& prefix = "trimodule");

/// The five slot equations only, without the base-algebra prerequisite.
LawReport check_trimodule_slots(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act,
                                Mode mode, const std::string& prefix);

/// Braiding of the middle action and twist intertwining of all three actions.
LawReport check_trimodule_extras(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act,
                                 const std::string& prefix);

enum class RegularKind { LeftOnly, RightOnly, LMR };

struct RegularModule {
  BihomModule module;
  TrimoduleActions actions;
};

/// Actions of A on itself by its own product; throws NotMultiplicative.
RegularModule regular_actions(const TernaryAlgebra& A, RegularKind which);

/// Product on A ⊕ V: μ(x,y,z) + L(x,y)c + M(x,z)b + R(y,z)a with twists α ⊕ β; A occupies the first block.
TernaryAlgebra semidirect_product(const TernaryAlgebra& A, const BihomModule& V, const TrimoduleActions& act);

Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace ternalg
