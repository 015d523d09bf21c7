#pragma once

#include "ternalg/law_report.hpp"
#include "ternalg/ternary_algebra.hpp"
#include "ternalg/trimodule.hpp"

namespace ternalg {

/// Two algebras acting on each other. a_on_b has A as the acting algebra and B
/// (with B's twists) as the module; b_on_a the other way round.
struct MatchedPairData {
  TernaryAlgebra A;
  TernaryAlgebra B;
  TrimoduleActions a_on_b;
  TrimoduleActions b_on_a;

  void validate() const;
  BihomModule module_b() const { return BihomModule(B.alpha1(), B.alpha2()); }
  BihomModule module_a() const { return BihomModule(A.alpha1(), A.alpha2()); }
};

/// Parts, in order:
///   matched_pair.prerequisites   A and B pass `mode`; both action triples satisfy the quasi-trimodule equations
///   matched_pair.B_at_pq         ten conditions on products of three elements of A and two of B,
///                                the B elements sitting at argument slots p and q (A-valued)
///   matched_pair.A_at_pq         ten conditions with two elements of A at slots p, q (B-valued)
/// and with `full` the braiding/intertwining extras of both action triples.
LawReport check_matched_pair(const MatchedPairData& mp, Mode mode, bool full);

/// Product on A ⊕ B:
///   [μA(x,y,z) + L_B(a,b)z + M_B(a,c)y + R_B(b,c)x] + [μB(a,b,c) + L_A(x,y)c + M_A(x,z)b + R_A(y,z)a]
/// with twists α ⊕ β. A occupies the first block.
TernaryAlgebra bicrossed_product(const MatchedPairData& mp);

}  // namespace ternalg
