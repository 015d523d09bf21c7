#include "doctest.h"
#include "support/fixtures.hpp"
#include "ternalg/matched_pair.hpp"

using namespace ternalg;
namespace fx = fixtures;

namespace {

MatchedPairData trivial(const TernaryAlgebra& A, const TernaryAlgebra& B) {
  return {A, B, TrimoduleActions::zero(A.dim(), B.dim()), TrimoduleActions::zero(B.dim(), A.dim())};
}

}  // namespace

TEST_CASE("trivial actions on a zero partner") {
  const TernaryAlgebra B = TernaryAlgebra::zero(1).with_twists(Matrix(1), Matrix(1));
  const MatchedPairData mp = trivial(fx::t2h1(), B);
  const LawReport r = check_matched_pair(mp, Mode::Total, false);
  CHECK(r.passed());
  CHECK(r.parts.size() == 21);
  CHECK(r.find("matched_pair.B_at_12") != nullptr);
  CHECK(r.find("matched_pair.A_at_45") != nullptr);
  CHECK(check_hom_associativity(bicrossed_product(mp), Mode::Total).passed());
}

TEST_CASE("bicrossed product with zero cross-actions is the block sum") {
  const MatchedPairData mp = trivial(fx::t2(), fx::p2());
  const TernaryAlgebra P = bicrossed_product(mp);
  CHECK(P.dim() == 4);
  const Vector a = Vector::basis(4, 2);
  CHECK(evaluate_mu(P, a, a, a) == Vector::basis(4, 3));
  CHECK(evaluate_mu(P, Vector::basis(4, 1), Vector::basis(4, 1), Vector::basis(4, 1)) == Vector{1, 2, 0, 0});
  CHECK(evaluate_mu(P, Vector::basis(4, 0), a, a).is_zero());
  CHECK(check_matched_pair(mp, Mode::Total, true).passed());
}

TEST_CASE("regular cross-actions: condition verdict equals product verdict") {
  const TernaryAlgebra A = fx::t2h1();
  MatchedPairData mp = trivial(A, A);
  mp.a_on_b = regular_actions(A, RegularKind::LMR).actions;
  const bool cond = check_matched_pair(mp, Mode::Total, false).passed();
  CHECK(cond == check_hom_associativity(bicrossed_product(mp), Mode::Total).passed());
}

TEST_CASE("zero B reproduces the semidirect product") {
  const TernaryAlgebra A = fx::t2h1();
  const RegularModule reg = regular_actions(A, RegularKind::LMR);
  MatchedPairData mp = trivial(A, TernaryAlgebra::zero(2).with_twists(fx::rho1(), fx::rho1()));
  mp.a_on_b = reg.actions;
  CHECK(bicrossed_product(mp) == semidirect_product(A, reg.module, reg.actions));
}

TEST_CASE("perturbed cross-action fails a named condition") {
  const TernaryAlgebra A = fx::t2h1();
  MatchedPairData mp = trivial(A, TernaryAlgebra::zero(2).with_twists(fx::rho1(), fx::rho1()));
  mp.a_on_b = regular_actions(A, RegularKind::LMR).actions;
  REQUIRE(check_matched_pair(mp, Mode::Total, false).passed());
  mp.b_on_a.L(0, 0, 0, 0) = 1;
  const LawReport r = check_matched_pair(mp, Mode::Total, false);
  CHECK_FALSE(r.passed());
  bool named = false;
  for (const auto& law : r.failing_laws()) named = named || law.rfind("matched_pair.", 0) == 0;
  CHECK(named);
  CHECK_FALSE(check_hom_associativity(bicrossed_product(mp), Mode::Total).passed());
}
