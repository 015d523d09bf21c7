#include "doctest.h"
#include "support/fixtures.hpp"
#include "ternalg/bialgebra.hpp"
#include "ternalg/errors.hpp"

using namespace ternalg;
namespace fx = fixtures;

TEST_CASE("PB2 is a bialgebra") {
  CHECK(check_compatibility(fx::pb2()).passed());
  CHECK(check_compatibility_sigma_form(fx::pb2()).passed());
  CHECK(compatibility_identity_check(fx::pb2()).passed());
  CHECK(check_bialgebra(fx::pb2(), Mode::Partial).passed());
}

TEST_CASE("PB2 is also total, since every nested product vanishes") {
  // mu(mu(e1,e1,e1), rho e1, rho e1) = mu(e2, e1+e2, e1+e2) = 0, and likewise for the other two patterns.
  const LawReport r = check_bialgebra(fx::pb2(), Mode::Total);
  CHECK(r.passed());
  CHECK(r.find("assoc.total")->passed());
}

TEST_CASE("TB2 is associative and coassociative but not compatible") {
  const TernaryBialgebra B = fx::tb2();
  CHECK(check_hom_associativity(B.alg(), Mode::Total).passed());
  CHECK(check_hom_coassociativity(B.coalg(), Mode::Total).passed());
  const LawReport c = check_compatibility(B);
  CHECK(c.violations.size() == 8);
  CHECK(c.violations.front().index == std::vector<std::size_t>{1, 1, 1});
  CHECK(c.violations.front().residual == std::vector<QuadScalar>{-38, 25, 25, -13, 25, -13, -13, 12});
  const LawReport sigma = check_compatibility_sigma_form(B);
  CHECK(sigma.violations.size() == 8);
  CHECK(sigma.violations.front().residual == c.violations.front().residual);
}

TEST_CASE("trivial coproduct or product is always compatible") {
  for (const TernaryAlgebra& A : {fx::t2(), fx::t2h1(), fx::t2h2(), fx::ep1()}) {
    const TernaryBialgebra B(A, TernaryCoalgebra::zero(2).with_twists(A.alpha1(), A.alpha2()));
    CHECK(check_compatibility(B).passed());
    CHECK(check_compatibility_sigma_form(B).passed());
    CHECK(compatibility_identity_check(B).passed());
  }
  const TernaryBialgebra B(TernaryAlgebra::zero(2).with_twists(fx::rho1(), fx::rho1()), fx::tb2().coalg());
  CHECK(check_compatibility(B).passed());
  const TernaryBialgebra p2_only(fx::p2_product(), Tensor4::cube(2), fx::pb2_twist(), fx::pb2_twist());
  CHECK(check_bialgebra(p2_only, Mode::Partial).passed());
}

TEST_CASE("changing the coproduct of e2 breaks compatibility at (1,1,1)") {
  Tensor4 delta = fx::pb2().coalg().delta();
  delta(1, 0, 0, 0) = 1;
  const TernaryBialgebra B(fx::p2_product(), delta, fx::pb2_twist(), fx::pb2_twist());
  const LawReport r = check_compatibility(B);
  REQUIRE_FALSE(r.passed());
  CHECK(r.violations.front().index == std::vector<std::size_t>{1, 1, 1});
  CHECK_FALSE(check_compatibility_sigma_form(B).passed());
}

TEST_CASE("sign variants") {
  CHECK(sign_variant(fx::pb2(), false, false) == fx::pb2());
  CHECK(check_bialgebra(sign_variant(fx::pb2(), true, false), Mode::Partial).passed());
  CHECK(check_bialgebra(sign_variant(fx::pb2(), false, true), Mode::Partial).passed());
  CHECK(check_bialgebra(sign_variant(fx::pb2(), true, true), Mode::Partial).passed());
  // TB2 keeps failing the compatibility clause, and only that clause, under every sign change.
  for (int s = 0; s < 4; ++s) {
    const LawReport r = check_bialgebra(sign_variant(fx::tb2(), s & 1, s & 2), Mode::Total);
    CHECK(r.failing_laws() == std::vector<std::string>{"compat"});
  }
  const TernaryBialgebra neg = sign_variant(fx::pb2(), true, true);
  CHECK(neg.alg().mu() == -fx::pb2().alg().mu());
  CHECK(neg.coalg().delta() == -fx::pb2().coalg().delta());
}

TEST_CASE("dual bialgebras") {
  const TernaryBialgebra D = dualize_bialgebra(fx::pb2());
  CHECK(D == fx::eq2());
  CHECK(evaluate_delta(D.coalg(), Vector::basis(2, 1)) == Tensor3::basis(2, 0, 0, 0));
  CHECK(D.alpha1().column(1) == Vector{1, 1});
  const TernaryBialgebra T = dualize_bialgebra(fx::tb2());
  CHECK(T.alg().mu() == fx::tb2().coalg().delta());
  CHECK(T.coalg().delta() == fx::tb2().alg().mu());
  CHECK(dualize_bialgebra(T) == fx::tb2());
  CHECK(check_bialgebra(D, Mode::Partial).passed());
}

TEST_CASE("equivalence") {
  const LawReport r = check_bialgebra_equivalence(fx::swap2(), fx::eq1(), fx::eq2());
  CHECK(r.passed());
  CHECK(r.find("equivalence.invertible")->passed());
  CHECK(check_bialgebra_equivalence(Matrix::identity(2), fx::tb2(), fx::tb2()).passed());
  CHECK_FALSE(check_bialgebra_equivalence(fx::swap2(), fx::pb2(), fx::pb2()).passed());
  const TernaryBialgebra zero(TernaryAlgebra::zero(2), TernaryCoalgebra::zero(2));
  const LawReport singular = check_bialgebra_equivalence(Matrix(2), zero, zero);
  CHECK_FALSE(singular.passed());
  CHECK_FALSE(singular.find("equivalence.invertible")->passed());
}

TEST_CASE("twist maps must be shared") {
  CHECK_THROWS_AS(TernaryBialgebra(fx::t2h1(), TernaryCoalgebra::zero(2)), DimensionMismatch);
}

TEST_CASE("exchange operator") {
  const std::vector<QuadScalar> t{1, 2, 3, 4};
  CHECK(ExchangeOp::apply(t, 2) == std::vector<QuadScalar>{1, 3, 2, 4});
  CHECK(ExchangeOp::apply(ExchangeOp::apply(t, 2), 2) == t);
}
