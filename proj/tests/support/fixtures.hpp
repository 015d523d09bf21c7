#pragma once

// Worked-example structures, entered coefficient by coefficient from the source tables.
// Indices here are 0-based: e1 -> 0, e2 -> 1.

#include <string>
#include <vector>

#include "ternalg/bialgebra.hpp"
#include "ternalg/linalg.hpp"
#include "ternalg/ternary_algebra.hpp"

namespace fixtures {

using ternalg::Matrix;
using ternalg::QuadScalar;
using ternalg::Tensor4;
using ternalg::TernaryAlgebra;
using ternalg::TernaryBialgebra;

inline QuadScalar q(long n, long d = 1) { return QuadScalar::ratio(n, d); }
// n/d * sqrt(5)
inline QuadScalar s5(long n, long d = 1) { return QuadScalar(0, ternalg::Rational(n, d), 5); }

inline Matrix rows(std::vector<std::vector<QuadScalar>> r) { return Matrix::from_rows(r); }

// mu(e1,e1,e1) = e2, everything else zero.
inline Tensor4 p2_product() {
  Tensor4 t = Tensor4::cube(2);
  t(1, 0, 0, 0) = 1;
  return t;
}

inline TernaryAlgebra p2() { return TernaryAlgebra::classical(p2_product()); }

inline Matrix rho_ep1() { return rows({{2, 0}, {3, 8}}); }

inline TernaryAlgebra ep1() {
  Tensor4 t = Tensor4::cube(2);
  t(1, 0, 0, 0) = 8;
  return TernaryAlgebra(t, rho_ep1(), rho_ep1());
}

// Fills a product symmetric in its arguments from the values at 111, 112, 122, 222.
inline Tensor4 symmetric(const std::vector<std::vector<QuadScalar>>& by_weight) {
  Tensor4 t = Tensor4::cube(2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t u = 0; u < 2; ++u) {
        for (std::size_t o = 0; o < 2; ++o) t(o, r, s, u) = by_weight[r + s + u][o];
      }
    }
  }
  return t;
}

inline Tensor4 t2_product() {
  Tensor4 t = Tensor4::cube(2);
  auto set = [&](std::size_t r, std::size_t s, std::size_t u, QuadScalar a, QuadScalar b) {
    t(0, r, s, u) = a;
    t(1, r, s, u) = b;
  };
  set(0, 0, 0, 1, 0);
  set(1, 1, 0, 1, 1);
  set(0, 0, 1, 0, 1);
  set(1, 1, 1, 1, 2);
  set(0, 1, 0, 0, 1);
  set(0, 1, 1, 1, 1);
  set(1, 0, 0, 0, 1);
  set(1, 0, 1, 1, 1);
  return t;
}

inline TernaryAlgebra t2() { return TernaryAlgebra::classical(t2_product()); }

inline Matrix rho1() { return rows({{1, 1}, {0, -1}}); }
inline Matrix rho2() { return rows({{s5(1, 5), s5(3, 5)}, {s5(-2, 5), s5(-1, 5)}}); }

inline Tensor4 t2h1_product() { return symmetric({{1, 0}, {1, -1}, {2, -1}, {3, -2}}); }

inline TernaryAlgebra t2h1() { return TernaryAlgebra(t2h1_product(), rho1(), rho1()); }

inline TernaryAlgebra t2h2() {
  return TernaryAlgebra(
      symmetric({{s5(1, 5), s5(-2, 5)}, {s5(3, 5), s5(-1, 5)}, {s5(4, 5), s5(-3, 5)}, {s5(7, 5), s5(-4, 5)}}),
      rho2(), rho2());
}

// The six automorphisms listed for T2; the first four have rational entries.
inline std::vector<Matrix> t2_automorphisms() {
  return {rows({{1, 0}, {0, 1}}),
          rows({{-1, 0}, {0, -1}}),
          rows({{-1, -1}, {0, 1}}),
          rows({{1, 1}, {0, -1}}),
          rows({{s5(-1, 5), s5(-3, 5)}, {s5(2, 5), s5(1, 5)}}),
          rho2()};
}

inline Matrix pb2_twist() { return rows({{1, 0}, {1, 1}}); }

inline TernaryBialgebra pb2() {
  Tensor4 delta = Tensor4::cube(2);
  delta(0, 1, 1, 1) = 1;
  return TernaryBialgebra(p2_product(), delta, pb2_twist(), pb2_twist());
}

inline TernaryBialgebra tb2() { return TernaryBialgebra(t2h1_product(), t2h1_product(), rho1(), rho1()); }

inline TernaryBialgebra eq1() { return pb2(); }

inline TernaryBialgebra eq2() {
  Tensor4 mu = Tensor4::cube(2);
  mu(0, 1, 1, 1) = 1;
  Tensor4 delta = Tensor4::cube(2);
  delta(1, 0, 0, 0) = 1;
  const Matrix a = rows({{1, 1}, {0, 1}});
  return TernaryBialgebra(mu, delta, a, a);
}

inline Matrix swap2() { return rows({{0, 1}, {1, 0}}); }

inline std::string path(const std::string& name) { return std::string(TERNALG_FIXTURE_DIR) + "/" + name; }

}  // namespace fixtures
