#include "ternalg/duality.hpp"

namespace ternalg {

TernaryCoalgebra dualize_algebra(const TernaryAlgebra& A) {
  return TernaryCoalgebra(A.mu(), A.alpha1().transpose(), A.alpha2().transpose());
}

TernaryAlgebra dualize_coalgebra(const TernaryCoalgebra& C) {
  return TernaryAlgebra(C.delta(), C.alpha1().transpose(), C.alpha2().transpose());
}

Matrix dualize_linear_map(const Matrix& f) { return f.transpose(); }

}  // namespace ternalg
