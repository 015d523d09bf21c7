#pragma once

#include "ternalg/linalg.hpp"
#include "ternalg/ternary_algebra.hpp"
#include "ternalg/ternary_coalgebra.hpp"

namespace ternalg {

// With respect to the dual basis the structure constants are shared and every
// linear map is transposed.

TernaryCoalgebra dualize_algebra(const TernaryAlgebra& A);
TernaryAlgebra dualize_coalgebra(const TernaryCoalgebra& C);
Matrix dualize_linear_map(const Matrix& f);

}  // namespace ternalg
