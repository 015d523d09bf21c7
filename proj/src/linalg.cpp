#include "ternalg/linalg.hpp"

#include <string>
#include <utility>

#include "ternalg/errors.hpp"

namespace ternalg {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(want) +
                            ", got " + std::to_string(got));
  }
}

Vector Vector::basis(std::size_t dim, std::size_t k) {
  Vector v(dim);
  v[k] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& other) {
  require_dim(other.dim(), dim(), "vector sum");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_dim(other.dim(), dim(), "vector difference");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Vector& Vector::operator*=(const QuadScalar& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

Matrix Matrix::identity(std::size_t dim) { return scalar(dim, 1); }

Matrix Matrix::scalar(std::size_t dim, const QuadScalar& c) {
  Matrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = c;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<QuadScalar>>& rows) {
  Matrix m(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    require_dim(rows[k].size(), rows.size(), "matrix row");
    for (std::size_t j = 0; j < rows.size(); ++j) m(k, j) = rows[k][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  Matrix m(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_dim(columns[j].dim(), columns.size(), "matrix column");
    for (std::size_t k = 0; k < columns.size(); ++k) m(k, j) = columns[j][k];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(k, j);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  require_dim(v.dim(), dim_, "matrix-vector product");
  Vector out(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) {
      const QuadScalar& a = (*this)(k, j);
      if (!a.is_zero()) out[k] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, k) = (*this)(k, j);
  }
  return t;
}

Matrix Matrix::inverse() const {
  Matrix a = *this;
  Matrix inv = identity(dim_);
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < dim_; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const QuadScalar scale = a(col, col).inverse();
    for (std::size_t j = 0; j < dim_; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t row = 0; row < dim_; ++row) {
      if (row == col || a(row, col).is_zero()) continue;
      const QuadScalar factor = a(row, col);
      for (std::size_t j = 0; j < dim_; ++j) {
        a(row, j) -= factor * a(col, j);
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

bool Matrix::is_invertible() const {
  try {
    (void)inverse();
    return true;
  } catch (const SingularMatrix&) {
    return false;
  }
}

bool Matrix::is_identity() const { return *this == identity(dim_); }

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_dim(b.dim(), a.dim(), "matrix product");
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      if (a(k, m).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(m, j).is_zero()) c(k, j) += a(k, m) * b(m, j);
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_dim(b.dim(), a.dim(), "matrix sum");
  Matrix c = a;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(k, j) += b(k, j);
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_dim(b.dim(), a.dim(), "matrix difference");
  Matrix c = a;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(k, j) -= b(k, j);
  }
  return c;
}

Tensor3 Tensor3::basis(std::size_t dim, std::size_t r, std::size_t s, std::size_t t) {
  Tensor3 out(dim);
  out(r, s, t) = 1;
  return out;
}

Tensor3 Tensor3::outer(const Vector& a, const Vector& b, const Vector& c) {
  require_dim(b.dim(), a.dim(), "outer product");
  require_dim(c.dim(), a.dim(), "outer product");
  const std::size_t n = a.dim();
  Tensor3 out(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].is_zero()) continue;
    for (std::size_t s = 0; s < n; ++s) {
      if (b[s].is_zero()) continue;
      const QuadScalar ab = a[r] * b[s];
      for (std::size_t t = 0; t < n; ++t) {
        if (!c[t].is_zero()) out(r, s, t) = ab * c[t];
      }
    }
  }
  return out;
}

bool Tensor3::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  require_dim(other.dim(), dim_, "tensor sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  require_dim(other.dim(), dim_, "tensor difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Tensor3 tensor3_map(const Matrix& f1, const Matrix& f2, const Matrix& f3, const Tensor3& t) {
  const std::size_t n = t.dim();
  require_dim(f1.dim(), n, "tensor3_map slot 1");
  require_dim(f2.dim(), n, "tensor3_map slot 2");
  require_dim(f3.dim(), n, "tensor3_map slot 3");
  Tensor3 out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t u = 0; u < n; ++u) {
        const QuadScalar& c = t(r, s, u);
        if (c.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p) {
          if (f1(p, r).is_zero()) continue;
          const QuadScalar cp = c * f1(p, r);
          for (std::size_t q = 0; q < n; ++q) {
            if (f2(q, s).is_zero()) continue;
            const QuadScalar cpq = cp * f2(q, s);
            for (std::size_t w = 0; w < n; ++w) {
              if (!f3(w, u).is_zero()) out(p, q, w) += cpq * f3(w, u);
            }
          }
        }
      }
    }
  }
  return out;
}

Tensor4::Tensor4(Extents ext) : ext_(ext), entries_(ext[0] * ext[1] * ext[2] * ext[3]) {}

bool Tensor4::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector Tensor4::apply(const Vector& x, const Vector& y, const Vector& z) const {
  require_dim(x.dim(), ext_[1], "trilinear slot 1");
  require_dim(y.dim(), ext_[2], "trilinear slot 2");
  require_dim(z.dim(), ext_[3], "trilinear slot 3");
  Vector out(ext_[0]);
  for (std::size_t i = 0; i < ext_[1]; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < ext_[2]; ++j) {
      if (y[j].is_zero()) continue;
      const QuadScalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < ext_[3]; ++k) {
        if (z[k].is_zero()) continue;
        const QuadScalar w = xy * z[k];
        for (std::size_t o = 0; o < ext_[0]; ++o) {
          const QuadScalar& c = (*this)(o, i, j, k);
          if (!c.is_zero()) out[o] += c * w;
        }
      }
    }
  }
  return out;
}

Tensor3 Tensor4::contract_first(const Vector& x) const {
  const std::size_t n = ext_[0];
  if (ext_[1] != n || ext_[2] != n || ext_[3] != n) {
    throw DimensionMismatch("contract_first needs a cube tensor");
  }
  require_dim(x.dim(), n, "coproduct argument");
  Tensor3 out(n);
  for (std::size_t o = 0; o < n; ++o) {
    if (x[o].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          const QuadScalar& c = (*this)(o, r, s, t);
          if (!c.is_zero()) out(r, s, t) += c * x[o];
        }
      }
    }
  }
  return out;
}

Tensor4 Tensor4::map_output(const Matrix& f) const {
  require_dim(f.dim(), ext_[0], "output map");
  Tensor4 out(ext_);
  const std::size_t block = ext_[1] * ext_[2] * ext_[3];
  for (std::size_t o = 0; o < ext_[0]; ++o) {
    for (std::size_t m = 0; m < ext_[0]; ++m) {
      const QuadScalar& a = f(o, m);
      if (a.is_zero()) continue;
      for (std::size_t q = 0; q < block; ++q) {
        const QuadScalar& c = entries_[m * block + q];
        if (!c.is_zero()) out.entries_[o * block + q] += a * c;
      }
    }
  }
  return out;
}

Tensor4 Tensor4::operator-() const {
  Tensor4 out = *this;
  for (auto& x : out.entries_) x = -x;
  return out;
}

}  // namespace ternalg
