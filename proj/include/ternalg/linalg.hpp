#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ternalg/scalar.hpp"

namespace ternalg {

// In-process accessors are 0-based; files and reports use 1-based indices.

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  Vector(std::initializer_list<QuadScalar> entries) : entries_(entries) {}
  explicit Vector(std::vector<QuadScalar> entries) : entries_(std::move(entries)) {}

  static Vector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return entries_.size(); }
  QuadScalar& operator[](std::size_t k) { return entries_[k]; }
  const QuadScalar& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<QuadScalar>& entries() const { return entries_; }
  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const QuadScalar& c);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const QuadScalar& c, Vector v) { return v *= c; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<QuadScalar> entries_;
};

/// Square matrix; entry (k, j) is the coefficient of e_k in the image of e_j.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static Matrix identity(std::size_t dim);
  static Matrix scalar(std::size_t dim, const QuadScalar& c);
  static Matrix from_rows(const std::vector<std::vector<QuadScalar>>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t dim() const { return dim_; }
  QuadScalar& operator()(std::size_t k, std::size_t j) { return entries_[k * dim_ + j]; }
  const QuadScalar& operator()(std::size_t k, std::size_t j) const { return entries_[k * dim_ + j]; }

  Vector column(std::size_t j) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  // Exact Gauss-Jordan elimination; throws SingularMatrix.
  Matrix inverse() const;
  bool is_invertible() const;
  bool is_identity() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<QuadScalar> entries_;
};

/// Element sum t(r,s,t) e_r (x) e_s (x) e_t of V (x) V (x) V.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), entries_(dim * dim * dim) {}

  static Tensor3 basis(std::size_t dim, std::size_t r, std::size_t s, std::size_t t);
  static Tensor3 outer(const Vector& a, const Vector& b, const Vector& c);

  std::size_t dim() const { return dim_; }
  QuadScalar& operator()(std::size_t r, std::size_t s, std::size_t t) {
    return entries_[(r * dim_ + s) * dim_ + t];
  }
  const QuadScalar& operator()(std::size_t r, std::size_t s, std::size_t t) const {
    return entries_[(r * dim_ + s) * dim_ + t];
  }
  const std::vector<QuadScalar>& entries() const { return entries_; }
  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<QuadScalar> entries_;
};

/// Applies f1, f2, f3 slotwise.
Tensor3 tensor3_map(const Matrix& f1, const Matrix& f2, const Matrix& f3, const Tensor3& t);

/// Dense 4-index array T[o][i][j][k] with independent extents; holds products, coproducts and actions.
class Tensor4 {
 public:
  using Extents = std::array<std::size_t, 4>;

  Tensor4() = default;
  explicit Tensor4(Extents ext);
  static Tensor4 cube(std::size_t dim) { return Tensor4({dim, dim, dim, dim}); }

  const Extents& extents() const { return ext_; }
  std::size_t extent(std::size_t axis) const { return ext_[axis]; }

  QuadScalar& operator()(std::size_t o, std::size_t i, std::size_t j, std::size_t k) {
    return entries_[offset(o, i, j, k)];
  }
  const QuadScalar& operator()(std::size_t o, std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[offset(o, i, j, k)];
  }
  const std::vector<QuadScalar>& entries() const { return entries_; }
  std::vector<QuadScalar>& entries() { return entries_; }
  bool is_zero() const;

  /// out[o] = sum T[o][i][j][k] x_i y_j z_k.
  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;
  /// sum_o x_o T[o][.][.][.] as an element of the triple tensor power (cube tensors only).
  Tensor3 contract_first(const Vector& x) const;
  /// Post-composes the output axis with f: T'[o] = sum_m f(o,m) T[m].
  Tensor4 map_output(const Matrix& f) const;

  Tensor4 operator-() const;
  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::size_t offset(std::size_t o, std::size_t i, std::size_t j, std::size_t k) const {
    return ((o * ext_[1] + i) * ext_[2] + j) * ext_[3] + k;
  }

  Extents ext_{0, 0, 0, 0};
  std::vector<QuadScalar> entries_;
};

void require_dim(std::size_t got, std::size_t want, const char* what);

}  // namespace ternalg
