#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ternalg {

using Rational = mpq_class;

inline constexpr int kDefaultRadicand = 5;

bool is_square_free(long d);

/// Exact element rat + irr*sqrt(d) of Q(sqrt d).
///
/// A value whose irrational part is zero is stored with radicand 1 and combines
/// with any Q(sqrt d); two irrational operands must share the radicand.
class QuadScalar {
 public:
  QuadScalar() : rat_(0), irr_(0) {}
  QuadScalar(long value) : rat_(value), irr_(0) {}  // NOLINT implicit
  QuadScalar(const Rational& value) : rat_(value), irr_(0) {}  // NOLINT implicit
  QuadScalar(const Rational& rat, const Rational& irr, int radicand);

  static QuadScalar ratio(long num, long den);
  static QuadScalar sqrt(int radicand) { return QuadScalar(0, 1, radicand); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  int radicand() const { return radicand_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }
  bool is_one() const { return is_rational() && rat_ == 1; }

  Rational norm() const;
  QuadScalar conjugate() const;
  // Throws DivisionByZero on zero.
  QuadScalar inverse() const;

  QuadScalar& operator+=(const QuadScalar& other);
  QuadScalar& operator-=(const QuadScalar& other);
  QuadScalar& operator*=(const QuadScalar& other);
  QuadScalar operator-() const;

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(const QuadScalar& a, const QuadScalar& b) { return a * b.inverse(); }
  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.radicand_ == b.radicand_ && a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator!=(const QuadScalar& a, const QuadScalar& b) { return !(a == b); }

  /// Canonical literal, e.g. "0", "-3/5", "1/5*sqrt(5)", "1-sqrt(5)".
  std::string str() const;

 private:
  int join_radicand(const QuadScalar& other) const;
  void normalize();

  Rational rat_;
  Rational irr_;
  int radicand_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

/// Parses the scalar literal grammar. Every sqrt(k) must use k == radicand.
QuadScalar parse_scalar(std::string_view text, int radicand = kDefaultRadicand);

// Radicand shared by two contexts; 1 acts as the neutral element. Throws DomainError otherwise.
int common_radicand(int a, int b);

}  // namespace ternalg
