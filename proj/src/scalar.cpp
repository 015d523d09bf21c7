#include "ternalg/scalar.hpp"

#include <cctype>
#include <ostream>

#include "ternalg/errors.hpp"

namespace ternalg {

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

int common_radicand(int a, int b) {
  if (a == 1) return b;
  if (b == 1 || a == b) return a;
  throw DomainError("radicand mismatch: sqrt(" + std::to_string(a) + ") vs sqrt(" +
                    std::to_string(b) + ")");
}

QuadScalar::QuadScalar(const Rational& rat, const Rational& irr, int radicand)
    : rat_(rat), irr_(irr), radicand_(radicand) {
  if (!is_square_free(radicand)) {
    throw DomainError("radicand " + std::to_string(radicand) + " is not a positive square-free integer");
  }
  rat_.canonicalize();
  irr_.canonicalize();
  normalize();
}

QuadScalar QuadScalar::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return QuadScalar(q);
}

void QuadScalar::normalize() {
  if (radicand_ == 1) {
    rat_ += irr_;
    irr_ = 0;
  } else if (sgn(irr_) == 0) {
    radicand_ = 1;
  }
}

int QuadScalar::join_radicand(const QuadScalar& other) const {
  return common_radicand(radicand_, other.radicand_);
}

Rational QuadScalar::norm() const { return rat_ * rat_ - Rational(radicand_) * irr_ * irr_; }

QuadScalar QuadScalar::conjugate() const {
  QuadScalar out = *this;
  out.irr_ = -irr_;
  return out;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) return QuadScalar(Rational(1) / rat_);
  const Rational n = norm();
  QuadScalar out;
  out.rat_ = rat_ / n;
  out.irr_ = -irr_ / n;
  out.radicand_ = radicand_;
  return out;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& other) {
  if (other.is_rational()) {
    rat_ += other.rat_;
    return *this;
  }
  radicand_ = join_radicand(other);
  rat_ += other.rat_;
  irr_ += other.irr_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& other) {
  if (other.is_rational()) {
    rat_ -= other.rat_;
    return *this;
  }
  radicand_ = join_radicand(other);
  rat_ -= other.rat_;
  irr_ -= other.irr_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& other) {
  if (is_rational() && other.is_rational()) {
    rat_ *= other.rat_;
    return *this;
  }
  const int d = join_radicand(other);
  Rational r = rat_ * other.rat_ + Rational(d) * irr_ * other.irr_;
  Rational i = rat_ * other.irr_ + irr_ * other.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  radicand_ = d;
  normalize();
  return *this;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar out = *this;
  out.rat_ = -rat_;
  out.irr_ = -irr_;
  return out;
}

namespace {

std::string sqrt_term(const Rational& coeff, int d) {
  const std::string root = "sqrt(" + std::to_string(d) + ")";
  if (coeff == 1) return root;
  return coeff.get_str() + "*" + root;
}

}  // namespace

std::string QuadScalar::str() const {
  if (is_rational()) return rat_.get_str();
  if (sgn(rat_) == 0) return sqrt_term(irr_, radicand_);
  if (sgn(irr_) > 0) return rat_.get_str() + "+" + sqrt_term(irr_, radicand_);
  return rat_.get_str() + "-" + sqrt_term(-irr_, radicand_);
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.str(); }

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, int radicand) : text_(text), radicand_(radicand) {}

  QuadScalar parse() {
    skip_space();
    QuadScalar value = term();
    skip_space();
    if (pos_ < text_.size()) {
      const char sign = text_[pos_];
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_space();
      QuadScalar second = term();
      value = sign == '+' ? value + second : value - second;
      skip_space();
    }
    if (pos_ != text_.size()) fail("trailing characters");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad scalar \"" + std::string(text_) + "\": " + why + " at offset " +
                         std::to_string(pos_),
                     0, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  std::string digits(bool allow_sign) {
    std::string out;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') out.push_back('-');
      ++pos_;
    }
    const std::size_t first_digit = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == first_digit) fail("expected digits");
    return out + std::string(text_.substr(first_digit, pos_ - first_digit));
  }

  QuadScalar root() {
    pos_ += 5;  // "sqrt("
    skip_space();
    const std::string k = digits(false);
    skip_space();
    if (!starts_with(")")) fail("expected ')'");
    ++pos_;
    if (k.size() > 9 || std::stol(k) != radicand_) {
      fail("sqrt(" + k + ") does not match radicand " + std::to_string(radicand_));
    }
    return QuadScalar(0, 1, radicand_);
  }

  QuadScalar term() {
    if (starts_with("sqrt(")) return root();
    Rational q;
    const std::string num = digits(true);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const mpz_class den(digits(false));
      if (den == 0) fail("zero denominator");
      q = Rational(mpz_class(num), den);
      q.canonicalize();
    } else {
      q = Rational(mpz_class(num));
    }
    skip_space();
    if (starts_with("*")) {
      ++pos_;
      skip_space();
      if (!starts_with("sqrt(")) fail("expected sqrt(");
      return QuadScalar(q) * root();
    }
    return QuadScalar(q);
  }

  std::string_view text_;
  int radicand_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadScalar parse_scalar(std::string_view text, int radicand) {
  if (!is_square_free(radicand)) {
    throw DomainError("radicand " + std::to_string(radicand) + " is not a positive square-free integer");
  }
  return ScalarParser(text, radicand).parse();
}

}  // namespace ternalg
