#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ternalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between Q(sqrt d) and Q(sqrt d') with d != d'.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

// Carries the first basis triple (1-based) where rho(mu(e_r,e_s,e_t)) != mu(rho e_r, rho e_s, rho e_t).
class NotEndomorphism : public Error {
 public:
  NotEndomorphism(std::array<std::size_t, 3> triple, const std::string& what)
      : Error(what), triple_(triple) {}
  const std::array<std::size_t, 3>& triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

class PreconditionNotClassical : public Error {
 public:
  using Error::Error;
};

class NotMultiplicative : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ternalg
