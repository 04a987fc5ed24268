#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace doldkit {

// Base class for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyWindow : public Error {
 public:
  EmptyWindow() : Error("sequence windows must have at least one term") {}
};

class ShortWindow : public Error {
 public:
  ShortWindow(std::size_t have, std::size_t need)
      : Error("window has " + std::to_string(have) + " terms, need " +
              std::to_string(need)),
        have_(have),
        need_(need) {}
  std::size_t have() const noexcept { return have_; }
  std::size_t need() const noexcept { return need_; }

 private:
  std::size_t have_;
  std::size_t need_;
};

class NonInvertible : public Error {
 public:
  NonInvertible() : Error("arithmetic function with f(1) = 0 has no Dirichlet inverse") {}
};

/// Carries the index at which a supplied psi breaks psi(1) = +-1 or the
/// divisor-sum congruence.
class InvalidPsi : public Error {
 public:
  explicit InvalidPsi(std::size_t n)
      : Error("psi violates its admissibility conditions at n = " + std::to_string(n)), n_(n) {}
  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class NotDold : public Error {
 public:
  explicit NotDold(std::size_t n)
      : Error("sequence fails the Dold congruence at n = " + std::to_string(n)), n_(n) {}
  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class NotRealizable : public Error {
 public:
  explicit NotRealizable(std::size_t n)
      : Error("sequence is not realizable at n = " + std::to_string(n)), n_(n) {}
  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class NonIntegral : public Error {
 public:
  explicit NonIntegral(std::size_t n)
      : Error("periodic-point count is not an integer at n = " + std::to_string(n)), n_(n) {}
  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class HorizonExceeded : public Error {
 public:
  HorizonExceeded(unsigned long long requested, unsigned long long horizon)
      : Error("index " + std::to_string(requested) + " exceeds source horizon " +
              std::to_string(horizon)) {}
};

class NotPermutation : public Error {
 public:
  NotPermutation() : Error("time change is not a permutation of 1..N") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace doldkit
