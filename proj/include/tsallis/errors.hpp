#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsallis {

// Root of every error the library throws on purpose. The CLI maps these to
// exit code 1 ("data error").
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or parameter constraint was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A clamped spacing is zero where the estimator would raise it to a
// negative power (alpha >= 1).
class TiedSpacings : public Error {
 public:
  TiedSpacings(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// A fitted cdf increment (or expected-uniform increment) is not positive.
class DegenerateIncrement : public Error {
 public:
  DegenerateIncrement(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// The entropy integral diverges for the requested model and alpha.
class NonexistentEntropy : public Error {
 public:
  using Error::Error;
};

}  // namespace tsallis
