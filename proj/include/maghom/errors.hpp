#pragma once

#include <stdexcept>
#include <string>

namespace maghom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or argument.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two distinct points at distance zero where a positive minimum is required.
class ZeroDistance : public Error {
 public:
  ZeroDistance(std::size_t x, std::size_t y)
      : Error("zero distance between distinct points " + std::to_string(x) +
              " and " + std::to_string(y)),
        x_(x),
        y_(y) {}
  std::size_t x() const { return x_; }
  std::size_t y() const { return y_; }

 private:
  std::size_t x_;
  std::size_t y_;
};

class NotNonIncreasing : public Error {
 public:
  using Error::Error;
};

class MissingBlock : public Error {
 public:
  using Error::Error;
};

class BidegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// The degree-(0,0) part of a ring presentation is not isomorphic to Z^n.
class NotSplit : public Error {
 public:
  using Error::Error;
};

class NonUniqueGrade : public Error {
 public:
  using Error::Error;
};

}  // namespace maghom
