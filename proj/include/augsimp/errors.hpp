#pragma once

#include <stdexcept>
#include <string>

namespace augsimp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivergentSum : public Error {
 public:
  using Error::Error;
};

class BothInfinite : public Error {
 public:
  using Error::Error;
};

class SingularDiagonal : public Error {
 public:
  using Error::Error;
};

class InfiniteInput : public Error {
 public:
  using Error::Error;
};

class UnknownTail : public Error {
 public:
  using Error::Error;
};

class NonRegular : public Error {
 public:
  using Error::Error;
};

class NotASubcomplex : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidComplex : public Error {
 public:
  using Error::Error;
};

}  // namespace augsimp
