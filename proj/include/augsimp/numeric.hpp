#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace augsimp {

using BigInt = mpz_class;

// Exact rational. mpq_class keeps results canonical after every arithmetic
// operation; values built from strings go through parse_scalar.
using Scalar = mpq_class;

// An index in {-1, 0, 1, ...}.
class Nat1 {
 public:
  constexpr Nat1(int v) : value_(v) {
    if (v < -1) throw std::domain_error("index below -1: " + std::to_string(v));
  }
  constexpr operator int() const { return value_; }
  constexpr int value() const { return value_; }

 private:
  int value_;
};

std::string to_string(const BigInt& v);
std::string to_string(const Scalar& v);

// Accepts "17", "-3", "2/6" (normalized to 1/3).
Scalar parse_scalar(std::string_view text);

bool is_integer(const Scalar& v);

}  // namespace augsimp
