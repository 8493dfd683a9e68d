#pragma once

#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "augsimp/numeric.hpp"

namespace augsimp {

// A sequence indexed from -1. Either finite (stored entries, zero beyond) or
// lazy: a memoized generator with an unknown tail.
class AugSequence {
 public:
  using Generator = std::function<Scalar(int)>;

  AugSequence();
  AugSequence(std::initializer_list<long> values);
  explicit AugSequence(std::vector<Scalar> values);

  static AugSequence unit(Nat1 k);
  // With a last index the generator is sampled on [-1, last] and the result is
  // finite; without one the tail is unknown.
  static AugSequence generated(Generator gen, std::optional<int> last_nonzero = std::nullopt);

  bool is_finite() const { return lazy_ == nullptr; }

  // Indices below -1 read as zero.
  Scalar operator[](int i) const;

  // Highest nonzero index, nullopt for the zero sequence. Throws UnknownTail
  // on a lazy sequence.
  std::optional<int> dim() const;

  // Trimmed entries starting at index -1; throws UnknownTail on a lazy sequence.
  const std::vector<Scalar>& entries() const;

  std::vector<Scalar> window(int lo, int hi) const;

  // "(1,6,6,0,...)" for finite sequences, "(a,b,...,?)" for lazy ones.
  std::string str(int lazy_preview = 8) const;

 private:
  struct Lazy;
  std::vector<Scalar> finite_;
  std::shared_ptr<Lazy> lazy_;
};

// Decided on finite supports only; throws UnknownTail if either side is lazy.
bool operator==(const AugSequence& a, const AugSequence& b);

AugSequence operator+(const AugSequence& a, const AugSequence& b);
AugSequence operator-(const AugSequence& a, const AugSequence& b);
AugSequence operator*(const Scalar& s, const AugSequence& a);

// (a ⊞ b)_m = sum_{p+q=m-1} a_p b_q. Throws BothInfinite if neither is finite.
AugSequence seq_join(const AugSequence& a, const AugSequence& b);

// c + D_{-1}(c).
AugSequence seq_cone(const AugSequence& c);

// (D_k b)_i = b_{i+k}, zero when i+k < -1.
AugSequence shift(const AugSequence& b, int k);

// |Γ₊[n]|: binomial row C(n+1, i+1).
AugSequence gamma_seq(Nat1 n);

// 1_{-1} + 1_0.
AugSequence cone_unit();

}  // namespace augsimp
