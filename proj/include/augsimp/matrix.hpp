#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "augsimp/numeric.hpp"
#include "augsimp/sequence.hpp"

namespace augsimp {

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// Closed index interval [lo, hi]; hi may be kUnbounded.
struct Extent {
  int lo;
  int hi;
  bool bounded() const { return hi != kUnbounded; }
  bool contains(int k) const { return lo <= k && k <= hi; }
};

// Support envelopes of a matrix. row(i) covers every column j with a possibly
// nonzero entry (i, j); col(j) covers every such row i. Both bounds must be
// nondecreasing in the index, which is what lets products compose them.
struct Support {
  std::function<Extent(int)> row;
  std::function<Extent(int)> col;
};

struct MatrixFlags {
  bool lower_triangular = false;  // zero above the diagonal
  bool upper_triangular = false;  // zero below the diagonal
  std::optional<int> band;        // entry (i, j) is zero once j - i > band
  bool row_finite = false;
  bool column_finite = false;
};

// Lazily evaluated matrix over {-1,0,1,...}^2 with memoized entries.
class AugMatrix {
 public:
  using EntryFn = std::function<Scalar(int, int)>;

  AugMatrix(std::string name, EntryFn entry, Support support, MatrixFlags flags);

  // Memoized; zero outside the support envelopes.
  Scalar operator()(int i, int j) const;

  // Calls the entry function directly, ignoring envelopes and cache.
  Scalar raw(int i, int j) const;

  Extent row_support(int i) const;
  Extent col_support(int j) const;
  const MatrixFlags& flags() const;
  const std::string& name() const;

  // Finite when the row envelope is bounded, lazy otherwise.
  AugSequence row(int i) const;

  AugMatrix renamed(std::string name) const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
  friend AugMatrix invert_triangular(const AugMatrix& a);
};

AugMatrix identity_matrix();

// 1_{k,l}: single one at (k, l).
AugMatrix unit_matrix(Nat1 k, Nat1 l);

// R(b): row i is D_{-(i+1)}(b), so a·R(b) = a ⊞ b.
AugMatrix shifting_matrix(const AugSequence& b);

// Throws DivergentSum unless A is row finite or B column finite.
AugMatrix matmul(const AugMatrix& a, const AugMatrix& b);

// Exact inverse of a lower or upper triangular matrix, by substitution on
// demand. A zero diagonal entry surfaces as SingularDiagonal when reached.
AugMatrix invert_triangular(const AugMatrix& a);

// k-fold product; negative k goes through invert_triangular.
AugMatrix iterate_operator(const AugMatrix& a, int k);

// (a·B)_j = sum_k a_k B_{k,j}. Throws DivergentSum if a is lazy and B is not
// column finite.
AugSequence dot(const AugSequence& a, const AugMatrix& b);

// (a·bin⁻¹)·B.
AugSequence triangle_action(const AugSequence& a, const AugMatrix& b);

// a·breve_cad_plus(); throws InfiniteInput on a lazy sequence.
AugSequence sd_seq(const AugSequence& a);

// Samples entries inside [-1, window]^2 and reports the first entry that
// contradicts the declared envelopes or flags. samples == 0 checks every cell.
std::optional<std::string> audit_structure(const AugMatrix& m, int window, int samples = 0,
                                           std::uint64_t seed = 1);

}  // namespace augsimp
