#pragma once

#include <vector>

#include "augsimp/matrix.hpp"

namespace augsimp::kernels {

struct IndexRange {
  int lo;
  int hi;
  int count() const { return hi < lo ? 0 : hi - lo + 1; }
};

struct MatrixWindow {
  std::string name;
  IndexRange rows;
  IndexRange cols;
  std::vector<Scalar> cells;  // row major

  const Scalar& at(int i, int j) const { return cells[(i - rows.lo) * cols.count() + (j - cols.lo)]; }
  Scalar& at(int i, int j) { return cells[(i - rows.lo) * cols.count() + (j - cols.lo)]; }
};

bool operator==(const MatrixWindow& a, const MatrixWindow& b);

bool is_identity(const MatrixWindow& w);

// Cells are evaluated in parallel with OpenMP.
MatrixWindow materialize(const AugMatrix& m, IndexRange rows, IndexRange cols);

// Exact entries of A·B over the window. Inner sums follow the support
// envelopes, so the result does not depend on the window size.
MatrixWindow product_window(const AugMatrix& a, const AugMatrix& b, IndexRange rows, IndexRange cols);

namespace serial {

MatrixWindow materialize(const AugMatrix& m, IndexRange rows, IndexRange cols);
MatrixWindow product_window(const AugMatrix& a, const AugMatrix& b, IndexRange rows, IndexRange cols);

}  // namespace serial

}  // namespace augsimp::kernels
