#include "augsimp/kernels.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "augsimp/errors.hpp"

namespace augsimp::kernels {

namespace {

Scalar product_entry(const AugMatrix& a, const AugMatrix& b, int i, int j) {
  Extent ra = a.row_support(i), cb = b.col_support(j);
  const int lo = std::max(ra.lo, cb.lo);
  const int hi = std::min(ra.hi, cb.hi);
  if (hi == kUnbounded) throw DivergentSum("unbounded inner sum in " + a.name() + "·" + b.name());
  Scalar sum = 0;
  for (int k = lo; k <= hi; ++k) {
    Scalar x = a(i, k);
    if (x != 0) sum += x * b(k, j);
  }
  return sum;
}

MatrixWindow blank(std::string name, IndexRange rows, IndexRange cols) {
  MatrixWindow w{std::move(name), rows, cols, {}};
  w.cells.resize(static_cast<std::size_t>(rows.count()) * cols.count());
  return w;
}

template <class Cell>
void fill_parallel(MatrixWindow& w, Cell cell) {
  const int nc = w.cols.count();
  const long total = static_cast<long>(w.rows.count()) * nc;
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 16)
  for (long idx = 0; idx < total; ++idx) {
    const int i = w.rows.lo + static_cast<int>(idx / nc);
    const int j = w.cols.lo + static_cast<int>(idx % nc);
    try {
      w.cells[idx] = cell(i, j);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

template <class Cell>
void fill_serial(MatrixWindow& w, Cell cell) {
  for (int i = w.rows.lo; i <= w.rows.hi; ++i)
    for (int j = w.cols.lo; j <= w.cols.hi; ++j) w.at(i, j) = cell(i, j);
}

}  // namespace

bool operator==(const MatrixWindow& a, const MatrixWindow& b) {
  return a.rows.lo == b.rows.lo && a.rows.hi == b.rows.hi && a.cols.lo == b.cols.lo && a.cols.hi == b.cols.hi &&
         a.cells == b.cells;
}

bool is_identity(const MatrixWindow& w) {
  for (int i = w.rows.lo; i <= w.rows.hi; ++i)
    for (int j = w.cols.lo; j <= w.cols.hi; ++j)
      if (w.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

MatrixWindow materialize(const AugMatrix& m, IndexRange rows, IndexRange cols) {
  MatrixWindow w = blank(m.name(), rows, cols);
  fill_parallel(w, [&m](int i, int j) { return m(i, j); });
  return w;
}

MatrixWindow product_window(const AugMatrix& a, const AugMatrix& b, IndexRange rows, IndexRange cols) {
  MatrixWindow w = blank(a.name() + "·" + b.name(), rows, cols);
  fill_parallel(w, [&a, &b](int i, int j) { return product_entry(a, b, i, j); });
  return w;
}

namespace serial {

MatrixWindow materialize(const AugMatrix& m, IndexRange rows, IndexRange cols) {
  MatrixWindow w = blank(m.name(), rows, cols);
  fill_serial(w, [&m](int i, int j) { return m(i, j); });
  return w;
}

MatrixWindow product_window(const AugMatrix& a, const AugMatrix& b, IndexRange rows, IndexRange cols) {
  MatrixWindow w = blank(a.name() + "·" + b.name(), rows, cols);
  fill_serial(w, [&a, &b](int i, int j) { return product_entry(a, b, i, j); });
  return w;
}

}  // namespace serial

}  // namespace augsimp::kernels
