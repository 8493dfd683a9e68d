#include "augsimp/named_matrices.hpp"

#include <algorithm>
#include <stdexcept>

#include "augsimp/combinat.hpp"

namespace augsimp {

namespace {

AugMatrix declare(AugMatrix m) {
#ifndef NDEBUG
  if (auto bad = audit_structure(m, 12, 64)) throw std::logic_error(*bad);
#endif
  return m;
}

MatrixFlags lower_flags(int band) {
  MatrixFlags f;
  f.lower_triangular = band <= 0;
  f.band = band;
  f.row_finite = true;
  return f;
}

Scalar breve_cil_formula(int n, int m) {
  if (m == n) return n + 2;
  if (m == n + 1) return n + 1;
  return 0;
}

Scalar breve_cil2_formula(int n, int m) {
  BigInt sum = 0;
  for (int i = -1; i <= n; ++i) sum += binomial(n + 1, i + 1) * binomial(i + 1, m - n);
  return Scalar(sum);
}

// First row that can be nonzero in column m of the cil₂ family.
int cil2_first_row(int m) { return m <= 0 ? m : m / 2; }

}  // namespace

const AugMatrix& bin() {
  static const AugMatrix m = declare(AugMatrix(
      "bin", [](int i, int j) { return Scalar(binomial(i + 1, j + 1)); },
      {[](int i) { return Extent{-1, i}; }, [](int j) { return Extent{j, kUnbounded}; }}, lower_flags(0)));
  return m;
}

const AugMatrix& bin_inv() {
  static const AugMatrix m = declare(AugMatrix(
      "bin⁻¹",
      [](int i, int j) {
        BigInt c = binomial(i + 1, j + 1);
        return Scalar((i - j) % 2 == 0 ? c : BigInt(-c));
      },
      {[](int i) { return Extent{-1, i}; }, [](int j) { return Extent{j, kUnbounded}; }}, lower_flags(0)));
  return m;
}

const AugMatrix& breve_cil() {
  static const AugMatrix m = [] {
    MatrixFlags f;
    f.upper_triangular = true;
    f.band = 1;
    f.row_finite = f.column_finite = true;
    return declare(AugMatrix("breve-cil", breve_cil_formula,
                             {[](int n) { return Extent{n, n + 1}; },
                              [](int k) { return Extent{std::max(-1, k - 1), k}; }},
                             f));
  }();
  return m;
}

const AugMatrix& cil() {
  static const AugMatrix m = declare(AugMatrix(
      "cil",
      [](int n, int k) {
        Scalar sum = 0;
        for (int j = -1; j <= n; ++j) sum += Scalar(binomial(n + 1, j + 1)) * breve_cil_formula(j, k);
        return sum;
      },
      {[](int n) { return Extent{-1, n + 1}; },
       [](int k) { return Extent{std::max(-1, k - 1), kUnbounded}; }},
      lower_flags(1)));
  return m;
}

const AugMatrix& cil_partial() {
  static const AugMatrix m = declare(AugMatrix(
      "cil∂",
      [](int n, int k) {
        Scalar sum = 0;
        for (int j = -1; j <= n - 1; ++j) sum += Scalar(binomial(n + 1, j + 1)) * breve_cil_formula(j, k);
        return sum;
      },
      {[](int n) { return Extent{-1, std::max(-1, n)}; },
       [](int k) { return Extent{std::max(-1, k), kUnbounded}; }},
      lower_flags(0)));
  return m;
}

const AugMatrix& breve_cil0() {
  static const AugMatrix m = [] {
    MatrixFlags f;
    f.lower_triangular = f.upper_triangular = true;
    f.band = 0;
    f.row_finite = f.column_finite = true;
    return declare(AugMatrix(
        "breve-cil0", [](int n, int k) { return Scalar(n == k ? n + 2 : 0); },
        {[](int n) { return Extent{n, n}; }, [](int k) { return Extent{k, k}; }}, f));
  }();
  return m;
}

const AugMatrix& cil0() {
  static const AugMatrix m = declare(AugMatrix(
      "cil0",
      [](int n, int k) {
        Scalar sum = 0;
        for (int j = -1; j <= n; ++j)
          if (j == k) sum += Scalar(binomial(n + 1, j + 1) * (j + 2));
        return sum;
      },
      {[](int n) { return Extent{-1, n}; }, [](int k) { return Extent{k, kUnbounded}; }}, lower_flags(0)));
  return m;
}

const AugMatrix& cil0_partial() {
  static const AugMatrix m = declare(AugMatrix(
      "cil0∂",
      [](int n, int k) {
        Scalar sum = 0;
        for (int j = -1; j <= n - 1; ++j)
          if (j == k) sum += Scalar(binomial(n + 1, j + 1) * (j + 2));
        return sum;
      },
      {[](int n) { return Extent{-1, std::max(-1, n - 1)}; }, [](int k) { return Extent{k + 1, kUnbounded}; }},
      lower_flags(-1)));
  return m;
}

const AugMatrix& breve_cil2() {
  static const AugMatrix m = [] {
    MatrixFlags f;
    f.upper_triangular = true;
    f.row_finite = f.column_finite = true;
    return declare(AugMatrix("breve-cil2", breve_cil2_formula,
                             {[](int n) { return Extent{n, 2 * n + 1}; },
                              [](int k) { return Extent{cil2_first_row(k), k}; }},
                             f));
  }();
  return m;
}

const AugMatrix& cil2() {
  static const AugMatrix m = [] {
    MatrixFlags f;
    f.row_finite = true;
    return declare(AugMatrix(
        "cil2",
        [](int n, int k) {
          Scalar sum = 0;
          for (int j = -1; j <= n; ++j) sum += Scalar(binomial(n + 1, j + 1)) * breve_cil2_formula(j, k);
          return sum;
        },
        {[](int n) { return Extent{-1, 2 * n + 1}; },
         [](int k) { return Extent{cil2_first_row(k), kUnbounded}; }},
        f));
  }();
  return m;
}

const AugMatrix& cil2_partial() {
  static const AugMatrix m = [] {
    MatrixFlags f;
    f.row_finite = true;
    return declare(AugMatrix(
        "cil2∂",
        [](int n, int k) {
          Scalar sum = 0;
          for (int j = -1; j <= n - 1; ++j) sum += Scalar(binomial(n + 1, j + 1)) * breve_cil2_formula(j, k);
          return sum;
        },
        {[](int n) { return Extent{-1, std::max(-1, 2 * n - 1)}; },
         [](int k) { return Extent{k <= -1 ? 0 : (k + 2) / 2, kUnbounded}; }},
        f));
  }();
  return m;
}

const AugMatrix& cad_plus() {
  static const AugMatrix m = declare(AugMatrix(
      "cad+", [](int n, int p) { return Scalar(cad_plus_entry(n, p)); },
      {[](int n) { return Extent{-1, n}; }, [](int p) { return Extent{p, kUnbounded}; }}, lower_flags(0)));
  return m;
}

const AugMatrix& breve_cad_plus() {
  static const AugMatrix m = declare(AugMatrix(
      "breve-cad+", [](int n, int p) { return Scalar(breve_cad_plus_entry(n, p)); },
      {[](int n) { return n == -1 ? Extent{-1, -1} : Extent{0, n}; },
       [](int p) { return p == -1 ? Extent{-1, -1} : Extent{p, kUnbounded}; }},
      lower_flags(0)));
  return m;
}

const AugMatrix& cad() {
  static const AugMatrix m = declare(AugMatrix(
      "cad",
      [](int n, int p) {
        BigInt v = cad_plus_entry(n, p);
        if (p >= 0) v += cad_plus_entry(n, p - 1);
        return Scalar(v);
      },
      {[](int n) { return Extent{-1, n + 1}; }, [](int p) { return Extent{std::max(-1, p - 1), kUnbounded}; }},
      lower_flags(1)));
  return m;
}

namespace {

struct Entry {
  const char* name;
  const AugMatrix& (*get)();
};

const Entry kRegistry[] = {
    {"bin", bin},
    {"bin-inv", bin_inv},
    {"breve-cil", breve_cil},
    {"cil", cil},
    {"cil-partial", cil_partial},
    {"breve-cil0", breve_cil0},
    {"cil0", cil0},
    {"cil0-partial", cil0_partial},
    {"breve-cil2", breve_cil2},
    {"cil2", cil2},
    {"cil2-partial", cil2_partial},
    {"cad+", cad_plus},
    {"breve-cad+", breve_cad_plus},
    {"cad", cad},
};

}  // namespace

std::optional<AugMatrix> named_matrix(std::string_view name) {
  for (const auto& e : kRegistry)
    if (name == e.name) return e.get();
  return std::nullopt;
}

const std::vector<std::string>& named_matrix_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kRegistry) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

}  // namespace augsimp
