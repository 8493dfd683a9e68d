#include "doctest.h"

#include "augsimp/errors.hpp"
#include "augsimp/matrix.hpp"
#include "augsimp/named_matrices.hpp"

using namespace augsimp;

namespace {

Scalar choose(long p, long q) {
  if (q < 0 || p < 0 || q > p) return 0;
  Scalar r = 1;
  for (long k = 0; k < q; ++k) r = r * (p - k) / (k + 1);
  return r;
}

// |breve-Cil Γ₊[n]|: n+2 on the diagonal, n+1 just above it.
Scalar breve_cil_oracle(int n, int m) {
  if (n == -1) return m == -1 ? 1 : 0;
  if (m == n) return n + 2;
  if (m == n + 1) return n + 1;
  return 0;
}

// Binomially weighted sum of breve rows -1..last.
Scalar weighted(int n, int m, int last, Scalar (*breve)(int, int)) {
  Scalar sum = 0;
  for (int j = -1; j <= last; ++j) sum += choose(n + 1, j + 1) * breve(j, m);
  return sum;
}

}  // namespace

TEST_CASE("bin and its inverse") {
  for (int i = -1; i <= 20; ++i)
    for (int j = -1; j <= 20; ++j) {
      CHECK(bin()(i, j) == choose(i + 1, j + 1));
      CHECK(bin_inv()(i, j) == ((i - j) % 2 ? -1 : 1) * choose(i + 1, j + 1));
    }
  CHECK(bin().flags().lower_triangular);
  CHECK(bin().flags().row_finite);
  CHECK(bin().flags().column_finite == false);
}

TEST_CASE("named matrix rows") {
  CHECK(cil().row(3) == AugSequence{1, 8, 22, 28, 17, 4});
  CHECK(cil0_partial().row(4) == AugSequence{1, 10, 30, 40, 25});
  CHECK(breve_cil2().row(2) == AugSequence{0, 0, 0, 8, 12, 6, 1});
  CHECK(cad().row(2) == AugSequence{1, 8, 19, 18, 6});
  CHECK(named_matrix("cad+")->row(5) == cad_plus().row(5));
  CHECK_FALSE(named_matrix("cil3").has_value());
  CHECK(named_matrix_names().size() == 14);
}

TEST_CASE("cylinder matrices against the breve recurrences") {
  for (int n = -1; n <= 12; ++n)
    for (int m = -1; m <= 14; ++m) {
      CHECK(breve_cil()(n, m) == breve_cil_oracle(n, m));
      CHECK(cil_partial()(n, m) == weighted(n, m, n - 1, breve_cil_oracle));
      CHECK(cil()(n, m) == weighted(n, m, n, breve_cil_oracle));
      CHECK(breve_cil0()(n, m) == (n == m ? Scalar(n + 2) : Scalar(0)));
      CHECK(cil0()(n, m) - cil0_partial()(n, m) == breve_cil0()(n, m));
    }
}

TEST_CASE("cil2 entries are binomial(2n+2, m+1)") {
  for (int n = -1; n <= 15; ++n) {
    const AugSequence square = seq_join(gamma_seq(n), gamma_seq(n));
    for (int m = -1; m <= 2 * n + 3; ++m) {
      CHECK(cil2()(n, m) == square[m]);
      CHECK(cil2()(n, m) == choose(2 * n + 2, m + 1));
      CHECK(cil2()(n, m) == cil2_partial()(n, m) + breve_cil2()(n, m));
    }
  }
}

TEST_CASE("breve cil2 rows recover the full rows") {
  for (int n = -1; n <= 10; ++n)
    for (int m = -1; m <= 2 * n + 3; ++m) {
      Scalar sum = 0;
      for (int j = -1; j <= n; ++j) sum += choose(n + 1, j + 1) * breve_cil2()(j, m);
      CHECK(sum == choose(2 * n + 2, m + 1));
    }
}

TEST_CASE("matmul") {
  auto id = matmul(bin(), bin_inv());
  for (int i = -1; i <= 20; ++i)
    for (int j = -1; j <= 20; ++j) CHECK(id(i, j) == (i == j ? 1 : 0));
  auto cad_from_breve = matmul(bin(), breve_cad_plus());
  auto breve_from_cil = matmul(bin_inv(), cil());
  for (int i = -1; i <= 10; ++i)
    for (int j = -1; j <= 10; ++j) {
      CHECK(cad_from_breve(i, j) == cad_plus()(i, j));
      CHECK(breve_from_cil(i, j) == breve_cil()(i, j));
    }
  CHECK(cad_from_breve.flags().row_finite);
  CHECK_THROWS_AS(matmul(invert_triangular(breve_cil()), cil()), DivergentSum);
}

TEST_CASE("shifting matrix") {
  CHECK(dot(cad_plus().row(2), shifting_matrix(cone_unit())) == AugSequence{1, 8, 19, 18, 6});
  auto unit = shifting_matrix(AugSequence::unit(-1));
  for (int i = -1; i <= 10; ++i)
    for (int j = -1; j <= 10; ++j) CHECK(unit(i, j) == (i == j ? 1 : 0));
  CHECK(shifting_matrix(AugSequence{1, 1})(0, 1) == 1);
  AugSequence a{2, 0, 5}, b{1, 3, 3, 1};
  CHECK(dot(a, shifting_matrix(b)) == seq_join(a, b));
  for (int n = -1; n <= 6; ++n) CHECK(dot(cad_plus().row(n), shifting_matrix(cone_unit())) == cad().row(n));
}

TEST_CASE("dot") {
  AugSequence h{1, 6, 6};
  CHECK(dot(h, breve_cil()) == AugSequence{1, 12, 24, 12});
  CHECK(dot(h, breve_cad_plus()) == AugSequence{1, 12, 12});
  for (int k = -1; k <= 6; ++k) CHECK(dot(AugSequence::unit(k), cil()) == cil().row(k));
  auto lazy = AugSequence::generated([](int) { return Scalar(1); });
  CHECK_THROWS_AS(dot(lazy, bin()), DivergentSum);
  auto ones = dot(lazy, breve_cil0());
  CHECK(ones[4] == 6);
}

TEST_CASE("triangle action") {
  AugSequence a{3, 1, 4, 1, 5};
  CHECK(triangle_action(a, bin()) == a);
  CHECK(triangle_action(gamma_seq(2), cad_plus()) == AugSequence{1, 7, 12, 6});
  CHECK(triangle_action(AugSequence{1, 6, 6}, cil2()) == AugSequence{1, 12, 30, 24, 6});
  CHECK(triangle_action(AugSequence{1, 6, 6}, cil()) == dot(AugSequence{1, 6, 6}, breve_cil()));
  for (int n = -1; n <= 6; ++n) CHECK(triangle_action(gamma_seq(n), cil()) == cil().row(n));
}

TEST_CASE("invert_triangular") {
  auto inv = invert_triangular(bin());
  for (int i = -1; i <= 20; ++i)
    for (int j = -1; j <= 20; ++j) CHECK(inv(i, j) == bin_inv()(i, j));
  auto id = invert_triangular(identity_matrix());
  for (int i = -1; i <= 8; ++i)
    for (int j = -1; j <= 8; ++j) CHECK(id(i, j) == (i == j ? 1 : 0));
  auto cil0_inv = invert_triangular(breve_cil0());
  for (int n = -1; n <= 30; ++n) CHECK(cil0_inv(n, n) == Scalar(1, n + 2));
  auto breve_inv = invert_triangular(breve_cil());
  auto product = matmul(breve_inv, breve_cil());
  for (int i = -1; i <= 16; ++i)
    for (int j = -1; j <= 16; ++j) CHECK(product(i, j) == (i == j ? 1 : 0));
  CHECK_THROWS_AS(invert_triangular(unit_matrix(0, 0)), SingularDiagonal);
}

TEST_CASE("iterate_operator") {
  for (int k = -2; k <= 3; ++k) {
    auto power = iterate_operator(breve_cil0(), k);
    for (int m = -1; m <= 10; ++m) {
      Scalar want = 1;
      for (int t = 0; t < std::abs(k); ++t) want *= m + 2;
      CHECK(power(m, m) == (k < 0 ? 1 / want : want));
    }
  }
  auto once = iterate_operator(cil(), 1);
  auto zero = iterate_operator(cil(), 0);
  for (int i = -1; i <= 8; ++i)
    for (int j = -1; j <= 8; ++j) {
      CHECK(once(i, j) == cil()(i, j));
      CHECK(zero(i, j) == (i == j ? 1 : 0));
    }
  CHECK(dot(AugSequence::unit(-1), iterate_operator(breve_cil(), 2)) == AugSequence::unit(-1));
}

TEST_CASE("sd_seq") {
  CHECK(sd_seq(gamma_seq(3)) == AugSequence{1, 15, 50, 60, 24});
  CHECK(sd_seq(AugSequence::unit(-1)) == AugSequence::unit(-1));
  CHECK(sd_seq(AugSequence{1, 6, 6}) == AugSequence{1, 12, 12});
  CHECK_THROWS_AS(sd_seq(AugSequence::generated([](int) { return Scalar(1); })), InfiniteInput);
}

TEST_CASE("declared structure of every named matrix") {
  for (const auto& name : named_matrix_names()) {
    CAPTURE(name);
    CHECK_FALSE(audit_structure(*named_matrix(name), 14).has_value());
  }
  CHECK(breve_cad_plus().flags().row_finite);
  CHECK_FALSE(breve_cad_plus().flags().column_finite);
  CHECK(breve_cil().flags().upper_triangular);
}

TEST_CASE("audit catches a wrong envelope") {
  AugMatrix liar("liar", [](int i, int j) { return Scalar(i == j + 1 ? 1 : 0); },
                 Support{[](int i) { return Extent{i, i}; }, [](int j) { return Extent{j, j}; }}, MatrixFlags{});
  CHECK(audit_structure(liar, 6).has_value());
}
