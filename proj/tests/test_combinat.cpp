#include <functional>
#include <stdexcept>

#include "doctest.h"

#include "augsimp/combinat.hpp"

using namespace augsimp;

namespace {

// p(p-1)...(p-q+1)/q!
BigInt falling_binomial(long p, long q) {
  if (q < 0 || p < 0 || q > p) return 0;
  BigInt num = 1, den = 1;
  for (long k = 0; k < q; ++k) {
    num *= p - k;
    den *= k + 1;
  }
  return num / den;
}

// S(p, q) = (1/q!) sum_k (-1)^k C(q, k) (q - k)^p
BigInt stirling_explicit(long p, long q) {
  if (q < 0 || p < 0) return 0;
  if (p == 0 && q == 0) return 1;
  BigInt sum = 0, qfact = 1;
  for (long k = 1; k <= q; ++k) qfact *= k;
  for (long k = 0; k <= q; ++k) {
    BigInt power = 1;
    for (long t = 0; t < p; ++t) power *= q - k;
    BigInt term = falling_binomial(q, k) * power;
    sum += (k % 2 ? -term : term);
  }
  return sum / qfact;
}

// Counts chains N_0 < ... < N_p of nonempty subsets of {0..n} by recursion on
// the last member; anchored chains must end at the full set.
BigInt brute_chains(int n, int p, bool anchored) {
  if (p == -1) return anchored ? BigInt(n == -1 ? 1 : 0) : BigInt(1);
  const unsigned full = (1u << (n + 1)) - 1;
  std::function<BigInt(unsigned, int)> below = [&](unsigned top, int len) -> BigInt {
    if (len == 1) return 1;
    BigInt total = 0;
    for (unsigned s = (top - 1) & top; s != 0; s = (s - 1) & top) total += below(s, len - 1);
    return total;
  };
  if (anchored) return n < 0 ? BigInt(0) : below(full, p + 1);
  BigInt total = 0;
  for (unsigned s = 1; s <= full && n >= 0; ++s) total += below(s, p + 1);
  return total;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(10, 5) == falling_binomial(10, 5));
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -1) == 0);
  for (long p = 0; p <= 40; ++p)
    for (long q = -2; q <= p + 2; ++q) CHECK(binomial(p, q) == falling_binomial(p, q));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  BigInt f = 1;
  for (long n = 1; n <= 30; ++n) {
    f *= n;
    CHECK(factorial(n) == f);
  }
}

TEST_CASE("stirling2") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 5) == 0);
  CHECK(stirling2(4, 2) == count_set_partitions(4, 2));
  CHECK(stirling2(4, 2) == 7);
  for (long p = 0; p <= 25; ++p)
    for (long q = 0; q <= p + 1; ++q) CHECK(stirling2(p, q) == stirling_explicit(p, q));
}

TEST_CASE("set partition enumeration") {
  CHECK(count_set_partitions(0, 0) == 1);
  CHECK(count_set_partitions(3, 0) == 0);
  CHECK(count_set_partitions(5, 5) == 1);
  for (int p = 1; p <= 8; ++p)
    for (int q = 0; q <= p; ++q) CHECK(count_set_partitions(p, q) == stirling_explicit(p, q));
}

TEST_CASE("breve cad plus entries") {
  CHECK(breve_cad_plus_entry(3, 2) == 36);
  CHECK(breve_cad_plus_entry(-1, -1) == 1);
  CHECK(breve_cad_plus_entry(8, 3) == brute_chains(8, 3, true));
  CHECK(breve_cad_plus_entry(2, 5) == 0);
  for (int n = -1; n <= 7; ++n)
    for (int p = -1; p <= n + 1; ++p) CHECK(breve_cad_plus_entry(n, p) == brute_chains(n, p, true));
}

TEST_CASE("cad plus entries") {
  CHECK(cad_plus_entry(3, 1) == 50);
  CHECK(cad_plus_entry(6, 6) == 5040);
  CHECK(cad_plus_entry(5, 2) == 2100);
  for (int n = -1; n <= 7; ++n)
    for (int p = -1; p <= n + 1; ++p) CHECK(cad_plus_entry(n, p) == brute_chains(n, p, false));
}

TEST_CASE("strict chain enumeration") {
  CHECK(enumerate_strict_chains(2, 1, Anchor::unanchored) == 12);
  CHECK(enumerate_strict_chains(4, 2, Anchor::anchored) == 150);
  for (int n = -1; n <= 6; ++n) CHECK(enumerate_strict_chains(n, -1, Anchor::unanchored) == 1);
  for (int n = -1; n <= 8; ++n) {
    auto anchored = strict_chain_counts(n, Anchor::anchored);
    auto free = strict_chain_counts(n, Anchor::unanchored);
    REQUIRE(anchored.size() == static_cast<std::size_t>(n + 2));
    for (int p = -1; p <= n; ++p) {
      CHECK(anchored[p + 1] == factorial(p + 1) * stirling_explicit(n + 1, p + 1));
      if (n <= 6) CHECK(free[p + 1] == brute_chains(n, p, false));
    }
  }
  CHECK_THROWS_AS(strict_chain_counts(17, Anchor::anchored), std::domain_error);
}

TEST_CASE("indices below -1 are rejected") {
  CHECK_THROWS_AS(breve_cad_plus_entry(-2, 0), std::domain_error);
  CHECK_THROWS_AS(cad_plus_entry(0, -2), std::domain_error);
}
