#include "augsimp/combinat.hpp"

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace augsimp {

BigInt binomial(long p, long q) {
  if (p < 0 || q < 0 || q > p) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

namespace {

class StirlingTable {
 public:
  BigInt get(long p, long q) {
    if (p < 0 || q < 0 || q > p) return 0;
    {
      std::shared_lock lock(mutex_);
      if (p < static_cast<long>(rows_.size())) return rows_[p][q];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) <= p) {
      long r = static_cast<long>(rows_.size());
      std::vector<BigInt> row(r + 1);
      if (r == 0) {
        row[0] = 1;
      } else {
        const auto& prev = rows_[r - 1];
        row[0] = 0;
        for (long k = 1; k <= r; ++k) {
          BigInt left = k < r ? prev[k] : BigInt(0);
          row[k] = k * left + prev[k - 1];
        }
      }
      rows_.push_back(std::move(row));
    }
    return rows_[p][q];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

BigInt stirling2(long p, long q) { return stirling_table().get(p, q); }

BigInt breve_cad_plus_entry(Nat1 n, Nat1 p) {
  return factorial(p + 1) * stirling2(n + 1, p + 1);
}

BigInt cad_plus_entry(Nat1 n, Nat1 p) {
  BigInt sum = 0;
  for (int k = p; k <= n; ++k) sum += binomial(n + 1, k + 1) * breve_cad_plus_entry(k, p);
  return sum;
}

std::vector<BigInt> strict_chain_counts(Nat1 n, Anchor anchor) {
  if (n > 16) throw std::domain_error("chain enumeration is limited to n <= 16");
  const int width = n + 1;
  const std::uint32_t full = (std::uint32_t{1} << width) - 1;
  const int max_len = width;  // a strict chain of nonempty subsets has at most n+1 members
  // ways[mask * (max_len + 1) + len]: chains of length len whose top member is mask.
  std::vector<BigInt> ways(static_cast<std::size_t>(full + 1) * (max_len + 1));
  auto at = [&](std::uint32_t mask, int len) -> BigInt& {
    return ways[static_cast<std::size_t>(mask) * (max_len + 1) + len];
  };
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    at(mask, 1) = 1;
    for (std::uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      for (int len = 2; len <= max_len; ++len) {
        const BigInt& w = at(sub, len - 1);
        if (w != 0) at(mask, len) += w;
      }
    }
  }
  std::vector<BigInt> counts(width + 1);
  counts[0] = (anchor == Anchor::unanchored || n == -1) ? 1 : 0;
  for (int len = 1; len <= max_len; ++len) {
    if (anchor == Anchor::anchored) {
      counts[len] = at(full, len);
    } else {
      BigInt sum = 0;
      for (std::uint32_t mask = 1; mask <= full; ++mask) sum += at(mask, len);
      counts[len] = sum;
    }
  }
  return counts;
}

BigInt enumerate_strict_chains(Nat1 n, Nat1 p, Anchor anchor) {
  if (p > n) return 0;
  return strict_chain_counts(n, anchor)[p + 1];
}

namespace {

// Restricted growth strings: a[0] = 0, a[k] <= 1 + max(a[0..k-1]).
void grow(int pos, int p, int used, int q, BigInt& count) {
  if (used > q || used + (p - pos) < q) return;
  if (pos == p) {
    if (used == q) ++count;
    return;
  }
  for (int block = 0; block <= used; ++block) grow(pos + 1, p, block == used ? used + 1 : used, q, count);
}

}  // namespace

BigInt count_set_partitions(int p, int q) {
  if (p < 0 || q < 0) return 0;
  if (p == 0) return q == 0 ? 1 : 0;
  BigInt count = 0;
  grow(0, p, 0, q, count);
  return count;
}

}  // namespace augsimp
